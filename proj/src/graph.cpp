#include "rf/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace rf {

int popcount64(std::uint64_t x) { return std::popcount(x); }

int SimpleGraph::degree(int v) const { return std::popcount(adj[v]); }

int SimpleGraph::edge_count() const {
    long long twice = 0;
    for (int v = 0; v < order; ++v) twice += std::popcount(adj[v]);
    return static_cast<int>(twice / 2);
}

std::vector<std::pair<int, int>> SimpleGraph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < order; ++u)
        for (int v = u + 1; v < order; ++v)
            if (has_edge(u, v)) out.emplace_back(u, v);
    return out;
}

// graph6: header byte 63+n (n <= 62), then the upper triangle read column by
// column ((0,1),(0,2),(1,2),(0,3),...) packed 6 bits per byte, high bit first,
// zero-padded.
SimpleGraph parse_graph6(const std::string& text) {
    if (text.empty()) throw Graph6Error("empty graph6 string", 0);
    unsigned char h = static_cast<unsigned char>(text[0]);
    if (h == 126) throw Graph6Error("orders above 62 are not supported", 0);
    if (h < 63 || h > 125) throw Graph6Error("malformed header byte", 0);
    int n = h - 63;
    SimpleGraph g(n);
    long long bits_needed = static_cast<long long>(n) * (n - 1) / 2;
    std::size_t bytes_needed = static_cast<std::size_t>((bits_needed + 5) / 6);
    if (text.size() < 1 + bytes_needed)
        throw Graph6Error("truncated bit vector", text.size());
    if (text.size() > 1 + bytes_needed)
        throw Graph6Error("trailing characters after bit vector", 1 + bytes_needed);
    long long bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            std::size_t at = 1 + static_cast<std::size_t>(bit / 6);
            unsigned char c = static_cast<unsigned char>(text[at]);
            if (c < 63 || c > 126) throw Graph6Error("out-of-range character", at);
            int v = c - 63;
            if ((v >> (5 - bit % 6)) & 1) g.add_edge(i, j);
        }
    }
    // padding bits must be zero for a bit-exact encoding
    if (bits_needed % 6 != 0) {
        std::size_t at = 1 + static_cast<std::size_t>((bits_needed - 1) / 6);
        int v = static_cast<unsigned char>(text[at]) - 63;
        int pad = static_cast<int>(6 - bits_needed % 6);
        if (v & ((1 << pad) - 1)) throw Graph6Error("nonzero padding bits", at);
    }
    return g;
}

std::string to_graph6(const SimpleGraph& g) {
    if (g.order > 62) throw std::invalid_argument("graph6 output limited to order 62");
    std::string out(1, static_cast<char>(63 + g.order));
    int acc = 0, nbits = 0;
    for (int j = 1; j < g.order; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits) out.push_back(static_cast<char>(63 + (acc << (6 - nbits))));
    return out;
}

SimpleGraph empty_graph(int n) { return SimpleGraph(n); }

SimpleGraph complete_graph(int n) {
    SimpleGraph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

SimpleGraph path_graph(int n) {
    SimpleGraph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

SimpleGraph cycle_graph(int n) {
    SimpleGraph g = path_graph(n);
    if (n >= 3) g.add_edge(0, n - 1);
    return g;
}

SimpleGraph complete_bipartite(int a, int b) {
    SimpleGraph g(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
    return g;
}

SimpleGraph star_graph(int leaves) { return complete_bipartite(1, leaves); }

SimpleGraph matching_graph(int m) {
    SimpleGraph g(2 * m);
    for (int i = 0; i < m; ++i) g.add_edge(2 * i, 2 * i + 1);
    return g;
}

SimpleGraph disjoint_union(const SimpleGraph& a, const SimpleGraph& b) {
    if (a.order + b.order > 62) throw std::invalid_argument("union exceeds order 62");
    SimpleGraph g(a.order + b.order);
    for (int v = 0; v < a.order; ++v) g.adj[v] = a.adj[v];
    for (int v = 0; v < b.order; ++v) g.adj[a.order + v] = b.adj[v] << a.order;
    return g;
}

SimpleGraph complement(const SimpleGraph& g) {
    SimpleGraph c(g.order);
    std::uint64_t all = (g.order == 64) ? ~std::uint64_t{0}
                                        : ((std::uint64_t{1} << g.order) - 1);
    for (int v = 0; v < g.order; ++v)
        c.adj[v] = (~g.adj[v] & all) & ~(std::uint64_t{1} << v);
    return c;
}

SimpleGraph induced_subgraph(const SimpleGraph& g, std::uint64_t vertex_mask) {
    std::vector<int> keep;
    for (int v = 0; v < g.order; ++v)
        if ((vertex_mask >> v) & 1) keep.push_back(v);
    SimpleGraph s(static_cast<int>(keep.size()));
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (std::size_t j = i + 1; j < keep.size(); ++j)
            if (g.has_edge(keep[i], keep[j])) s.add_edge(static_cast<int>(i), static_cast<int>(j));
    return s;
}

std::vector<std::uint64_t> component_masks(const SimpleGraph& g) {
    std::vector<std::uint64_t> comps;
    std::uint64_t seen = 0;
    for (int v = 0; v < g.order; ++v) {
        if ((seen >> v) & 1) continue;
        std::uint64_t comp = std::uint64_t{1} << v;
        std::uint64_t frontier = comp;
        while (frontier) {
            std::uint64_t next = 0;
            std::uint64_t f = frontier;
            while (f) {
                int u = std::countr_zero(f);
                f &= f - 1;
                next |= g.adj[u];
            }
            frontier = next & ~comp;
            comp |= next;
        }
        seen |= comp;
        comps.push_back(comp);
    }
    return comps;
}

int component_count(const SimpleGraph& g) {
    return static_cast<int>(component_masks(g).size());
}

std::vector<SimpleGraph> split_components(const SimpleGraph& g) {
    std::vector<SimpleGraph> out;
    for (auto m : component_masks(g)) out.push_back(induced_subgraph(g, m));
    return out;
}

bool is_connected(const SimpleGraph& g) {
    if (g.order <= 1) return true;
    return component_count(g) == 1;
}

namespace {

// backtracking embedder; pattern vertices are placed in the supplied order
bool extend_map(const SimpleGraph& host, const SimpleGraph& pattern,
                const std::vector<int>& order_, std::size_t at, std::vector<int>& map,
                std::uint64_t used) {
    if (at == order_.size()) return true;
    int p = order_[at];
    // candidates must cover the already-placed neighbours of p
    std::uint64_t cand = ~used;
    if (host.order < 64) cand &= (std::uint64_t{1} << host.order) - 1;
    std::uint64_t nb = pattern.adj[p];
    while (nb) {
        int q = std::countr_zero(nb);
        nb &= nb - 1;
        if (map[q] >= 0) cand &= host.adj[map[q]];
    }
    int pdeg = pattern.degree(p);
    while (cand) {
        int h = std::countr_zero(cand);
        cand &= cand - 1;
        if (host.degree(h) < pdeg) continue;
        map[p] = h;
        if (extend_map(host, pattern, order_, at + 1, map, used | (std::uint64_t{1} << h)))
            return true;
        map[p] = -1;
    }
    return false;
}

std::vector<int> placement_order(const SimpleGraph& pattern) {
    // per component: start at a max-degree vertex, then grow by connectivity
    std::vector<int> order_;
    std::uint64_t placed = 0;
    for (std::uint64_t comp : component_masks(pattern)) {
        std::uint64_t rest = comp;
        while (rest) {
            int best = -1, best_score = -1;
            std::uint64_t r = rest;
            while (r) {
                int v = std::countr_zero(r);
                r &= r - 1;
                int attached = std::popcount(pattern.adj[v] & placed);
                int score = attached * 64 + pattern.degree(v);
                if (score > best_score) { best_score = score; best = v; }
            }
            order_.push_back(best);
            placed |= std::uint64_t{1} << best;
            rest &= ~(std::uint64_t{1} << best);
        }
    }
    return order_;
}

}  // namespace

std::optional<std::vector<int>> find_subgraph(const SimpleGraph& host, const SimpleGraph& pattern) {
    if (pattern.order > host.order) return std::nullopt;
    std::vector<int> map(pattern.order, -1);
    if (pattern.order == 0) return map;
    auto order_ = placement_order(pattern);
    if (!extend_map(host, pattern, order_, 0, map, 0)) return std::nullopt;
    return map;
}

bool contains_subgraph(const SimpleGraph& host, const SimpleGraph& pattern) {
    return find_subgraph(host, pattern).has_value();
}

namespace {

bool extend_iso(const SimpleGraph& a, const SimpleGraph& b, int at, std::vector<int>& map,
                std::uint64_t used) {
    if (at == a.order) return true;
    for (int h = 0; h < b.order; ++h) {
        if ((used >> h) & 1) continue;
        if (a.degree(at) != b.degree(h)) continue;
        bool ok = true;
        for (int q = 0; q < at && ok; ++q)
            if (a.has_edge(at, q) != b.has_edge(h, map[q])) ok = false;
        if (!ok) continue;
        map[at] = h;
        if (extend_iso(a, b, at + 1, map, used | (std::uint64_t{1} << h))) return true;
        map[at] = -1;
    }
    return false;
}

}  // namespace

bool isomorphic(const SimpleGraph& a, const SimpleGraph& b) {
    if (a.order != b.order || a.edge_count() != b.edge_count()) return false;
    std::vector<int> da, db;
    for (int v = 0; v < a.order; ++v) da.push_back(a.degree(v));
    for (int v = 0; v < b.order; ++v) db.push_back(b.degree(v));
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return false;
    std::vector<int> map(a.order, -1);
    return extend_iso(a, b, 0, map, 0);
}

}  // namespace rf
