#include "rf/invariants.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>

namespace rf {

namespace {

void check_exact_limit(const SimpleGraph& g) {
    if (g.order > kMaxExactOrder)
        throw std::invalid_argument("order exceeds exact-computation limit of " +
                                    std::to_string(kMaxExactOrder));
}

// only vertices above v remain candidates, avoiding permuted repeats
std::uint64_t above_mask(int v) { return ~((std::uint64_t{2} << v) - 1); }

int clique_search(const SimpleGraph& g, std::uint64_t cand, int depth, int best) {
    if (!cand) return depth;
    if (depth + std::popcount(cand) <= best) return best;
    std::uint64_t c = cand;
    while (c) {
        int v = std::countr_zero(c);
        c &= c - 1;
        int r = clique_search(g, cand & g.adj[v] & above_mask(v), depth + 1, best);
        if (r > best) best = r;
        cand &= ~(std::uint64_t{1} << v);
    }
    return best;
}

bool colorable_rec(const SimpleGraph& g, const std::vector<int>& order_, std::size_t at,
                   std::vector<int>& color, int used, int k) {
    if (at == order_.size()) return true;
    int v = order_[at];
    std::uint64_t nb = g.adj[v];
    std::uint64_t taken = 0;  // bit c set iff some neighbour already has color c+1
    std::uint64_t m = nb;
    while (m) {
        int u = std::countr_zero(m);
        m &= m - 1;
        if (color[u] > 0) taken |= std::uint64_t{1} << (color[u] - 1);
    }
    int limit = std::min(used + 1, k);
    for (int c = 1; c <= limit; ++c) {
        if ((taken >> (c - 1)) & 1) continue;
        color[v] = c;
        if (colorable_rec(g, order_, at + 1, color, std::max(used, c), k)) return true;
        color[v] = 0;
    }
    return false;
}

std::vector<int> coloring_order(const SimpleGraph& g) {
    // classic saturation-flavoured static order: degree descending
    std::vector<int> order_(g.order);
    for (int v = 0; v < g.order; ++v) order_[v] = v;
    std::sort(order_.begin(), order_.end(),
              [&](int a, int b) { return g.degree(a) > g.degree(b); });
    return order_;
}

bool is_colorable(const SimpleGraph& g, int k) {
    if (g.order == 0) return true;
    if (k <= 0) return false;
    std::vector<int> color(g.order, 0);
    return colorable_rec(g, coloring_order(g), 0, color, 0, k);
}

}  // namespace

int clique_number(const SimpleGraph& g) {
    if (g.order == 0) return 0;
    std::uint64_t all = (g.order == 64) ? ~std::uint64_t{0}
                                        : ((std::uint64_t{1} << g.order) - 1);
    return clique_search(g, all, 0, 0);
}

int chromatic_number(const SimpleGraph& g) {
    if (g.order == 0) return 0;
    int lo = clique_number(g);
    for (int k = std::max(1, lo); k <= g.order; ++k)
        if (is_colorable(g, k)) return k;
    return g.order;
}

void for_each_proper_coloring(const SimpleGraph& g, int max_colors,
                              const std::function<bool(std::span<const int>)>& visit) {
    std::vector<int> color(g.order, 0);
    auto order_ = coloring_order(g);
    // iterative-friendly recursion over the static order
    std::function<bool(std::size_t, int)> rec = [&](std::size_t at, int used) -> bool {
        if (at == order_.size()) return visit(std::span<const int>(color));
        int v = order_[at];
        std::uint64_t taken = 0;
        std::uint64_t m = g.adj[v];
        while (m) {
            int u = std::countr_zero(m);
            m &= m - 1;
            if (color[u] > 0) taken |= std::uint64_t{1} << (color[u] - 1);
        }
        int limit = std::min(used + 1, max_colors);
        for (int c = 1; c <= limit; ++c) {
            if ((taken >> (c - 1)) & 1) continue;
            color[v] = c;
            if (!rec(at + 1, std::max(used, c))) { color[v] = 0; return false; }
            color[v] = 0;
        }
        return true;
    };
    if (g.order == 0) {
        visit(std::span<const int>(color));
        return;
    }
    rec(0, 0);
}

int chromatic_surplus(const SimpleGraph& g) {
    if (g.order == 0) return 0;
    int chi = chromatic_number(g);
    int best = g.order;
    for_each_proper_coloring(g, chi, [&](std::span<const int> color) {
        std::vector<int> count(chi, 0);
        for (int c : color) ++count[c - 1];
        // colorings using fewer than chi colors leave a trailing zero class
        if (*std::min_element(count.begin(), count.end()) == 0) return true;
        best = std::min(best, *std::min_element(count.begin(), count.end()));
        return best > 1;  // 1 is the floor, stop early
    });
    return best;
}

GraphInvariants invariants(const SimpleGraph& g) {
    check_exact_limit(g);
    GraphInvariants inv;
    auto comps = component_masks(g);
    inv.components = static_cast<int>(comps.size());
    for (auto m : comps) inv.component_orders.push_back(std::popcount(m));
    std::sort(inv.component_orders.begin(), inv.component_orders.end());
    inv.chromatic_number = chromatic_number(g);
    inv.chromatic_surplus = chromatic_surplus(g);
    inv.sigma3 = (inv.chromatic_number == 3) ? inv.chromatic_surplus : 0;
    inv.clique_number = clique_number(g);
    inv.is_connected = is_connected(g);
    inv.is_bipartite = inv.chromatic_number <= 2;
    inv.has_isolated = false;
    for (int v = 0; v < g.order; ++v)
        if (g.adj[v] == 0) inv.has_isolated = true;
    return inv;
}

PartiteProfile partite_profile(const SimpleGraph& g) {
    if (chromatic_number(g) > 2) throw std::invalid_argument("graph is not bipartite");
    int n = g.order;
    // achievable sizes of one side, as a bitset; components with edges
    // contribute one of their two class sizes, isolated vertices either side
    std::vector<std::uint64_t> reach{1};  // reach[i] bit s =: s achievable using first i blocks
    auto add_block = [&](int a, int b) {
        std::uint64_t cur = reach.back();
        std::uint64_t next = (cur << a) | (cur << b);
        reach.push_back(next);
    };
    for (auto m : component_masks(g)) {
        SimpleGraph comp = induced_subgraph(g, m);
        if (comp.edge_count() == 0) {
            add_block(0, 1);
            continue;
        }
        // unique bipartition of a connected component: 2-color it
        std::vector<int> side(comp.order, -1);
        side[0] = 0;
        std::vector<int> stack{0};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            std::uint64_t nb = comp.adj[v];
            while (nb) {
                int u = std::countr_zero(nb);
                nb &= nb - 1;
                if (side[u] < 0) {
                    side[u] = 1 - side[v];
                    stack.push_back(u);
                }
            }
        }
        int a = static_cast<int>(std::count(side.begin(), side.end(), 0));
        add_block(a, comp.order - a);
    }
    std::uint64_t ach = reach.back();
    PartiteProfile p;
    p.s = n;
    p.s_star = -1;
    for (int v = 0; v <= n; ++v) {
        if (!((ach >> v) & 1)) continue;
        int small = std::min(v, n - v);
        p.s = std::min(p.s, small);
        p.s_star = std::max(p.s_star, small);
    }
    p.t = n - p.s;
    p.t_star = n - p.s_star;
    return p;
}

CriticalEdgeResult is_color_critical(const SimpleGraph& g, int r) {
    check_exact_limit(g);
    CriticalEdgeResult res;
    if (chromatic_number(g) != r) return res;
    for (auto [u, v] : g.edges()) {
        SimpleGraph h = g;
        h.remove_edge(u, v);
        if (chromatic_number(h) == r - 1) {
            res.critical = true;
            res.witness_edge = {u, v};
            return res;
        }
    }
    return res;
}

std::pair<SimpleGraph, int> strip_isolated(const SimpleGraph& g) {
    std::uint64_t keep = 0;
    for (int v = 0; v < g.order; ++v)
        if (g.adj[v] != 0) keep |= std::uint64_t{1} << v;
    int removed = g.order - std::popcount(keep);
    SimpleGraph out = induced_subgraph(g, keep);
    out.label = g.label;
    return {out, removed};
}

std::vector<std::vector<int>> proper_coloring_size_vectors(const SimpleGraph& g, int p) {
    std::set<std::vector<int>> seen;
    for_each_proper_coloring(g, p, [&](std::span<const int> color) {
        std::vector<int> count(p, 0);
        for (int c : color) ++count[c - 1];
        if (std::find(count.begin(), count.end(), 0) != count.end()) return true;
        std::sort(count.begin(), count.end(), std::greater<>());
        seen.insert(count);
        return true;
    });
    return {seen.begin(), seen.end()};
}

std::optional<std::vector<int>> homological_vector(std::span<const SimpleGraph> graphs) {
    if (graphs.empty()) return std::nullopt;
    for (const auto& g : graphs) {
        if (g.order != graphs[0].order)
            throw std::invalid_argument("graphs must share one order");
        if (g.order > 12) throw std::invalid_argument("order exceeds limit of 12");
        if (g.is_empty()) throw std::invalid_argument("graphs must be nonempty");
    }
    int p = 0;
    for (const auto& g : graphs) p = std::max(p, chromatic_number(g));
    std::set<std::vector<int>> common;
    bool first = true;
    for (const auto& g : graphs) {
        auto vecs = proper_coloring_size_vectors(g, p);
        std::set<std::vector<int>> cur(vecs.begin(), vecs.end());
        if (first) {
            common = std::move(cur);
            first = false;
        } else {
            std::set<std::vector<int>> inter;
            std::set_intersection(common.begin(), common.end(), cur.begin(), cur.end(),
                                  std::inserter(inter, inter.begin()));
            common = std::move(inter);
        }
        if (common.empty()) return std::nullopt;
    }
    return *common.begin();
}

}  // namespace rf
