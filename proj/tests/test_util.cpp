#include "test_util.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "rf/invariants.hpp"

namespace oracle {

std::string g6_encode(const rf::SimpleGraph& g) {
    std::string bits;
    for (int col = 1; col < g.order; ++col)
        for (int row = 0; row < col; ++row) bits.push_back(g.has_edge(row, col) ? '1' : '0');
    while (bits.size() % 6 != 0) bits.push_back('0');
    std::string out(1, static_cast<char>(g.order + 63));
    for (std::size_t at = 0; at < bits.size(); at += 6) {
        int v = 0;
        for (int b = 0; b < 6; ++b) v = v * 2 + (bits[at + b] - '0');
        out.push_back(static_cast<char>(v + 63));
    }
    return out;
}

rf::SimpleGraph g6_decode(const std::string& s) {
    int n = s.at(0) - 63;
    std::string bits;
    for (std::size_t i = 1; i < s.size(); ++i) {
        int v = s[i] - 63;
        for (int b = 5; b >= 0; --b) bits.push_back(((v >> b) & 1) ? '1' : '0');
    }
    rf::SimpleGraph g(n);
    std::size_t at = 0;
    for (int col = 1; col < n; ++col)
        for (int row = 0; row < col; ++row)
            if (bits.at(at++) == '1') g.add_edge(row, col);
    return g;
}

namespace {

bool proper(const rf::SimpleGraph& g, const std::vector<int>& assign) {
    for (auto [u, v] : g.edges())
        if (assign[u] == assign[v]) return false;
    return true;
}

template <typename F>
void all_assignments(int order, int k, F&& f) {
    std::vector<int> a(order, 0);
    while (true) {
        f(a);
        int i = 0;
        while (i < order && a[i] == k - 1) a[i++] = 0;
        if (i == order) return;
        ++a[i];
    }
}

}  // namespace

int brute_chromatic(const rf::SimpleGraph& g) {
    if (g.order == 0) return 0;
    for (int k = 1; k <= g.order; ++k) {
        bool found = false;
        all_assignments(g.order, k, [&](const std::vector<int>& a) {
            if (!found && proper(g, a)) found = true;
        });
        if (found) return k;
    }
    return g.order;
}

int brute_surplus(const rf::SimpleGraph& g) {
    int chi = brute_chromatic(g);
    if (chi == 0) return 0;
    int best = g.order;
    all_assignments(g.order, chi, [&](const std::vector<int>& a) {
        if (!proper(g, a)) return;
        std::vector<int> count(chi, 0);
        for (int c : a) ++count[c];
        if (std::find(count.begin(), count.end(), 0) != count.end()) return;
        best = std::min(best, *std::min_element(count.begin(), count.end()));
    });
    return best;
}

std::vector<std::vector<int>> brute_size_vectors(const rf::SimpleGraph& g, int p) {
    std::set<std::vector<int>> seen;
    all_assignments(g.order, p, [&](const std::vector<int>& a) {
        if (!proper(g, a)) return;
        std::vector<int> count(p, 0);
        for (int c : a) ++count[c];
        if (std::find(count.begin(), count.end(), 0) != count.end()) return;
        std::sort(count.begin(), count.end(), std::greater<>());
        seen.insert(count);
    });
    return {seen.begin(), seen.end()};
}

namespace {

bool mono_map_search(const rf::ColoredHost& host, const rf::SimpleGraph& pattern, int color,
                     std::vector<int>& map, std::vector<bool>& used, int at) {
    if (at == pattern.order) return true;
    for (int h = 0; h < host.vertex_count(); ++h) {
        if (used[h]) continue;
        bool ok = true;
        for (int q = 0; q < at && ok; ++q) {
            if (!pattern.has_edge(at, q)) continue;
            if (!host.adjacent(h, map[q]) || host.color_of(h, map[q]) != color) ok = false;
        }
        if (!ok) continue;
        map[at] = h;
        used[h] = true;
        if (mono_map_search(host, pattern, color, map, used, at + 1)) return true;
        used[h] = false;
    }
    return false;
}

}  // namespace

std::optional<int> naive_mono_color(const rf::ColoredHost& host, const rf::SimpleGraph& pattern,
                                    std::optional<int> color) {
    if (pattern.order > host.vertex_count()) return std::nullopt;
    int from = color ? *color : 1;
    int to = color ? *color : host.color_count;
    for (int c = from; c <= to; ++c) {
        std::vector<int> map(pattern.order, -1);
        std::vector<bool> used(host.vertex_count(), false);
        if (mono_map_search(host, pattern, c, map, used, 0)) return c;
    }
    return std::nullopt;
}

namespace {

bool rainbow_tuple_search(const rf::ColoredHost& host, int t, std::vector<int>& tup,
                          std::vector<bool>& used) {
    if (static_cast<int>(tup.size()) == t) {
        std::vector<int> cols;
        for (std::size_t i = 0; i + 1 < tup.size(); ++i) {
            if (!host.adjacent(tup[i], tup[i + 1])) return false;
            cols.push_back(host.color_of(tup[i], tup[i + 1]));
        }
        std::sort(cols.begin(), cols.end());
        return std::adjacent_find(cols.begin(), cols.end()) == cols.end();
    }
    for (int v = 0; v < host.vertex_count(); ++v) {
        if (used[v]) continue;
        used[v] = true;
        tup.push_back(v);
        if (rainbow_tuple_search(host, t, tup, used)) return true;
        tup.pop_back();
        used[v] = false;
    }
    return false;
}

}  // namespace

bool naive_rainbow(const rf::ColoredHost& host, int t) {
    if (host.vertex_count() < t) return false;
    std::vector<int> tup;
    std::vector<bool> used(host.vertex_count(), false);
    return rainbow_tuple_search(host, t, tup, used);
}

rf::PartiteProfile brute_partite_profile(const rf::SimpleGraph& g) {
    rf::PartiteProfile p;
    p.s = g.order;
    p.s_star = -1;
    for (std::uint64_t side = 0; side < (std::uint64_t{1} << g.order); ++side) {
        bool ok = true;
        for (auto [u, v] : g.edges())
            if (((side >> u) & 1) == ((side >> v) & 1)) { ok = false; break; }
        if (!ok) continue;
        int a = rf::popcount64(side);
        int small = std::min(a, g.order - a);
        p.s = std::min(p.s, small);
        p.s_star = std::max(p.s_star, small);
    }
    p.t = g.order - p.s;
    p.t_star = g.order - p.s_star;
    return p;
}

namespace {

bool contains_rec(const rf::SimpleGraph& host, const rf::SimpleGraph& pattern,
                  std::vector<int>& map, std::vector<bool>& used, int at) {
    if (at == pattern.order) return true;
    for (int h = 0; h < host.order; ++h) {
        if (used[h]) continue;
        bool ok = true;
        for (int q = 0; q < at && ok; ++q)
            if (pattern.has_edge(at, q) && !host.has_edge(h, map[q])) ok = false;
        if (!ok) continue;
        map[at] = h;
        used[h] = true;
        if (contains_rec(host, pattern, map, used, at + 1)) return true;
        used[h] = false;
    }
    return false;
}

}  // namespace

bool brute_contains(const rf::SimpleGraph& host, const rf::SimpleGraph& pattern) {
    if (pattern.order > host.order) return false;
    std::vector<int> map(pattern.order, -1);
    std::vector<bool> used(host.order, false);
    return contains_rec(host, pattern, map, used, 0);
}

unsigned long long bell_number(int n) {
    std::vector<std::vector<unsigned long long>> tri{{1}};
    for (int i = 1; i <= n; ++i) {
        std::vector<unsigned long long> row{tri.back().back()};
        for (std::size_t j = 0; j < tri.back().size(); ++j) row.push_back(row.back() + tri.back()[j]);
        tri.push_back(std::move(row));
    }
    return tri[n][0];
}

unsigned long long stirling_upto(int n, int k) {
    std::vector<std::vector<unsigned long long>> s(n + 1, std::vector<unsigned long long>(k + 1, 0));
    s[0][0] = 1;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= k; ++j) s[i][j] = s[i - 1][j - 1] + j * s[i - 1][j];
    unsigned long long total = 0;
    for (int j = 1; j <= k; ++j) total += s[n][j];
    return total;
}

rf::SimpleGraph random_graph(int order, double p, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(p);
    rf::SimpleGraph g(order);
    for (int u = 0; u < order; ++u)
        for (int v = u + 1; v < order; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

rf::ColoredHost random_host(int max_vertices, int max_colors, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> shape(0, 1);
    rf::HostShape s = shape(rng) ? rf::HostShape::Complete : rf::HostShape::Bipartite;
    int m = 0, n;
    if (s == rf::HostShape::Complete) {
        n = std::uniform_int_distribution<int>(3, max_vertices)(rng);
    } else {
        m = std::uniform_int_distribution<int>(1, max_vertices / 2)(rng);
        n = std::uniform_int_distribution<int>(1, max_vertices - m)(rng);
    }
    std::size_t edges = rf::host_edge_count(s, m, n);
    std::uniform_int_distribution<int> color(1, max_colors);
    std::vector<int> colors(edges);
    for (auto& c : colors) c = color(rng);
    return rf::build_host(s, m, n, colors);
}

}  // namespace oracle
