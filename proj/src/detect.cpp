#include "rf/detect.hpp"

#include <algorithm>
#include <bit>

#include "rf/invariants.hpp"

namespace rf {

namespace detail {

namespace {

// within one pattern component: next vertex maximizes placed neighbours, then
// degree, so candidate masks stay tight
std::vector<int> component_order(const SimpleGraph& pattern, std::uint64_t comp,
                                 std::uint64_t seeded) {
    std::vector<int> order;
    std::uint64_t placed = seeded & comp;
    std::uint64_t rest = comp & ~seeded;
    while (rest) {
        int best = -1, best_score = -1;
        std::uint64_t r = rest;
        while (r) {
            int v = std::countr_zero(r);
            r &= r - 1;
            int attached = popcount64(pattern.adj[v] & placed);
            int score = attached * 64 + pattern.degree(v);
            if (score > best_score) { best_score = score; best = v; }
        }
        order.push_back(best);
        placed |= std::uint64_t{1} << best;
        rest &= ~(std::uint64_t{1} << best);
    }
    return order;
}

struct ComponentPlan {
    std::vector<int> order;  // placement order of this component's vertices
};

// size of some vertex set whose removal leaves the masks bipartite; greedy
// (not minimum), which still upper-bounds disjoint odd subgraphs soundly
int odd_cover_size(std::span<const std::uint64_t> adj, int V) {
    std::uint64_t removed = 0;
    int count = 0;
    while (true) {
        std::vector<int> side(V, -1);
        int bad_u = -1, bad_v = -1;
        for (int s = 0; s < V && bad_u < 0; ++s) {
            if (((removed >> s) & 1) || side[s] >= 0 || adj[s] == 0) continue;
            side[s] = 0;
            std::vector<int> stack{s};
            while (!stack.empty() && bad_u < 0) {
                int v = stack.back();
                stack.pop_back();
                std::uint64_t nb = adj[v] & ~removed;
                while (nb) {
                    int u = std::countr_zero(nb);
                    nb &= nb - 1;
                    if (side[u] < 0) {
                        side[u] = 1 - side[v];
                        stack.push_back(u);
                    } else if (side[u] == side[v]) {
                        bad_u = u;
                        bad_v = v;
                        break;
                    }
                }
            }
        }
        if (bad_u < 0) return count;
        int du = popcount64(adj[bad_u] & ~removed);
        int dv = popcount64(adj[bad_v] & ~removed);
        removed |= std::uint64_t{1} << (du >= dv ? bad_u : bad_v);
        ++count;
    }
}

// per-component backtracking over adjacency masks; map/used are shared state
struct ClassMatcher {
    std::span<const std::uint64_t> hostadj;
    int V;
    const SimpleGraph* pattern;
    std::vector<int> hostdeg;
    std::vector<ComponentPlan> plans;
    std::vector<int> map;
    std::uint64_t used = 0;
    std::uint64_t support = 0;  // vertices with at least one class edge

    std::uint64_t free_mask() const {
        std::uint64_t f = ~used;
        if (V < 64) f &= (std::uint64_t{1} << V) - 1;
        return f;
    }

    bool place(const std::vector<int>& order, std::size_t at) {
        if (at == order.size()) return true;
        int p = order[at];
        std::uint64_t cand = free_mask();
        std::uint64_t nb = pattern->adj[p];
        while (nb) {
            int q = std::countr_zero(nb);
            nb &= nb - 1;
            if (map[q] >= 0) cand &= hostadj[map[q]];
        }
        int pdeg = pattern->degree(p);
        while (cand) {
            int h = std::countr_zero(cand);
            cand &= cand - 1;
            if (hostdeg[h] < pdeg) continue;
            map[p] = h;
            used |= std::uint64_t{1} << h;
            if (place(order, at + 1)) return true;
            used &= ~(std::uint64_t{1} << h);
            map[p] = -1;
        }
        return false;
    }

    // can this component embed alone in the free vertices? (place fully
    // unwinds on failure; on success only this component's slots need reset)
    bool feasible(const std::vector<int>& order) {
        if (!place(order, 0)) return false;
        for (int p : order) {
            used &= ~(std::uint64_t{1} << map[p]);
            map[p] = -1;
        }
        return true;
    }

    bool run(std::size_t ci) {
        if (ci == plans.size()) return true;
        int need = 0;
        for (std::size_t cj = ci; cj < plans.size(); ++cj)
            need += static_cast<int>(plans[cj].order.size());
        if (need > popcount64(free_mask() & support)) return false;
        // the remaining components must each fit on their own before the
        // expensive cross product over this one's embeddings is explored
        for (std::size_t cj = ci + 1; cj < plans.size(); ++cj)
            if (!feasible(plans[cj].order)) return false;
        return run_embeddings(ci);
    }

    bool run_embeddings(std::size_t ci) { return place_component(ci, plans[ci].order, 0); }

    bool place_component(std::size_t ci, const std::vector<int>& order, std::size_t at) {
        if (at == order.size()) return run(ci + 1);
        int p = order[at];
        std::uint64_t cand = free_mask();
        std::uint64_t nb = pattern->adj[p];
        while (nb) {
            int q = std::countr_zero(nb);
            nb &= nb - 1;
            if (map[q] >= 0) cand &= hostadj[map[q]];
        }
        int pdeg = pattern->degree(p);
        while (cand) {
            int h = std::countr_zero(cand);
            cand &= cand - 1;
            if (hostdeg[h] < pdeg) continue;
            map[p] = h;
            used |= std::uint64_t{1} << h;
            if (place_component(ci, order, at + 1)) return true;
            used &= ~(std::uint64_t{1} << h);
            map[p] = -1;
        }
        return false;
    }
};

ClassMatcher make_matcher(std::span<const std::uint64_t> hostadj, int V,
                          const SimpleGraph& pattern, const PatternInfo& info,
                          std::uint64_t seeded) {
    ClassMatcher m;
    m.hostadj = hostadj;
    m.V = V;
    m.pattern = &pattern;
    m.hostdeg.resize(V);
    for (int v = 0; v < V; ++v) {
        m.hostdeg[v] = popcount64(hostadj[v]);
        if (hostadj[v]) m.support |= std::uint64_t{1} << v;
    }
    m.map.assign(pattern.order, -1);
    // anchored component first, the rest keep their constraint ranking
    for (std::uint64_t comp : info.ranked_components)
        if (comp & seeded) m.plans.push_back({component_order(pattern, comp, seeded)});
    for (std::uint64_t comp : info.ranked_components)
        if (!(comp & seeded)) m.plans.push_back({component_order(pattern, comp, seeded)});
    return m;
}

}  // namespace

PatternInfo analyze_pattern(const SimpleGraph& pattern) {
    PatternInfo info;
    struct Ranked {
        std::uint64_t mask;
        int chi;
        int size;
    };
    std::vector<Ranked> ranked;
    for (std::uint64_t comp : component_masks(pattern)) {
        if (popcount64(comp) == 1) {
            int v = std::countr_zero(comp);
            if (pattern.adj[v] == 0) {
                info.isolated |= comp;
                continue;
            }
        }
        int chi = chromatic_number(induced_subgraph(pattern, comp));
        if (chi >= 3) {
            ++info.trichromatic;
            info.tri_total += popcount64(comp);
            info.tri_max = std::max(info.tri_max, popcount64(comp));
        }
        ranked.push_back({comp, chi, popcount64(comp)});
    }
    std::stable_sort(ranked.begin(), ranked.end(), [](const Ranked& a, const Ranked& b) {
        if (a.chi != b.chi) return a.chi > b.chi;
        return a.size > b.size;
    });
    for (const auto& r : ranked) info.ranked_components.push_back(r.mask);
    return info;
}

std::optional<std::vector<int>> find_pattern_in_class(std::span<const std::uint64_t> hostadj,
                                                      int V, const SimpleGraph& pattern,
                                                      const PatternInfo& info,
                                                      std::optional<std::pair<int, int>> anchor) {
    if (pattern.order > V) return std::nullopt;
    if (info.trichromatic >= 1) {
        // 3-chromatic components only fit inside non-bipartite class components
        long long capacity = 0;
        int max_block = 0;
        std::uint64_t seen = 0;
        for (int s = 0; s < V; ++s) {
            if (((seen >> s) & 1) || hostadj[s] == 0) continue;
            std::uint64_t comp = std::uint64_t{1} << s;
            std::uint64_t frontier = comp;
            while (frontier) {
                std::uint64_t next = 0, f = frontier;
                while (f) {
                    int u = std::countr_zero(f);
                    f &= f - 1;
                    next |= hostadj[u];
                }
                frontier = next & ~comp;
                comp |= next;
            }
            seen |= comp;
            // 2-colorable block?
            bool bip = true;
            std::vector<int> side(V, -1);
            int start = std::countr_zero(comp);
            side[start] = 0;
            std::vector<int> stack{start};
            while (!stack.empty() && bip) {
                int v = stack.back();
                stack.pop_back();
                std::uint64_t nb = hostadj[v];
                while (nb) {
                    int u = std::countr_zero(nb);
                    nb &= nb - 1;
                    if (side[u] < 0) {
                        side[u] = 1 - side[v];
                        stack.push_back(u);
                    } else if (side[u] == side[v]) {
                        bip = false;
                        break;
                    }
                }
            }
            if (!bip) {
                capacity += popcount64(comp);
                max_block = std::max(max_block, popcount64(comp));
            }
        }
        if (info.tri_total > capacity || info.tri_max > max_block) return std::nullopt;
        // and each needs a vertex of any odd cover
        if (info.trichromatic >= 2 && odd_cover_size(hostadj, V) < info.trichromatic)
            return std::nullopt;
    }

    auto finish = [&](std::vector<int>& map, std::uint64_t used) -> std::optional<std::vector<int>> {
        std::uint64_t iso = info.isolated;
        std::uint64_t free = ~used;
        if (V < 64) free &= (std::uint64_t{1} << V) - 1;
        while (iso) {
            int p = std::countr_zero(iso);
            iso &= iso - 1;
            if (!free) return std::nullopt;
            int h = std::countr_zero(free);
            free &= free - 1;
            map[p] = h;
        }
        return map;
    };

    if (!anchor) {
        ClassMatcher m = make_matcher(hostadj, V, pattern, info, 0);
        if (!m.run(0)) return std::nullopt;
        return finish(m.map, m.used);
    }

    auto [a, b] = *anchor;
    if (!((hostadj[a] >> b) & 1)) return std::nullopt;
    std::vector<int> hostdeg(V);
    for (int v = 0; v < V; ++v) hostdeg[v] = popcount64(hostadj[v]);
    for (auto [p, q] : pattern.edges()) {
        for (int flip = 0; flip < 2; ++flip) {
            int hp = flip ? b : a, hq = flip ? a : b;
            if (hostdeg[hp] < pattern.degree(p) || hostdeg[hq] < pattern.degree(q)) continue;
            ClassMatcher m = make_matcher(hostadj, V, pattern, info,
                                          (std::uint64_t{1} << p) | (std::uint64_t{1} << q));
            m.map[p] = hp;
            m.map[q] = hq;
            m.used = (std::uint64_t{1} << hp) | (std::uint64_t{1} << hq);
            if (m.run(0)) return finish(m.map, m.used);
        }
    }
    return std::nullopt;
}

std::optional<std::vector<int>> find_pattern_in_class(std::span<const std::uint64_t> hostadj,
                                                      int V, const SimpleGraph& pattern,
                                                      std::optional<std::pair<int, int>> anchor) {
    return find_pattern_in_class(hostadj, V, pattern, analyze_pattern(pattern), anchor);
}

}  // namespace detail

namespace {

std::vector<std::uint64_t> class_adjacency(const ColoredHost& host, int color) {
    std::vector<std::uint64_t> adj(host.vertex_count(), 0);
    for (std::size_t e = 0; e < host.colors.size(); ++e) {
        if (host.colors[e] != color) continue;
        auto [u, v] = host.edge_endpoints(e);
        adj[u] |= std::uint64_t{1} << v;
        adj[v] |= std::uint64_t{1} << u;
    }
    return adj;
}

}  // namespace

std::optional<Embedding> find_mono_copy(const ColoredHost& host, const SimpleGraph& pattern,
                                        std::optional<int> color) {
    if (pattern.is_empty()) throw std::invalid_argument("pattern must be nonempty");
    detail::PatternInfo info = detail::analyze_pattern(pattern);
    int from = color ? *color : 1;
    int to = color ? *color : host.color_count;
    for (int c = from; c <= to; ++c) {
        if (c < 1 || c > host.color_count) continue;
        auto adj = class_adjacency(host, c);
        auto map =
            detail::find_pattern_in_class(adj, host.vertex_count(), pattern, info, std::nullopt);
        if (map) {
            Embedding emb;
            emb.vertices = std::move(*map);
            emb.color = c;
            return emb;
        }
    }
    return std::nullopt;
}

namespace {

bool rainbow_dfs(const ColoredHost& host, std::vector<int>& path, std::uint64_t used,
                 std::vector<int>& colors, int t) {
    if (static_cast<int>(path.size()) == t) return true;
    int v = path.back();
    for (int u = 0; u < host.vertex_count(); ++u) {
        if ((used >> u) & 1) continue;
        if (!host.adjacent(v, u)) continue;
        int c = host.color_of(v, u);
        if (std::find(colors.begin(), colors.end(), c) != colors.end()) continue;
        path.push_back(u);
        colors.push_back(c);
        if (rainbow_dfs(host, path, used | (std::uint64_t{1} << u), colors, t)) return true;
        path.pop_back();
        colors.pop_back();
    }
    return false;
}

}  // namespace

std::optional<Embedding> find_rainbow_path(const ColoredHost& host, int t) {
    if (t < 3) throw std::invalid_argument("path order must be at least 3");
    if (host.color_count <= t - 2) return std::nullopt;  // too few colors for t-1 distinct
    if (host.vertex_count() < t) return std::nullopt;
    std::vector<int> path, colors;
    for (int v0 = 0; v0 < host.vertex_count(); ++v0) {
        path.assign(1, v0);
        colors.clear();
        if (rainbow_dfs(host, path, std::uint64_t{1} << v0, colors, t)) {
            Embedding emb;
            emb.vertices = path;
            emb.colors = colors;
            return emb;
        }
    }
    return std::nullopt;
}

}  // namespace rf
