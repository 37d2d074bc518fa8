#include "rf/structure.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <set>
#include <stdexcept>

#include "rf/invariants.hpp"

namespace rf {

namespace {

std::string edge_str(int u, int v, int c) {
    return "edge " + std::to_string(u) + "-" + std::to_string(v) + " color " + std::to_string(c);
}

}  // namespace

CertReport verify_p5_partition(const ColoredHost& host, const P5Partition& cert) {
    if (host.shape != HostShape::Complete)
        throw std::invalid_argument("certificate applies to complete hosts");
    int V = host.vertex_count();
    std::vector<int> owner(V, -1);
    for (std::size_t p = 0; p < cert.parts.size(); ++p) {
        if (cert.parts[p].vertices.empty())
            throw std::invalid_argument("parts must be nonempty");
        for (int v : cert.parts[p].vertices) {
            if (v < 0 || v >= V || owner[v] != -1)
                throw std::invalid_argument("parts must partition the vertex set");
            owner[v] = static_cast<int>(p);
        }
    }
    for (int v = 0; v < V; ++v)
        if (owner[v] == -1) throw std::invalid_argument("parts must partition the vertex set");

    CertReport report;
    std::set<int> seen_colors{cert.color1};
    for (const auto& part : cert.parts) {
        if (part.color == cert.color1 || !seen_colors.insert(part.color).second)
            report.violations.push_back("part color " + std::to_string(part.color) +
                                        " repeats another part or the distinguished color");
    }
    std::vector<bool> own_color_present(cert.parts.size(), false);
    for (std::size_t e = 0; e < host.colors.size(); ++e) {
        auto [u, v] = host.edge_endpoints(e);
        int c = host.colors[e];
        if (owner[u] == owner[v]) {
            int pc = cert.parts[owner[u]].color;
            if (c == pc) own_color_present[owner[u]] = true;
            if (c != pc && c != cert.color1)
                report.violations.push_back(edge_str(u, v, c) + " inside part " +
                                            std::to_string(owner[u] + 2));
        } else if (c != cert.color1) {
            report.violations.push_back(edge_str(u, v, c) + " between parts");
        }
    }
    for (std::size_t p = 0; p < cert.parts.size(); ++p)
        if (!own_color_present[p])
            report.violations.push_back("part " + std::to_string(p + 2) +
                                        " never shows its color " +
                                        std::to_string(cert.parts[p].color));
    report.pass = report.violations.empty();
    return report;
}

std::optional<RecoveredP5> recover_p5_partition(const ColoredHost& host) {
    if (host.shape != HostShape::Complete)
        throw std::invalid_argument("recovery applies to complete hosts");
    int k = host.color_count;
    int V = host.vertex_count();
    // k-1 pairwise disjoint parts of two or more vertices must fit
    if (k < 2 || 2 * (k - 1) > V) return std::nullopt;

    std::array<std::uint64_t, 64> span{};
    for (std::size_t e = 0; e < host.colors.size(); ++e) {
        auto [u, v] = host.edge_endpoints(e);
        span[host.colors[e]] |= (std::uint64_t{1} << u) | (std::uint64_t{1} << v);
    }

    for (int c = 1; c <= k; ++c) {
        std::uint64_t covered = 0;
        bool ok = true;
        for (int i = 1; i <= k && ok; ++i) {
            if (i == c) continue;
            if (covered & span[i]) ok = false;
            covered |= span[i];
        }
        if (!ok) continue;
        std::array<int, 64> part_of{};
        for (int i = 1; i <= k; ++i) {
            if (i == c) continue;
            std::uint64_t s = span[i];
            while (s) {
                int v = std::countr_zero(s);
                s &= s - 1;
                part_of[v] = i;
            }
        }
        for (std::size_t e = 0; e < host.colors.size() && ok; ++e) {
            auto [u, v] = host.edge_endpoints(e);
            int col = host.colors[e];
            if (part_of[u] == part_of[v] && part_of[u] != 0) {
                if (col != c && col != part_of[u]) ok = false;
            } else if (col != c) {
                ok = false;
            }
        }
        if (!ok) continue;

        RecoveredP5 rec;
        rec.partition.color1 = c;
        for (int i = 1; i <= k; ++i) {
            if (i == c) continue;
            P5Partition::Part part;
            part.color = i;
            std::uint64_t s = span[i];
            while (s) {
                int v = std::countr_zero(s);
                s &= s - 1;
                part.vertices.push_back(v);
            }
            rec.partition.parts.push_back(std::move(part));
        }
        // span-free vertices join the largest part (first such on ties)
        std::size_t largest = 0;
        for (std::size_t p = 1; p < rec.partition.parts.size(); ++p)
            if (rec.partition.parts[p].vertices.size() >
                rec.partition.parts[largest].vertices.size())
                largest = p;
        for (int v = 0; v < V; ++v)
            if (part_of[v] == 0) rec.partition.parts[largest].vertices.push_back(v);
        std::sort(rec.partition.parts[largest].vertices.begin(),
                  rec.partition.parts[largest].vertices.end());

        rec.relabeling.assign(k, 0);
        rec.relabeling[c - 1] = 1;
        int next = 2;
        for (int i = 1; i <= k; ++i)
            if (i != c) rec.relabeling[i - 1] = next++;
        return rec;
    }
    return std::nullopt;
}

ExtendedSizeReport check_extended_sizes(const P5Partition& cert, const SimpleGraph& h) {
    ExtendedSizeReport rep;
    for (const auto& p : cert.parts)
        rep.sorted_sizes.push_back(static_cast<int>(p.vertices.size()));
    std::sort(rep.sorted_sizes.begin(), rep.sorted_sizes.end(), std::greater<>());
    rep.k_at_least_4 = rep.sorted_sizes.size() >= 3;  // parts are V_2..V_k, so k = parts+1

    int max_comp = 0, min_comp = h.order;
    for (auto m : component_masks(h)) {
        int sz = popcount64(m);
        max_comp = std::max(max_comp, sz);
        min_comp = std::min(min_comp, sz);
    }
    if (h.order == 0) min_comp = 0;

    rep.v3_ok = rep.sorted_sizes.size() >= 2 && rep.sorted_sizes[1] >= max_comp;
    rep.v4_ok = rep.sorted_sizes.size() >= 3 && rep.sorted_sizes[2] >= min_comp;
    long long tail = 0;
    for (std::size_t i = 1; i < rep.sorted_sizes.size(); ++i) tail += rep.sorted_sizes[i];
    rep.tail_ok = tail >= h.order;
    rep.all_ok = rep.k_at_least_4 && rep.v3_ok && rep.v4_ok && rep.tail_ok;
    return rep;
}

namespace {

// star partition of one side: every vertex there sees a single color
std::optional<BipartiteStructure> star_partition(const ColoredHost& host, bool swapped) {
    int V = host.vertex_count();
    int lo = swapped ? host.m : 0;
    int hi = swapped ? V : host.m;
    int other_lo = swapped ? 0 : host.m;
    int other_hi = swapped ? host.m : V;
    std::vector<std::vector<int>> groups(host.color_count);
    for (int u = lo; u < hi; ++u) {
        int c = 0;
        for (int v = other_lo; v < other_hi; ++v) {
            int col = host.color_of(u, v);
            if (c == 0) c = col;
            if (col != c) return std::nullopt;
        }
        groups[c - 1].push_back(u);
    }
    BipartiteStructure s;
    s.t = 4;
    s.case_id = 'S';
    s.sides_swapped = swapped;
    for (int c = 1; c <= host.color_count; ++c) {
        s.u_parts.push_back(groups[c - 1]);
        s.part_colors.push_back(c);
    }
    return s;
}

std::optional<BipartiteStructure> case_a(const ColoredHost& host, bool swapped) {
    int V = host.vertex_count();
    int u_lo = swapped ? host.m : 0, u_hi = swapped ? V : host.m;
    int v_lo = swapped ? 0 : host.m, v_hi = swapped ? host.m : V;
    for (int c = 1; c <= host.color_count; ++c) {
        std::vector<int> u1, u2;
        for (int u = u_lo; u < u_hi; ++u) {
            bool all_c = true;
            for (int v = v_lo; v < v_hi && all_c; ++v)
                if (host.color_of(u, v) != c) all_c = false;
            (all_c ? u2 : u1).push_back(u);
        }
        if (u1.empty()) continue;
        std::vector<std::vector<int>> vgroups(host.color_count);
        bool ok = true;
        for (int v = v_lo; v < v_hi && ok; ++v) {
            int phi = 0;
            for (int u : u1) {
                int col = host.color_of(u, v);
                if (phi == 0) phi = col;
                if (col != phi) { ok = false; break; }
            }
            if (ok) vgroups[phi - 1].push_back(v);
        }
        if (!ok) continue;
        BipartiteStructure s;
        s.t = 5;
        s.case_id = 'A';
        s.sides_swapped = swapped;
        s.color1 = c;
        s.u_parts = {u1, u2};
        for (int i = 1; i <= host.color_count; ++i) {
            s.v_parts.push_back(vgroups[i - 1]);
            s.part_colors.push_back(i);
        }
        return s;
    }
    return std::nullopt;
}

std::optional<BipartiteStructure> case_b(const ColoredHost& host) {
    int V = host.vertex_count();
    int k = host.color_count;
    for (int c = 1; c <= k; ++c) {
        std::vector<std::uint64_t> su(k + 1, 0), sv(k + 1, 0);
        for (std::size_t e = 0; e < host.colors.size(); ++e) {
            int col = host.colors[e];
            if (col == c) continue;
            auto [u, v] = host.edge_endpoints(e);
            su[col] |= std::uint64_t{1} << u;
            sv[col] |= std::uint64_t{1} << v;
        }
        std::uint64_t cov_u = 0, cov_v = 0;
        bool ok = true;
        for (int i = 1; i <= k && ok; ++i) {
            if (i == c) continue;
            if ((cov_u & su[i]) || (cov_v & sv[i])) ok = false;
            cov_u |= su[i];
            cov_v |= sv[i];
        }
        if (!ok) continue;
        std::vector<int> pu(V, 0), pv(V, 0);
        for (int i = 1; i <= k; ++i) {
            if (i == c) continue;
            for (std::uint64_t s = su[i]; s;) {
                int u = std::countr_zero(s);
                s &= s - 1;
                pu[u] = i;
            }
            for (std::uint64_t s = sv[i]; s;) {
                int v = std::countr_zero(s);
                s &= s - 1;
                pv[v] = i;
            }
        }
        for (std::size_t e = 0; e < host.colors.size() && ok; ++e) {
            auto [u, v] = host.edge_endpoints(e);
            int col = host.colors[e];
            if (pu[u] != 0 && pu[u] == pv[v]) {
                if (col != c && col != pu[u]) ok = false;
            } else if (col != c) {
                ok = false;
            }
        }
        if (!ok) continue;
        BipartiteStructure s;
        s.t = 5;
        s.case_id = 'B';
        s.color1 = c;
        std::vector<std::vector<int>> ups, vps;
        std::vector<int> cols;
        for (int i = 1; i <= k; ++i) {
            if (i == c) continue;
            std::vector<int> up, vp;
            for (int u = 0; u < host.m; ++u)
                if (pu[u] == i) up.push_back(u);
            for (int v = host.m; v < V; ++v)
                if (pv[v] == i) vp.push_back(v);
            ups.push_back(std::move(up));
            vps.push_back(std::move(vp));
            cols.push_back(i);
        }
        // leftovers attach to the largest part on their side (first on ties)
        auto attach = [](std::vector<std::vector<int>>& parts, const std::vector<int>& owner,
                         int lo, int hi) {
            std::size_t largest = 0;
            for (std::size_t p = 1; p < parts.size(); ++p)
                if (parts[p].size() > parts[largest].size()) largest = p;
            for (int v = lo; v < hi; ++v)
                if (owner[v] == 0) parts[largest].push_back(v);
            std::sort(parts[largest].begin(), parts[largest].end());
        };
        attach(ups, pu, 0, host.m);
        attach(vps, pv, host.m, V);
        s.u_parts = std::move(ups);
        s.v_parts = std::move(vps);
        s.part_colors = std::move(cols);
        return s;
    }
    return std::nullopt;
}

std::optional<BipartiteStructure> case_c(const ColoredHost& host) {
    if (host.n < 3 || host.n > 4 || host.color_count != 4) return std::nullopt;
    int V = host.vertex_count();
    std::vector<std::vector<int>> deg(V, std::vector<int>(host.color_count + 1, 0));
    for (std::size_t e = 0; e < host.colors.size(); ++e) {
        auto [u, v] = host.edge_endpoints(e);
        if (++deg[u][host.colors[e]] > 1) return std::nullopt;
        if (++deg[v][host.colors[e]] > 1) return std::nullopt;
    }
    BipartiteStructure s;
    s.t = 5;
    s.case_id = 'C';
    return s;
}

}  // namespace

std::optional<BipartiteStructure> classify_bipartite_structure(const ColoredHost& host, int t) {
    if (host.shape != HostShape::Bipartite)
        throw std::invalid_argument("classification applies to bipartite hosts");
    if (host.m != host.n) throw std::invalid_argument("host sides must match");
    if (t == 4) {
        if (host.color_count < 3)
            throw std::invalid_argument("need at least 3 colors for the t=4 shape");
        if (auto s = star_partition(host, false)) return s;
        if (auto s = star_partition(host, true)) return s;
        return std::nullopt;
    }
    if (t == 5) {
        if (host.color_count < 4)
            throw std::invalid_argument("need at least 4 colors for the t=5 shapes");
        if (auto s = case_a(host, false)) return s;
        if (auto s = case_a(host, true)) return s;
        if (auto s = case_b(host)) return s;
        if (auto s = case_c(host)) return s;
        return std::nullopt;
    }
    throw std::invalid_argument("t must be 4 or 5");
}

TripartiteDecision tripartite_contains_union(int x, int y, int z, const SimpleGraph& g1,
                                             const SimpleGraph& g2) {
    if (chromatic_number(g1) != 3 || chromatic_number(g2) != 3)
        throw std::invalid_argument("both graphs must be 3-chromatic");
    TripartiteDecision dec;
    if (g1.order + g2.order > x + y + z) {
        dec.route = "counting";
        return dec;
    }
    int X = x, Y = y, Z = z;
    if (X < Y) std::swap(X, Y);
    if (Y < Z) std::swap(Y, Z);
    if (X < Y) std::swap(X, Y);

    auto s_vecs = proper_coloring_size_vectors(g1, 3);
    auto t_vecs = proper_coloring_size_vectors(g2, 3);
    for (const auto& sv : s_vecs) {
        for (const auto& tv : t_vecs) {
            if (X >= sv[0] + tv[0] && Y >= sv[1] + tv[1] && Z >= sv[2] + tv[2]) {
                dec.contains = true;
                dec.route = "size-condition-ii";
                return dec;
            }
        }
    }
    for (const auto& sv : s_vecs) {
        for (const auto& tv : t_vecs) {
            int big = std::max(sv[0] + tv[1], tv[0] + sv[1]);
            int small = std::min(sv[0] + tv[1], tv[0] + sv[1]);
            if (X >= big && Y >= small && Z >= sv[2] + tv[2]) {
                dec.contains = true;
                dec.route = "size-condition-i";
                return dec;
            }
        }
    }
    if (x + y + z <= 12) {
        SimpleGraph hostg(x + y + z);
        auto part = [&](int v) { return v < x ? 0 : (v < x + y ? 1 : 2); };
        for (int a = 0; a < hostg.order; ++a)
            for (int b = a + 1; b < hostg.order; ++b)
                if (part(a) != part(b)) hostg.add_edge(a, b);
        dec.contains = contains_subgraph(hostg, disjoint_union(g1, g2));
        dec.route = "exact-search";
        return dec;
    }
    dec.route = "conditions-only";
    dec.certain = false;
    return dec;
}

}  // namespace rf
