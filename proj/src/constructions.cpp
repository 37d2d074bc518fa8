#include "rf/constructions.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <stdexcept>

#include "rf/decomposition.hpp"
#include "rf/invariants.hpp"
#include "rf/search.hpp"

namespace rf {

namespace {

const std::pair<ConstructionKind, const char*> kKindNames[] = {
    {ConstructionKind::R3I, "r3-i"},
    {ConstructionKind::R3II, "r3-ii"},
    {ConstructionKind::R3III, "r3-iii"},
    {ConstructionKind::R3IV, "r3-iv"},
    {ConstructionKind::Matching, "matching"},
    {ConstructionKind::Decomp, "decomp"},
    {ConstructionKind::BipartiteBlowup, "bipartite-blowup"},
    {ConstructionKind::ExactK, "exact-k"},
    {ConstructionKind::BipartiteStarpart, "bipartite-starpart"},
    {ConstructionKind::NoRainbowP5Shape, "no-rainbow-p5-shape"},
    {ConstructionKind::BipartiteNoRainbowP4Shape, "bipartite-no-rainbow-p4-shape"},
    {ConstructionKind::BipartiteNoRainbowP5A, "bipartite-no-rainbow-p5-a"},
    {ConstructionKind::BipartiteNoRainbowP5B, "bipartite-no-rainbow-p5-b"},
};

using nlohmann::ordered_json;

SimpleGraph union_of(const std::vector<SimpleGraph>& comps) {
    SimpleGraph u(0);
    for (const auto& g : comps) u = disjoint_union(u, g);
    return u;
}

void require_connected_nonempty(const std::vector<SimpleGraph>& comps) {
    if (comps.empty()) throw std::invalid_argument("need at least one component");
    for (const auto& g : comps) {
        if (g.is_empty()) throw std::invalid_argument("components must be nonempty");
        if (!is_connected(g)) throw std::invalid_argument("components must be connected");
    }
}

ColoredHost assemble_complete(int n, const std::function<int(int, int)>& color_of) {
    ColoredHost probe;
    probe.shape = HostShape::Complete;
    probe.n = n;
    std::vector<int> colors;
    colors.reserve(host_edge_count(HostShape::Complete, 0, n));
    for (std::size_t e = 0; e < host_edge_count(HostShape::Complete, 0, n); ++e) {
        auto [u, v] = probe.edge_endpoints(e);
        colors.push_back(color_of(u, v));
    }
    return build_host(HostShape::Complete, 0, n, colors);
}

ColoredHost assemble_bipartite(int m, int n, const std::function<int(int, int)>& color_of) {
    std::vector<int> colors;
    colors.reserve(host_edge_count(HostShape::Bipartite, m, n));
    for (int u = 0; u < m; ++u)
        for (int v = 0; v < n; ++v) colors.push_back(color_of(u, v));
    return build_host(HostShape::Bipartite, m, n, colors);
}

int normalized_color(const ColoredHost& host, int semantic) {
    for (int c = 1; c <= host.color_count; ++c)
        if (host.original_labels[c - 1] == semantic) return c;
    return 0;
}

Claim no_mono(const SimpleGraph& pattern, std::optional<int> color) {
    Claim c;
    c.type = Claim::Type::NoMono;
    c.pattern = pattern;
    c.color = color;
    return c;
}

Claim no_rainbow(int t) {
    Claim c;
    c.type = Claim::Type::NoRainbow;
    c.path_order = t;
    return c;
}

// semantic claim colors become normalized host colors; claims about colors
// the host never uses are vacuous and dropped
void push_mono_claim(std::vector<Claim>& claims, const ColoredHost& host,
                     const SimpleGraph& pattern, std::optional<int> semantic) {
    if (!semantic) {
        claims.push_back(no_mono(pattern, std::nullopt));
        return;
    }
    int c = normalized_color(host, *semantic);
    if (c != 0) claims.push_back(no_mono(pattern, c));
}

int role_of(const ColoredHost& host, std::size_t e) {
    return host.original_labels[host.colors[e] - 1];
}

// inner two-colored complete witness avoiding role-tagged patterns; supplied
// hosts are validated, otherwise a search runs when the order is small enough
ColoredHost inner_witness(int order, const std::vector<Forbid>& role_forbids,
                          const std::optional<ColoredHost>& supplied, ordered_json& echo) {
    if (supplied) {
        if (supplied->shape != HostShape::Complete || supplied->n != order)
            throw std::invalid_argument("sub-host must be a complete host on " +
                                        std::to_string(order) + " vertices");
        for (const auto& f : role_forbids) {
            for (int c = 1; c <= supplied->color_count; ++c) {
                if (supplied->original_labels[c - 1] != f.color) continue;
                if (supplied->color_count > 2)
                    throw std::invalid_argument("sub-host must use at most two colors");
                if (find_mono_copy(*supplied, f.pattern, c))
                    throw std::invalid_argument(
                        "sub-host contains a forbidden monochromatic pattern");
            }
        }
        echo["inner"] = {{"order", order}, {"source", "supplied"}};
        return *supplied;
    }
    if (order > kMaxInnerSearchOrder)
        throw std::invalid_argument("inner witness on " + std::to_string(order) +
                                    " vertices must be supplied (search cap is " +
                                    std::to_string(kMaxInnerSearchOrder) + ")");
    if (order <= 1) {
        echo["inner"] = {{"order", order}, {"source", "trivial"}};
        return build_host(HostShape::Complete, 0, std::max(order, 1), {});
    }
    auto out = find_coloring_fixed_roles(HostShape::Complete, 0, order, 2, role_forbids,
                                         std::nullopt);
    if (out.status != SearchStatus::Witness)
        throw std::invalid_argument("no inner witness exists at the requested order");
    echo["inner"] = {{"order", order}, {"source", "searched"}};
    return *out.witness;
}

int table_or_search_two_color(const SimpleGraph& g1, const SimpleGraph& g2,
                              const KnownValuesTable* table, ordered_json& echo,
                              const std::string& key) {
    if (table) {
        if (auto v = table->two_color(g1, g2)) {
            echo["table_values"][key] = {{"value", *v}, {"source", "table"}};
            return *v;
        }
    }
    auto res = two_color_ramsey(g1, g2, kMaxInnerSearchOrder + 1);
    if (!res.value)
        throw std::invalid_argument("missing table entry " + key +
                                    " and the value is beyond the search cap");
    echo["table_values"][key] = {{"value", *res.value}, {"source", "computed"}};
    return *res.value;
}

// R(family, h): family members forbidden in color 1, h in color 2
int family_ramsey(const std::vector<SimpleGraph>& family, const SimpleGraph& h,
                  ordered_json& echo, const std::string& key) {
    std::vector<Forbid> forbids;
    for (const auto& mgraph : family) forbids.push_back({mgraph, 1});
    forbids.push_back({h, 2});
    for (int n = 2; n <= kMaxInnerSearchOrder + 1; ++n) {
        auto out = find_coloring_fixed_roles(HostShape::Complete, 0, n, 2, forbids, std::nullopt);
        if (out.status == SearchStatus::Exhausted) {
            echo["table_values"][key] = {{"value", n}, {"source", "computed"}};
            return n;
        }
    }
    throw std::invalid_argument("missing table entry " + key +
                                " and the value is beyond the search cap");
}

std::vector<std::string> graph6_list(const std::vector<SimpleGraph>& gs) {
    std::vector<std::string> out;
    for (const auto& g : gs) out.push_back(to_graph6(g));
    return out;
}

ConstructionResult make_r3_i(const ConstructionParams& p) {
    require_connected_nonempty(p.components);
    int t = static_cast<int>(p.components.size());
    int i = p.idx_i, j = p.idx_j, l = p.idx_l;
    if (i < 1 || i > t || j < 1 || j > t || l < 1 || l > t)
        throw std::invalid_argument("component indices out of range");
    const SimpleGraph& gi = p.components[i - 1];
    const SimpleGraph& gj = p.components[j - 1];
    const SimpleGraph& gl = p.components[l - 1];
    int chi = chromatic_number(gi);
    ordered_json echo{{"components", graph6_list(p.components)},
                      {"indices", {{"i", i}, {"j", j}, {"l", l}}}};
    int r = table_or_search_two_color(gj, gl, p.table, echo,
                                      "R(" + to_graph6(gj) + "," + to_graph6(gl) + ")");
    int surplus_sum = 0;
    for (const auto& g : p.components)
        if (chromatic_number(g) == chi) surplus_sum += chromatic_surplus(g);
    int part = r - 1;
    int last = surplus_sum - 1;
    int n = (chi - 1) * part + last;
    if (n < 1) throw std::invalid_argument("construction degenerates to an empty host");
    ColoredHost inner = inner_witness(part, {{gj, 1}, {gl, 2}}, p.sub_host, echo);

    auto part_of = [&](int v) { return std::min(v / std::max(part, 1), chi - 1); };
    ColoredHost host = assemble_complete(n, [&](int u, int v) {
        int pu = part_of(u), pv = part_of(v);
        if (pu != pv || pu == chi - 1) return 3;
        return role_of(inner, inner.edge_index(u - pu * part, v - pu * part));
    });
    ConstructionResult res;
    res.kind = ConstructionKind::R3I;
    res.host = host;
    push_mono_claim(res.claims, host, gj, 1);
    push_mono_claim(res.claims, host, gl, 2);
    push_mono_claim(res.claims, host, union_of(p.components), std::nullopt);
    echo["n"] = n;
    res.parameters = std::move(echo);
    return res;
}

ConstructionResult make_r3_ii(const ConstructionParams& p) {
    require_connected_nonempty(p.components);
    int t = static_cast<int>(p.components.size());
    int i = p.idx_i, j = p.idx_j;
    if (i < 1 || i > t || j < 1 || j > t)
        throw std::invalid_argument("component indices out of range");
    const SimpleGraph& gi = p.components[i - 1];
    const SimpleGraph& gj = p.components[j - 1];
    int omega = clique_number(gi);
    SimpleGraph kw = complete_graph(omega);
    ordered_json echo{{"components", graph6_list(p.components)},
                      {"indices", {{"i", i}, {"j", j}}}};
    int r2 = table_or_search_two_color(kw, kw, p.table, echo,
                                       "R2(K" + std::to_string(omega) + ")");
    int parts = r2 - 1;
    int size = gj.order - 1;
    int n = parts * size;
    if (n < 1) throw std::invalid_argument("construction degenerates to an empty host");
    ColoredHost base = inner_witness(parts, {{kw, 1}, {kw, 2}}, p.sub_host, echo);

    ColoredHost host = assemble_complete(n, [&](int u, int v) {
        int pu = u / size, pv = v / size;
        if (pu == pv) return 3;
        return role_of(base, base.edge_index(pu, pv));
    });
    ConstructionResult res;
    res.kind = ConstructionKind::R3II;
    res.host = host;
    push_mono_claim(res.claims, host, kw, 1);
    push_mono_claim(res.claims, host, kw, 2);
    push_mono_claim(res.claims, host, gj, 3);
    push_mono_claim(res.claims, host, union_of(p.components), std::nullopt);
    echo["n"] = n;
    res.parameters = std::move(echo);
    return res;
}

ConstructionResult make_r3_iii(const ConstructionParams& p) {
    require_connected_nonempty(p.components);
    int total = 0;
    for (const auto& g : p.components) {
        if (chromatic_number(g) != 3)
            throw std::invalid_argument("every component must be 3-chromatic");
        total += g.order;
    }
    int q = total - 1;
    int n = 3 * q;
    ColoredHost host = assemble_complete(n, [&](int u, int v) {
        int pu = u / q, pv = v / q;
        return pu == pv ? pu + 1 : 4 - pu - pv;
    });
    ConstructionResult res;
    res.kind = ConstructionKind::R3III;
    res.host = host;
    push_mono_claim(res.claims, host, union_of(p.components), std::nullopt);
    res.parameters = ordered_json{{"components", graph6_list(p.components)}, {"n", n}};
    return res;
}

ConstructionResult make_r3_iv(const ConstructionParams& p) {
    require_connected_nonempty(p.components);
    int total = 0, surplus3 = 0, max_chi = 0;
    for (const auto& g : p.components) {
        int chi = chromatic_number(g);
        if (chi > 3) throw std::invalid_argument("components must have chromatic number <= 3");
        max_chi = std::max(max_chi, chi);
        total += g.order;
        if (chi == 3) surplus3 += chromatic_surplus(g);
    }
    if (max_chi != 3)
        throw std::invalid_argument("at least one component must be 3-chromatic");
    int a = total - 1;
    int b = surplus3 - 1;  // may be zero: the third part simply vanishes
    int n = 2 * a + b;
    ColoredHost host = assemble_complete(n, [&](int u, int v) {
        int pu = std::min(u / a, 2), pv = std::min(v / a, 2);
        if (pu == pv && pu < 2) return pu + 1;
        return 3;
    });
    ConstructionResult res;
    res.kind = ConstructionKind::R3IV;
    res.host = host;
    push_mono_claim(res.claims, host, union_of(p.components), std::nullopt);
    res.parameters = ordered_json{
        {"components", graph6_list(p.components)}, {"n", n}, {"sizes", {a, a, b}}};
    return res;
}

ConstructionResult make_matching(const ConstructionParams& p) {
    if (p.components.size() != 1)
        throw std::invalid_argument("matching construction takes one target graph");
    const SimpleGraph& h = p.components[0];
    if (h.is_empty()) throw std::invalid_argument("target must be nonempty");
    int m = p.m;
    if (m < 1) throw std::invalid_argument("matching size must be at least 1");
    int cone = m - 1;
    int n = h.order + m - 2;
    if (n < 1) throw std::invalid_argument("construction degenerates to an empty host");
    ColoredHost host = assemble_complete(
        n, [&](int u, int v) { return (u < cone || v < cone) ? 1 : 2; });
    ConstructionResult res;
    res.kind = ConstructionKind::Matching;
    res.host = host;
    push_mono_claim(res.claims, host, matching_graph(m), 1);
    push_mono_claim(res.claims, host, h, 2);
    res.parameters = ordered_json{{"target", to_graph6(h)}, {"m", m}, {"n", n}};
    return res;
}

ConstructionResult make_decomp(const ConstructionParams& p) {
    if (p.components.size() != 1)
        throw std::invalid_argument("decomposition construction takes one target graph");
    const SimpleGraph& h = p.components[0];
    if (!is_connected(h) || h.is_empty())
        throw std::invalid_argument("target must be connected and nonempty");
    int chi = chromatic_number(h);
    if (chi < 3) throw std::invalid_argument("target must have chromatic number >= 3");
    DecompositionFamily fam = decomposition_family(h, 2);
    ordered_json echo{{"target", to_graph6(h)}, {"family", graph6_list(fam.members)}};
    int r;
    if (p.table && p.table->family_vs_base(h, 2)) {
        r = *p.table->family_vs_base(h, 2);
        echo["table_values"]["R(H,family)"] = {{"value", r}, {"source", "table"}};
    } else {
        // note the role flip: the witness avoids h in color 1, members in color 2
        std::vector<Forbid> forbids{{h, 1}};
        for (const auto& mg : fam.members) forbids.push_back({mg, 2});
        r = -1;
        for (int nn = 2; nn <= kMaxInnerSearchOrder + 1; ++nn) {
            auto out =
                find_coloring_fixed_roles(HostShape::Complete, 0, nn, 2, forbids, std::nullopt);
            if (out.status == SearchStatus::Exhausted) {
                r = nn;
                break;
            }
        }
        if (r < 0)
            throw std::invalid_argument(
                "missing table entry R(H, family) and the value is beyond the search cap");
        echo["table_values"]["R(H,family)"] = {{"value", r}, {"source", "computed"}};
    }
    std::vector<Forbid> role_forbids{{h, 1}};
    for (const auto& mg : fam.members) role_forbids.push_back({mg, 2});
    ColoredHost inner = inner_witness(r - 1, role_forbids, p.sub_host, echo);

    int small = h.order - 1;
    int small_parts = chi - 2;
    int n = small_parts * small + (r - 1);
    ColoredHost host = assemble_complete(n, [&](int u, int v) {
        int pu = std::min(u / small, small_parts), pv = std::min(v / small, small_parts);
        if (pu != pv) return 2;
        if (pu < small_parts) return 1;
        return role_of(inner, inner.edge_index(u - small_parts * small, v - small_parts * small));
    });
    ConstructionResult res;
    res.kind = ConstructionKind::Decomp;
    res.host = host;
    push_mono_claim(res.claims, host, h, std::nullopt);
    echo["n"] = n;
    res.parameters = std::move(echo);
    return res;
}

ConstructionResult make_bipartite_blowup(const ConstructionParams& p) {
    if (p.components.size() != 1)
        throw std::invalid_argument("blow-up construction takes one target graph");
    const SimpleGraph& h = p.components[0];
    if (!is_connected(h) || h.is_empty())
        throw std::invalid_argument("target must be connected and nonempty");
    int k = p.k;
    if (k < 1) throw std::invalid_argument("need at least one color");
    PartiteProfile prof = partite_profile(h);  // throws when not bipartite
    int f = prof.t - 1;
    if (f < 1) throw std::invalid_argument("target's large side must exceed 1");
    int n = k * f;
    ColoredHost host = assemble_bipartite(
        n, n, [&](int u, int v) { return static_cast<int>((u / f + v / f) % k) + 1; });
    ConstructionResult res;
    res.kind = ConstructionKind::BipartiteBlowup;
    res.host = host;
    push_mono_claim(res.claims, host, h, std::nullopt);
    res.parameters =
        ordered_json{{"target", to_graph6(h)}, {"k", k}, {"t", prof.t}, {"side", n}};
    return res;
}

ConstructionResult make_exact_k(const ConstructionParams& p) {
    if (p.components.size() != 1)
        throw std::invalid_argument("exact-k construction takes one target graph");
    const SimpleGraph& h = p.components[0];
    if (h.is_empty()) throw std::invalid_argument("target must be nonempty");
    int chi = chromatic_number(h);
    int k = p.k;
    if (k < 4 || k > chi)
        throw std::invalid_argument("color count must satisfy 4 <= k <= chi");
    int index = chi - k + 2;
    DecompositionFamily fam = decomposition_family(h, index);
    ordered_json echo{{"target", to_graph6(h)}, {"k", k}, {"family_index", index},
                      {"family", graph6_list(fam.members)}};
    int r;
    if (p.table && p.table->family_vs_base(h, index)) {
        r = *p.table->family_vs_base(h, index);
        echo["table_values"]["R(family,H)"] = {{"value", r}, {"source", "table"}};
    } else {
        r = family_ramsey(fam.members, h, echo, "R(family,H)");
    }
    std::vector<Forbid> role_forbids;
    for (const auto& mg : fam.members) role_forbids.push_back({mg, 1});
    role_forbids.push_back({h, 2});
    ColoredHost inner = inner_witness(r - 1, role_forbids, p.sub_host, echo);

    int small = h.order - 1;
    int small_parts = k - 2;  // parts carrying colors 2..k-1
    int n = small_parts * small + (r - 1);
    ColoredHost host = assemble_complete(n, [&](int u, int v) {
        int pu = std::min(u / small, small_parts), pv = std::min(v / small, small_parts);
        if (pu != pv) return 1;
        if (pu < small_parts) return pu + 2;
        int inner_role =
            role_of(inner, inner.edge_index(u - small_parts * small, v - small_parts * small));
        return inner_role == 1 ? 1 : k;
    });
    ConstructionResult res;
    res.kind = ConstructionKind::ExactK;
    res.host = host;
    res.claims.push_back(no_rainbow(5));
    push_mono_claim(res.claims, host, h, std::nullopt);
    echo["n"] = n;
    res.parameters = std::move(echo);
    return res;
}

ConstructionResult make_bipartite_starpart(const ConstructionParams& p) {
    if (p.components.size() != 1)
        throw std::invalid_argument("star-partition construction takes one target graph");
    const SimpleGraph& h = p.components[0];
    if (h.is_empty()) throw std::invalid_argument("target must be nonempty");
    int k = p.k;
    if (k < 1) throw std::invalid_argument("need at least one color");
    PartiteProfile prof = partite_profile(h);
    if (prof.s < 2) throw std::invalid_argument("target's small side must exceed 1");
    int size = prof.s - 1;
    int n = k * size;
    ColoredHost host =
        assemble_bipartite(n, n, [&](int u, int) { return u / size + 1; });
    ConstructionResult res;
    res.kind = ConstructionKind::BipartiteStarpart;
    res.host = host;
    res.claims.push_back(no_rainbow(4));
    push_mono_claim(res.claims, host, h, std::nullopt);
    res.parameters =
        ordered_json{{"target", to_graph6(h)}, {"k", k}, {"s", prof.s}, {"side", n}};
    return res;
}

ConstructionResult make_no_rainbow_p5_shape(const ConstructionParams& p) {
    if (p.part_sizes.empty()) throw std::invalid_argument("need part sizes");
    for (int s : p.part_sizes)
        if (s < 2) throw std::invalid_argument("every part needs at least 2 vertices");
    int n = std::accumulate(p.part_sizes.begin(), p.part_sizes.end(), 0);
    std::vector<int> part_start{0};
    for (int s : p.part_sizes) part_start.push_back(part_start.back() + s);
    auto part_of = [&](int v) {
        int i = 0;
        while (part_start[i + 1] <= v) ++i;
        return i;
    };
    std::mt19937_64 rng(p.seed);
    std::bernoulli_distribution coin(0.5);
    std::vector<bool> own_seen(p.part_sizes.size(), false);
    ColoredHost probe;
    probe.shape = HostShape::Complete;
    probe.n = n;
    std::vector<int> colors(host_edge_count(HostShape::Complete, 0, n));
    // assign in reverse so the first within-part edge can be forced to the
    // part color once all others are known
    std::vector<std::vector<std::size_t>> within(p.part_sizes.size());
    for (std::size_t e = 0; e < colors.size(); ++e) {
        auto [u, v] = probe.edge_endpoints(e);
        int pu = part_of(u), pv = part_of(v);
        if (pu != pv) {
            colors[e] = 1;
        } else {
            within[pu].push_back(e);
        }
    }
    for (std::size_t pi = 0; pi < within.size(); ++pi) {
        int own = static_cast<int>(pi) + 2;
        for (std::size_t idx = 0; idx < within[pi].size(); ++idx) {
            bool last = idx + 1 == within[pi].size();
            bool seen = own_seen[pi];
            int c;
            if (p.randomize_within && !(last && !seen))
                c = coin(rng) ? own : 1;
            else
                c = own;
            if (c == own) own_seen[pi] = true;
            colors[within[pi][idx]] = c;
        }
    }
    ColoredHost host = build_host(HostShape::Complete, 0, n, colors);
    ConstructionResult res;
    res.kind = ConstructionKind::NoRainbowP5Shape;
    res.host = host;
    res.claims.push_back(no_rainbow(5));
    res.parameters = ordered_json{{"part_sizes", p.part_sizes},
                                  {"n", n},
                                  {"seed", p.seed},
                                  {"randomize_within", p.randomize_within}};
    return res;
}

ConstructionResult make_bipartite_no_rainbow_p4(const ConstructionParams& p) {
    if (p.u_sizes.empty()) throw std::invalid_argument("need part sizes");
    for (int s : p.u_sizes)
        if (s < 1) throw std::invalid_argument("parts must be nonempty");
    int n = std::accumulate(p.u_sizes.begin(), p.u_sizes.end(), 0);
    std::vector<int> start{0};
    for (int s : p.u_sizes) start.push_back(start.back() + s);
    auto part_of = [&](int u) {
        int i = 0;
        while (start[i + 1] <= u) ++i;
        return i;
    };
    ColoredHost host =
        assemble_bipartite(n, n, [&](int u, int) { return part_of(u) + 1; });
    ConstructionResult res;
    res.kind = ConstructionKind::BipartiteNoRainbowP4Shape;
    res.host = host;
    res.claims.push_back(no_rainbow(4));
    res.parameters = ordered_json{{"u_sizes", p.u_sizes}, {"side", n}};
    return res;
}

ConstructionResult make_bipartite_no_rainbow_p5_a(const ConstructionParams& p) {
    if (p.u_sizes.size() != 2) throw std::invalid_argument("need sizes for both left parts");
    if (p.u_sizes[0] < 1) throw std::invalid_argument("the first left part must be nonempty");
    if (p.u_sizes[1] < 0) throw std::invalid_argument("sizes cannot be negative");
    if (p.v_sizes.empty()) throw std::invalid_argument("need right part sizes");
    if (p.v_sizes[0] < 0) throw std::invalid_argument("sizes cannot be negative");
    for (std::size_t i = 1; i < p.v_sizes.size(); ++i)
        if (p.v_sizes[i] < 1)
            throw std::invalid_argument("right parts beyond the first must be nonempty");
    int n = std::accumulate(p.v_sizes.begin(), p.v_sizes.end(), 0);
    if (p.u_sizes[0] + p.u_sizes[1] != n)
        throw std::invalid_argument("side sizes must agree");
    std::vector<int> vstart{0};
    for (int s : p.v_sizes) vstart.push_back(vstart.back() + s);
    auto vpart = [&](int v) {
        int i = 0;
        while (vstart[i + 1] <= v) ++i;
        return i;
    };
    int u1 = p.u_sizes[0];
    ColoredHost host = assemble_bipartite(n, n, [&](int u, int v) {
        if (u >= u1) return 1;       // the all-one left part
        return vpart(v) + 1;         // right part i carries color i
    });
    ConstructionResult res;
    res.kind = ConstructionKind::BipartiteNoRainbowP5A;
    res.host = host;
    res.claims.push_back(no_rainbow(5));
    res.parameters = ordered_json{{"u_sizes", p.u_sizes}, {"v_sizes", p.v_sizes}, {"side", n}};
    return res;
}

ConstructionResult make_bipartite_no_rainbow_p5_b(const ConstructionParams& p) {
    if (p.u_sizes.empty() || p.u_sizes.size() != p.v_sizes.size())
        throw std::invalid_argument("need matching left and right part sizes");
    for (std::size_t i = 0; i < p.u_sizes.size(); ++i)
        if (p.u_sizes[i] < 1 || p.v_sizes[i] < 1)
            throw std::invalid_argument("all parts must be nonempty");
    int n = std::accumulate(p.u_sizes.begin(), p.u_sizes.end(), 0);
    if (n != std::accumulate(p.v_sizes.begin(), p.v_sizes.end(), 0))
        throw std::invalid_argument("side sizes must agree");
    std::vector<int> ustart{0}, vstart{0};
    for (int s : p.u_sizes) ustart.push_back(ustart.back() + s);
    for (int s : p.v_sizes) vstart.push_back(vstart.back() + s);
    auto upart = [&](int u) {
        int i = 0;
        while (ustart[i + 1] <= u) ++i;
        return i;
    };
    auto vpart = [&](int v) {
        int i = 0;
        while (vstart[i + 1] <= v) ++i;
        return i;
    };
    std::mt19937_64 rng(p.seed);
    std::bernoulli_distribution coin(0.5);
    int blocks = static_cast<int>(p.u_sizes.size());
    std::vector<bool> own_seen(blocks, false);
    std::vector<int> colors;
    colors.reserve(static_cast<std::size_t>(n) * n);
    // row-major edge order; the last cell of each diagonal block backstops the
    // block color when randomization never picked it
    std::vector<std::vector<std::pair<int, int>>> block_cells(blocks);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (upart(u) == vpart(v)) block_cells[upart(u)].emplace_back(u, v);
    std::vector<std::vector<int>> cell_color(n, std::vector<int>(n, 1));
    for (int b = 0; b < blocks; ++b) {
        int own = b + 2;
        for (std::size_t idx = 0; idx < block_cells[b].size(); ++idx) {
            bool last = idx + 1 == block_cells[b].size();
            int c;
            if (p.randomize_within && !(last && !own_seen[b]))
                c = coin(rng) ? own : 1;
            else
                c = own;
            if (c == own) own_seen[b] = true;
            auto [u, v] = block_cells[b][idx];
            cell_color[u][v] = c;
        }
    }
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) colors.push_back(cell_color[u][v]);
    ColoredHost host = build_host(HostShape::Bipartite, n, n, colors);
    ConstructionResult res;
    res.kind = ConstructionKind::BipartiteNoRainbowP5B;
    res.host = host;
    res.claims.push_back(no_rainbow(5));
    res.parameters = ordered_json{{"u_sizes", p.u_sizes},
                                  {"v_sizes", p.v_sizes},
                                  {"side", n},
                                  {"seed", p.seed},
                                  {"randomize_within", p.randomize_within}};
    return res;
}

}  // namespace

std::string kind_name(ConstructionKind kind) {
    for (auto [k, name] : kKindNames)
        if (k == kind) return name;
    return "?";
}

std::optional<ConstructionKind> kind_from_name(const std::string& name) {
    for (auto [k, n] : kKindNames)
        if (name == n) return k;
    return std::nullopt;
}

std::vector<ConstructionKind> all_construction_kinds() {
    std::vector<ConstructionKind> out;
    for (auto [k, n] : kKindNames) out.push_back(k);
    return out;
}

ConstructionResult construct(ConstructionKind kind, const ConstructionParams& params) {
    ConstructionResult res;
    switch (kind) {
        case ConstructionKind::R3I: res = make_r3_i(params); break;
        case ConstructionKind::R3II: res = make_r3_ii(params); break;
        case ConstructionKind::R3III: res = make_r3_iii(params); break;
        case ConstructionKind::R3IV: res = make_r3_iv(params); break;
        case ConstructionKind::Matching: res = make_matching(params); break;
        case ConstructionKind::Decomp: res = make_decomp(params); break;
        case ConstructionKind::BipartiteBlowup: res = make_bipartite_blowup(params); break;
        case ConstructionKind::ExactK: res = make_exact_k(params); break;
        case ConstructionKind::BipartiteStarpart: res = make_bipartite_starpart(params); break;
        case ConstructionKind::NoRainbowP5Shape: res = make_no_rainbow_p5_shape(params); break;
        case ConstructionKind::BipartiteNoRainbowP4Shape:
            res = make_bipartite_no_rainbow_p4(params);
            break;
        case ConstructionKind::BipartiteNoRainbowP5A:
            res = make_bipartite_no_rainbow_p5_a(params);
            break;
        case ConstructionKind::BipartiteNoRainbowP5B:
            res = make_bipartite_no_rainbow_p5_b(params);
            break;
    }
    res.parameters["kind"] = kind_name(kind);
    return res;
}

VerifyReport verify_construction(const ConstructionResult& result) {
    VerifyReport report;
    report.all_pass = true;
    for (const auto& claim : result.claims) {
        ClaimReport entry;
        entry.claim = claim;
        if (claim.type == Claim::Type::NoMono) {
            auto hit = find_mono_copy(result.host, claim.pattern, claim.color);
            entry.pass = !hit.has_value();
            entry.counterexample = std::move(hit);
        } else {
            auto hit = find_rainbow_path(result.host, claim.path_order);
            entry.pass = !hit.has_value();
            entry.counterexample = std::move(hit);
        }
        report.all_pass = report.all_pass && entry.pass;
        report.entries.push_back(std::move(entry));
    }
    return report;
}

}  // namespace rf
