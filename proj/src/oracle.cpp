#include "rf/oracle.hpp"

#include <algorithm>
#include <functional>

#include "rf/decomposition.hpp"
#include "rf/invariants.hpp"

namespace rf {

namespace {

using nlohmann::ordered_json;

struct Profile {
    GraphInvariants inv;
    std::vector<SimpleGraph> comps;
    std::vector<GraphInvariants> comp_inv;
};

Profile profile_of(const SimpleGraph& h) {
    Profile p;
    p.inv = invariants(h);
    p.comps = split_components(h);
    for (const auto& c : p.comps) p.comp_inv.push_back(invariants(c));
    return p;
}

bool is_tree(const SimpleGraph& g) {
    return g.order >= 1 && is_connected(g) && g.edge_count() == g.order - 1;
}

bool is_cycle(const SimpleGraph& g) {
    if (g.order < 3 || !is_connected(g)) return false;
    for (int v = 0; v < g.order; ++v)
        if (g.degree(v) != 2) return false;
    return true;
}

// ---------------------------------------------------------------- bounds ---

void rule_burr(const Profile& p, const SimpleGraph& h, BoundReport& rep) {
    if (!p.inv.is_connected || h.is_empty()) return;
    BoundEntry e;
    e.rule = "burr";
    e.target = "R_2(H)";
    e.direction = 'L';
    e.value = static_cast<long long>(p.inv.chromatic_number - 1) * (h.order - 1) +
              p.inv.chromatic_surplus;
    e.expression = "(chi-1)(n-1)+sigma";
    e.inputs = {{"chi", p.inv.chromatic_number},
                {"n", h.order},
                {"sigma", p.inv.chromatic_surplus}};
    rep.entries.push_back(std::move(e));
}

void rule_chvatal(const Profile&, const SimpleGraph& h, BoundReport& rep) {
    if (!is_tree(h) || h.is_empty()) return;
    BoundEntry e;
    e.rule = "chvatal";
    e.target = "R(K_m,H)";
    e.direction = 'E';
    e.expression = "(n-1)(m-1)+1";
    e.inputs = {{"n", h.order}};
    rep.entries.push_back(std::move(e));
}

void rule_fass(const Profile& p, const SimpleGraph& h, BoundReport& rep) {
    if (p.inv.has_isolated || h.is_empty()) return;
    SimpleGraph comp = complement(h);
    int c = clique_number(comp);  // independence number of h
    SimpleGraph requirement = disjoint_union(complete_graph(c), complete_graph((c + 1) / 2));
    if (requirement.order > comp.order || !contains_subgraph(comp, requirement)) return;
    BoundEntry e;
    e.rule = "fass";
    e.target = "R(mK_2,H)";
    e.direction = 'E';
    e.expression = "max{n+2m-c-1, n+m-1}";
    e.inputs = {{"n", h.order}, {"c", c}};
    rep.entries.push_back(std::move(e));
}

void rule_matching_components(const Profile& p, const SimpleGraph& h, BoundReport& rep) {
    if (p.inv.has_isolated || h.is_empty()) return;
    BoundEntry e;
    e.rule = "matching-components";
    e.target = "R(mK_2,H)";
    e.direction = 'E';
    e.expression = "n+m-1 for m <= components";
    e.inputs = {{"n", h.order}, {"components", p.inv.components}};
    rep.entries.push_back(std::move(e));
}

bool components_connected_nonempty(const Profile& p) {
    if (p.comps.empty()) return false;
    for (const auto& ci : p.comp_inv)
        if (ci.has_isolated || ci.chromatic_number < 2) return false;
    return true;  // connected by construction of components; nonempty = chi >= 2
}

void rule_r3_i(const Profile& p, const SimpleGraph&, const KnownValuesTable& table,
               BoundReport& rep) {
    if (!components_connected_nonempty(p)) return;
    int t = static_cast<int>(p.comps.size());
    std::optional<long long> best;
    ordered_json best_inputs;
    bool missing = false;
    for (int i = 0; i < t; ++i) {
        int chi = p.comp_inv[i].chromatic_number;
        long long surplus = 0;
        for (int k = 0; k < t; ++k)
            if (p.comp_inv[k].chromatic_number == chi) surplus += p.comp_inv[k].chromatic_surplus;
        for (int j = 0; j < t; ++j) {
            for (int l = 0; l < t; ++l) {
                auto r = table.two_color(p.comps[j], p.comps[l]);
                if (!r) {
                    missing = true;
                    continue;
                }
                long long v = static_cast<long long>(chi - 1) * (*r - 1) + surplus;
                if (!best || v > *best) {
                    best = v;
                    best_inputs = {{"i", i + 1}, {"j", j + 1}, {"l", l + 1},
                                   {"chi_i", chi},  {"R", *r},    {"surplus_sum", surplus}};
                }
            }
        }
    }
    BoundEntry e;
    e.rule = "r3-i";
    e.target = "R_3(H)";
    e.direction = 'L';
    e.expression = "(chi_i-1)(R(G_j,G_l)-1)+sum sigma over the chi_i class";
    if (best) {
        e.value = best;
        e.inputs = best_inputs;
        if (missing) e.inputs["note"] = "some pairs lacked table values";
    } else {
        e.unknown = true;
        e.inputs = {{"note", "no table entry R(G_j,G_l) available"}};
    }
    rep.entries.push_back(std::move(e));
}

void rule_r3_ii(const Profile& p, const SimpleGraph&, const KnownValuesTable& table,
                BoundReport& rep) {
    if (!components_connected_nonempty(p)) return;
    int t = static_cast<int>(p.comps.size());
    std::optional<long long> best;
    ordered_json best_inputs;
    bool missing = false;
    for (int i = 0; i < t; ++i) {
        int omega = p.comp_inv[i].clique_number;
        std::optional<int> r2;
        std::string source = "table";
        if (omega == 2) {
            r2 = 2;  // a single edge forces itself
            source = "definition";
        } else if (auto v = table.two_color(complete_graph(omega), complete_graph(omega))) {
            r2 = v;
        }
        if (!r2) {
            missing = true;
            continue;
        }
        for (int j = 0; j < t; ++j) {
            long long v = static_cast<long long>(*r2 - 1) * (p.comps[j].order - 1) + 1;
            if (!best || v > *best) {
                best = v;
                best_inputs = {{"i", i + 1},    {"j", j + 1},          {"omega", omega},
                               {"R2", *r2},     {"R2_source", source}, {"n_j", p.comps[j].order}};
            }
        }
    }
    BoundEntry e;
    e.rule = "r3-ii";
    e.target = "R_3(H)";
    e.direction = 'L';
    e.expression = "(R_2(K_omega_i)-1)(n_j-1)+1";
    if (best) {
        e.value = best;
        e.inputs = best_inputs;
        if (missing) e.inputs["note"] = "some clique values lacked table entries";
    } else {
        e.unknown = true;
        e.inputs = {{"note", "no table entry R_2(K_omega) available"}};
    }
    rep.entries.push_back(std::move(e));
}

void rule_r3_iii(const Profile& p, const SimpleGraph& h, BoundReport& rep) {
    if (!components_connected_nonempty(p)) return;
    for (const auto& ci : p.comp_inv)
        if (ci.chromatic_number != 3) return;
    BoundEntry e;
    e.rule = "r3-iii";
    e.target = "R_3(H)";
    e.direction = 'L';
    e.value = 3LL * h.order - 2;
    e.expression = "3*sum(n_i)-2";
    e.inputs = {{"total_order", h.order}};
    rep.entries.push_back(std::move(e));
}

void rule_r3_iv(const Profile& p, const SimpleGraph& h, BoundReport& rep) {
    if (!components_connected_nonempty(p)) return;
    int max_chi = 0;
    long long s3 = 0;
    for (const auto& ci : p.comp_inv) {
        max_chi = std::max(max_chi, ci.chromatic_number);
        s3 += ci.sigma3;
    }
    if (max_chi != 3) return;
    BoundEntry e;
    e.rule = "r3-iv";
    e.target = "R_3(H)";
    e.direction = 'L';
    e.value = 2LL * h.order + s3 - 2;
    e.expression = "2*sum(n_i)+sum(sigma3_i)-2";
    e.inputs = {{"total_order", h.order}, {"sigma3_sum", s3}};
    rep.entries.push_back(std::move(e));
}

void rule_decomp_lower(const Profile& p, const SimpleGraph& h, const KnownValuesTable& table,
                       BoundReport& rep) {
    if (!p.inv.is_connected || p.inv.chromatic_number < 3 || h.is_empty()) return;
    BoundEntry e;
    e.rule = "decomp-lower";
    e.target = "R_2(H)";
    e.direction = 'L';
    e.expression = "R(H,family)+(chi-2)(n-1)";
    auto rm = table.family_vs_base(h, 2);
    if (rm) {
        e.value = *rm + static_cast<long long>(p.inv.chromatic_number - 2) * (h.order - 1);
        e.inputs = {{"R(H,family)", *rm}, {"chi", p.inv.chromatic_number}, {"n", h.order}};
    } else {
        e.unknown = true;
        e.inputs = {{"note", "no table entry for R(H,family)"}};
    }
    rep.entries.push_back(std::move(e));
}

void rule_decomp_union_upper(const Profile& p, const SimpleGraph&, const KnownValuesTable& table,
                             BoundReport& rep) {
    if (p.comps.size() != 2) return;
    if (!components_connected_nonempty(p)) return;
    for (int pick = 0; pick < 2; ++pick) {
        const SimpleGraph& g = p.comps[pick];
        const SimpleGraph& hh = p.comps[1 - pick];
        if (p.comp_inv[1 - pick].chromatic_number < 3) continue;
        BoundEntry e;
        e.rule = "decomp-union-upper";
        e.target = "R(G+H, family(H))";
        e.direction = 'U';
        e.expression = "max{R(G,H), R(H,family)+|V(G)|}";
        auto rgh = table.two_color(g, hh);
        auto rm = table.family_vs_base(hh, 2);
        if (rgh && rm) {
            e.value = std::max<long long>(*rgh, *rm + g.order);
            e.inputs = {{"G", to_graph6(g)}, {"H", to_graph6(hh)}, {"R(G,H)", *rgh},
                        {"R(H,family)", *rm}};
        } else {
            e.unknown = true;
            e.inputs = {{"G", to_graph6(g)},
                        {"H", to_graph6(hh)},
                        {"note", "needs table entries R(G,H) and R(H,family)"}};
        }
        rep.entries.push_back(std::move(e));
    }
}

void rule_bipartite_blowup(const Profile& p, const SimpleGraph& h, BoundReport& rep) {
    if (!p.inv.is_connected || !p.inv.is_bipartite || h.is_empty()) return;
    PartiteProfile prof = partite_profile(h);
    BoundEntry e;
    e.rule = "bipartite-blowup";
    e.target = "BR_k(H)";
    e.direction = 'L';
    e.expression = "k(t-1)+1";
    e.inputs = {{"t", prof.t}};
    rep.entries.push_back(e);
    for (int k : {2, 3}) {
        BoundEntry inst;
        inst.rule = "bipartite-blowup";
        inst.target = "BR_" + std::to_string(k) + "(H)";
        inst.direction = 'L';
        inst.value = static_cast<long long>(k) * (prof.t - 1) + 1;
        inst.expression = "k(t-1)+1";
        inst.inputs = {{"t", prof.t}, {"k", k}};
        rep.entries.push_back(std::move(inst));
    }
}

void rule_f_lower(const Profile&, const SimpleGraph& h, const KnownValuesTable& table,
                  BoundReport& rep) {
    if (h.is_empty()) return;
    BoundEntry e;
    e.rule = "f-lower";
    e.target = "f(H,P_5)";
    e.direction = 'L';
    e.expression = "R_3(H)";
    if (auto r3 = table.multicolor(3, h)) {
        e.value = *r3;
        e.inputs = {{"R_3(H)", *r3}};
    } else {
        e.unknown = true;
        e.inputs = {{"note", "no table entry for R_3(H)"}};
    }
    rep.entries.push_back(std::move(e));
}

void rule_exact_k(const Profile& p, const SimpleGraph& h, const KnownValuesTable& table,
                  BoundReport& rep) {
    int chi = p.inv.chromatic_number;
    if (chi < 4 || h.is_empty()) return;
    for (int k = 4; k <= chi; ++k) {
        int index = chi - k + 2;
        BoundEntry e;
        e.rule = "exact-k";
        e.target = "f_exact_" + std::to_string(k) + "(H,P_5)";
        e.direction = 'L';
        e.expression = "(k-2)(n-1)+R(family_i(H),H)";
        auto rm = table.family_vs_base(h, index);
        if (rm) {
            e.value = static_cast<long long>(k - 2) * (h.order - 1) + *rm;
            e.inputs = {{"k", k}, {"family_index", index}, {"R(family,H)", *rm}, {"n", h.order}};
        } else {
            e.unknown = true;
            e.inputs = {{"k", k},
                        {"family_index", index},
                        {"note", "no table entry for R(family,H)"}};
        }
        rep.entries.push_back(std::move(e));
    }
}

void rule_hk(const Profile& p, const SimpleGraph& h, const KnownValuesTable& table,
             BoundReport& rep) {
    if (!p.inv.is_bipartite || h.is_empty()) return;
    PartiteProfile prof = partite_profile(h);
    for (int t : {4, 5}) {
        int budget = t - 2;
        BoundEntry e;
        e.rule = t == 4 ? "hk-p4" : "hk-p5";
        e.target = "h_k(H,P_" + std::to_string(t) + ")";
        e.direction = 'E';
        e.expression = "max{BR_" + std::to_string(budget) + "(H), k(s-1)+1}";
        e.inputs = {{"s", prof.s}, {"t", prof.t}, {"connected", p.inv.is_connected}};
        if (t == 5 && h.order < 4) e.inputs["note"] = "needs |V(H)| >= 4";
        if (auto br = table.bipartite(budget, h))
            e.inputs["BR_" + std::to_string(budget) + "(H)"] = *br;
        else
            e.unknown = true;
        rep.entries.push_back(std::move(e));
    }
}

// ------------------------------------------------------------ hypotheses ---

TheoremVerdict check_connected_or_bipartite(const Profile& p) {
    TheoremVerdict v;
    v.id = "connected-or-bipartite";
    v.trace = {{"connected", p.inv.is_connected}, {"bipartite", p.inv.is_bipartite}};
    if (p.inv.is_connected || p.inv.is_bipartite) {
        v.verdict = Verdict::Applies;
        v.conclusion = "f(H,P_5) = R_3(H)";
    } else {
        v.verdict = Verdict::Not;
        v.conclusion = "graph is neither connected nor bipartite";
    }
    return v;
}

TheoremVerdict check_chromatic_budget(const Profile& p, const SimpleGraph& h,
                                      const KnownValuesTable& table) {
    TheoremVerdict v;
    v.id = "chromatic-budget";
    int chi = p.inv.chromatic_number;
    v.trace = {{"chi", chi}};
    if (h.is_empty()) {
        v.verdict = Verdict::Not;
        v.conclusion = "graph has no edges";
        return v;
    }
    v.verdict = Verdict::Applies;
    v.conclusion = "f(H,P_5) <= R_" + std::to_string(chi + 1) + "(H)";
    if (auto r = table.multicolor(chi + 1, h)) {
        v.conclusion += " = " + std::to_string(*r);
        v.trace["R_budget"] = *r;
    }
    return v;
}

TheoremVerdict check_homological(const Profile& p) {
    TheoremVerdict v;
    v.id = "homological";
    if (p.comps.size() < 1) {
        v.verdict = Verdict::Not;
        v.conclusion = "no components";
        return v;
    }
    return homological_certificate(p.comps);
}

TheoremVerdict check_three_copies(const Profile& p) {
    TheoremVerdict v;
    v.id = "three-copies";
    if (p.comps.size() != 3 || !isomorphic(p.comps[0], p.comps[1]) ||
        !isomorphic(p.comps[1], p.comps[2])) {
        v.verdict = Verdict::Not;
        v.conclusion = "not three copies of one graph";
        return v;
    }
    if (!components_connected_nonempty(p) || p.comp_inv[0].chromatic_number != 3) {
        v.verdict = Verdict::Not;
        v.conclusion = "copies must be connected with chromatic number 3";
        return v;
    }
    v.verdict = Verdict::Applies;
    v.conclusion = "f(H,P_5) = R_3(H)";
    v.trace = {{"component", to_graph6(p.comps[0])}};
    return v;
}

TheoremVerdict check_union_pair(const Profile& p) {
    TheoremVerdict v;
    v.id = "union-pair";
    if (p.comps.size() != 2 || !components_connected_nonempty(p)) {
        v.verdict = Verdict::Not;
        v.conclusion = "needs exactly two connected nonempty components";
        return v;
    }
    bool sub01 = contains_subgraph(p.comps[1], p.comps[0]);
    bool sub10 = contains_subgraph(p.comps[0], p.comps[1]);
    v.trace = {{"first_in_second", sub01}, {"second_in_first", sub10}};
    if (sub01 || sub10) {
        v.verdict = Verdict::Applies;
        v.conclusion = "f(H,P_5) = R_3(H)";
    } else {
        v.verdict = Verdict::Not;
        v.conclusion = "neither component embeds in the other";
    }
    return v;
}

// shared scaffolding for the union-of-subgraphs rules: pick the host
// component, require the rest to embed in it
struct UnionShape {
    bool ok = false;
    int host_idx = -1;
    int satellite_count = 0;
};

UnionShape union_shape(const Profile& p) {
    UnionShape shape;
    if (p.comps.size() < 2 || !components_connected_nonempty(p)) return shape;
    for (int g = 0; g < static_cast<int>(p.comps.size()); ++g) {
        bool all = true;
        for (int o = 0; o < static_cast<int>(p.comps.size()) && all; ++o) {
            if (o == g) continue;
            if (!contains_subgraph(p.comps[g], p.comps[o])) all = false;
        }
        if (all) {
            shape.ok = true;
            shape.host_idx = g;
            shape.satellite_count = static_cast<int>(p.comps.size()) - 1;
            return shape;
        }
    }
    return shape;
}

TheoremVerdict check_union_many(const Profile& p, const KnownValuesTable& table) {
    TheoremVerdict v;
    v.id = "union-many";
    UnionShape shape = union_shape(p);
    if (!shape.ok) {
        v.verdict = Verdict::Not;
        v.conclusion = "no component contains all the others";
        return v;
    }
    const SimpleGraph& g = p.comps[shape.host_idx];
    const GraphInvariants& gi = p.comp_inv[shape.host_idx];
    auto r2 = table.two_color(g, g);
    v.trace = {{"host", to_graph6(g)},
               {"satellites", shape.satellite_count},
               {"chi", gi.chromatic_number},
               {"sigma", gi.chromatic_surplus}};
    if (!r2) {
        v.verdict = Verdict::Unknown;
        v.conclusion = "needs a table entry for R_2 of the host component";
        return v;
    }
    v.trace["R_2"] = *r2;
    // t <= ((chi-2)(R_2-1)+sigma-1) / (chi * n)
    long long lhs = static_cast<long long>(shape.satellite_count) *
                    gi.chromatic_number * g.order;
    long long rhs = static_cast<long long>(gi.chromatic_number - 2) * (*r2 - 1) +
                    gi.chromatic_surplus - 1;
    v.trace["t_times_chi_n"] = lhs;
    v.trace["bound"] = rhs;
    if (lhs <= rhs) {
        v.verdict = Verdict::Applies;
        v.conclusion = "f(H,P_5) = R_3(H)";
    } else {
        v.verdict = Verdict::Not;
        v.conclusion = "too many satellite components for the host's parameters";
    }
    return v;
}

TheoremVerdict check_union_chromatic(const Profile& p) {
    TheoremVerdict v;
    v.id = "union-chromatic";
    UnionShape shape = union_shape(p);
    if (!shape.ok) {
        v.verdict = Verdict::Not;
        v.conclusion = "no component contains all the others";
        return v;
    }
    int chi = p.comp_inv[shape.host_idx].chromatic_number;
    int t = shape.satellite_count;
    // chi >= (t+4+sqrt((t+4)^2-12))/2, kept in integers
    long long a = 2LL * chi - (t + 4);
    bool ok = a >= 0 && a * a >= static_cast<long long>(t + 4) * (t + 4) - 12;
    v.trace = {{"host", to_graph6(p.comps[shape.host_idx])},
               {"satellites", t},
               {"chi", chi}};
    if (ok) {
        v.verdict = Verdict::Applies;
        v.conclusion = "f(H,P_5) = R_3(H)";
    } else {
        v.verdict = Verdict::Not;
        v.conclusion = "host chromatic number below the threshold";
    }
    return v;
}

TheoremVerdict check_critical_or_bipartite(const Profile& p) {
    TheoremVerdict v;
    v.id = "critical-or-bipartite";
    ordered_json comps = ordered_json::array();
    bool all = !p.comps.empty();
    for (std::size_t i = 0; i < p.comps.size(); ++i) {
        bool bip = p.comp_inv[i].chromatic_number <= 2;
        bool crit = false;
        if (!bip) crit = is_color_critical(p.comps[i], 3).critical;
        comps.push_back({{"component", to_graph6(p.comps[i])},
                         {"bipartite", bip},
                         {"three_critical", crit}});
        if (!bip && !crit) all = false;
    }
    v.trace = {{"components", comps}};
    if (all) {
        v.verdict = Verdict::Applies;
        v.conclusion = "f(H,P_5) = R_3(H)";
    } else {
        v.verdict = Verdict::Not;
        v.conclusion = "a component is neither 3-color-critical nor bipartite";
    }
    return v;
}

TheoremVerdict check_cycle_union(const Profile& p) {
    TheoremVerdict v;
    v.id = "cycle-union";
    bool all = !p.comps.empty();
    for (const auto& c : p.comps)
        if (!is_cycle(c)) all = false;
    if (all) {
        v.verdict = Verdict::Applies;
        v.conclusion = "f(H,P_5) = R_3(H)";
    } else {
        v.verdict = Verdict::Not;
        v.conclusion = "not a disjoint union of cycles";
    }
    return v;
}

// find a proper coloring realizing the sorted class sizes; returns it 1-based
std::optional<std::vector<int>> coloring_with_sizes(const SimpleGraph& g, int p,
                                                    std::vector<int> want) {
    std::sort(want.begin(), want.end(), std::greater<>());
    std::optional<std::vector<int>> found;
    for_each_proper_coloring(g, p, [&](std::span<const int> color) {
        std::vector<int> count(p, 0);
        for (int c : color) ++count[c - 1];
        std::vector<int> sorted = count;
        std::sort(sorted.begin(), sorted.end(), std::greater<>());
        if (sorted == want) {
            found.emplace(color.begin(), color.end());
            return false;
        }
        return true;
    });
    return found;
}

TheoremVerdict check_balanced_classes(const Profile& p) {
    TheoremVerdict v;
    v.id = "balanced-classes";
    if (!components_connected_nonempty(p)) {
        v.verdict = Verdict::Not;
        v.conclusion = "components must be connected and nonempty";
        return v;
    }
    int trichromatic = 0;
    for (const auto& ci : p.comp_inv) {
        if (ci.chromatic_number > 3) {
            v.verdict = Verdict::Not;
            v.conclusion = "a component exceeds chromatic number 3";
            return v;
        }
        if (ci.chromatic_number == 3) ++trichromatic;
    }
    if (trichromatic == 0) {
        v.verdict = Verdict::Not;
        v.conclusion = "needs at least one 3-chromatic component";
        return v;
    }
    long long csum = 0;
    for (const auto& ci : p.comp_inv) csum += ci.sigma3;
    ordered_json wits = ordered_json::array();
    for (std::size_t i = 0; i < p.comps.size(); ++i) {
        const auto& ci = p.comp_inv[i];
        bool tri = ci.chromatic_number == 3;
        int c_i = ci.sigma3;
        long long need_b = csum - 2LL * c_i;
        std::optional<std::vector<int>> sizes;
        if (tri) {
            for (const auto& vec : proper_coloring_size_vectors(p.comps[i], 3)) {
                if (vec[2] != c_i) continue;
                if (vec[0] - vec[1] > 1) continue;
                if (vec[1] < need_b) continue;
                sizes = vec;
                break;
            }
        } else {
            for (const auto& vec : proper_coloring_size_vectors(p.comps[i], 2)) {
                if (vec[0] != vec[1]) continue;
                if (vec[1] < need_b) continue;
                sizes = std::vector<int>{vec[0], vec[1], 0};
                break;
            }
        }
        if (!sizes) {
            v.verdict = Verdict::Not;
            v.conclusion = "component " + to_graph6(p.comps[i]) +
                           " admits no qualifying class sizes";
            return v;
        }
        auto realized = coloring_with_sizes(p.comps[i], tri ? 3 : 2,
                                            tri ? *sizes
                                                : std::vector<int>{(*sizes)[0], (*sizes)[1]});
        ordered_json w = {{"component", to_graph6(p.comps[i])},
                          {"sizes", *sizes}};
        if (realized) w["coloring"] = *realized;
        wits.push_back(std::move(w));
    }
    v.trace = {{"sigma3_sum", csum}, {"witnesses", wits}};
    v.verdict = Verdict::Applies;
    v.conclusion = "f(H,P_5) = R_3(H)";
    return v;
}

TheoremVerdict check_one_trichromatic(const Profile& p) {
    TheoremVerdict v;
    v.id = "one-trichromatic";
    if (p.inv.chromatic_number != 3) {
        v.verdict = Verdict::Not;
        v.conclusion = "graph is not 3-chromatic";
        return v;
    }
    int tri = 0;
    int min_order = p.comps.empty() ? 0 : p.comps[0].order;
    for (std::size_t i = 0; i < p.comps.size(); ++i) {
        if (p.comp_inv[i].chromatic_number == 3) ++tri;
        min_order = std::min(min_order, p.comps[i].order);
    }
    v.trace = {{"trichromatic_components", tri},
               {"min_component_order", min_order},
               {"sigma", p.inv.chromatic_surplus}};
    if (tri != 1) {
        v.verdict = Verdict::Not;
        v.conclusion = "needs exactly one 3-chromatic component";
        return v;
    }
    if (min_order < p.inv.chromatic_surplus) {
        v.verdict = Verdict::Not;
        v.conclusion = "a component is smaller than the chromatic surplus";
        return v;
    }
    v.verdict = Verdict::Applies;
    v.conclusion = "f(H,P_5) = R_3(H)";
    return v;
}

TheoremVerdict check_surplus_one(const Profile& p) {
    TheoremVerdict v;
    v.id = "surplus-one";
    v.trace = {{"chi", p.inv.chromatic_number}, {"sigma", p.inv.chromatic_surplus}};
    if (p.inv.chromatic_number == 3 && p.inv.chromatic_surplus == 1) {
        v.verdict = Verdict::Applies;
        v.conclusion = "f(H,P_5) = R_3(H)";
    } else {
        v.verdict = Verdict::Not;
        v.conclusion = "needs chromatic number 3 with surplus 1";
    }
    return v;
}

TheoremVerdict check_pair_sigma(const Profile& p) {
    TheoremVerdict v;
    v.id = "pair-sigma";
    if (p.comps.size() != 2 || !components_connected_nonempty(p)) {
        v.verdict = Verdict::Not;
        v.conclusion = "needs exactly two connected nonempty components";
        return v;
    }
    int a = 0, b = 1;
    if (p.comp_inv[a].chromatic_number > p.comp_inv[b].chromatic_number) std::swap(a, b);
    int chi1 = p.comp_inv[a].chromatic_number, chi2 = p.comp_inv[b].chromatic_number;
    v.trace = {{"chi", {chi1, chi2}},
               {"sigma3", {p.comp_inv[a].sigma3, p.comp_inv[b].sigma3}},
               {"orders", {p.comps[a].order, p.comps[b].order}}};
    if (chi2 != 3 || chi1 > 3) {
        v.verdict = Verdict::Not;
        v.conclusion = "needs chi(G1) <= chi(G2) = 3";
        return v;
    }
    int need = p.comp_inv[a].sigma3 + p.comp_inv[b].sigma3;
    if (std::min(p.comps[a].order, p.comps[b].order) < need) {
        v.verdict = Verdict::Not;
        v.conclusion = "a component is smaller than the surplus sum";
        return v;
    }
    v.verdict = Verdict::Applies;
    v.conclusion = "f(H,P_5) = R_3(H)";
    return v;
}

TheoremVerdict check_container_family(const Profile& p, const SimpleGraph& h,
                                      const KnownValuesTable& table) {
    TheoremVerdict v;
    v.id = "container-family";
    if (p.inv.is_connected) {
        v.verdict = Verdict::Not;
        v.conclusion = "applies to disconnected graphs only";
        return v;
    }
    auto r3 = table.multicolor(3, h);
    auto r2c = table.connected_family(h);
    if (!r3 || !r2c) {
        v.verdict = Verdict::Unknown;
        v.conclusion = "needs table entries for R_3(H) and the connected-supergraph value";
        return v;
    }
    v.trace = {{"R_3", *r3}, {"R_2_connected_family", *r2c}};
    if (*r3 >= *r2c) {
        v.verdict = Verdict::Applies;
        v.conclusion = "f(H,P_5) = R_3(H)";
    } else {
        v.verdict = Verdict::Not;
        v.conclusion = "R_3(H) falls below the connected-supergraph threshold";
    }
    return v;
}

TheoremVerdict check_isolated_reduction(const Profile& p) {
    TheoremVerdict v;
    v.id = "isolated-reduction";
    v.trace = {{"has_isolated", p.inv.has_isolated}};
    if (p.inv.has_isolated) {
        v.verdict = Verdict::Applies;
        v.conclusion =
            "strip the isolated vertices; the equality transfers from the stripped graph";
    } else {
        v.verdict = Verdict::Not;
        v.conclusion = "no isolated vertices to strip";
    }
    return v;
}

}  // namespace

BoundReport formula_bounds(const SimpleGraph& h, const KnownValuesTable& table) {
    Profile p = profile_of(h);
    BoundReport rep;
    rep.graph = h;
    rule_burr(p, h, rep);
    rule_chvatal(p, h, rep);
    rule_fass(p, h, rep);
    rule_matching_components(p, h, rep);
    rule_r3_i(p, h, table, rep);
    rule_r3_ii(p, h, table, rep);
    rule_r3_iii(p, h, rep);
    rule_r3_iv(p, h, rep);
    rule_decomp_lower(p, h, table, rep);
    rule_decomp_union_upper(p, h, table, rep);
    rule_bipartite_blowup(p, h, rep);
    rule_f_lower(p, h, table, rep);
    rule_exact_k(p, h, table, rep);
    rule_hk(p, h, table, rep);
    return rep;
}

ApplicabilityReport applicability_report(const SimpleGraph& h, const KnownValuesTable& table) {
    Profile p = profile_of(h);
    ApplicabilityReport rep;
    rep.graph = h;
    rep.verdicts.push_back(check_connected_or_bipartite(p));
    rep.verdicts.push_back(check_chromatic_budget(p, h, table));
    rep.verdicts.push_back(check_homological(p));
    rep.verdicts.push_back(check_three_copies(p));
    rep.verdicts.push_back(check_union_pair(p));
    rep.verdicts.push_back(check_union_many(p, table));
    rep.verdicts.push_back(check_union_chromatic(p));
    rep.verdicts.push_back(check_critical_or_bipartite(p));
    rep.verdicts.push_back(check_cycle_union(p));
    rep.verdicts.push_back(check_balanced_classes(p));
    rep.verdicts.push_back(check_one_trichromatic(p));
    rep.verdicts.push_back(check_surplus_one(p));
    rep.verdicts.push_back(check_pair_sigma(p));
    rep.verdicts.push_back(check_container_family(p, h, table));
    rep.verdicts.push_back(check_isolated_reduction(p));
    return rep;
}

TheoremVerdict homological_certificate(std::span<const SimpleGraph> graphs) {
    TheoremVerdict v;
    v.id = "homological";
    if (graphs.empty()) {
        v.verdict = Verdict::Not;
        v.conclusion = "no graphs given";
        return v;
    }
    for (const auto& g : graphs) {
        if (!is_connected(g) || g.is_empty()) {
            v.verdict = Verdict::Not;
            v.conclusion = "graphs must be connected and nonempty";
            return v;
        }
        if (g.order != graphs[0].order) {
            v.verdict = Verdict::Not;
            v.conclusion = "graphs must share one order";
            return v;
        }
    }
    std::optional<std::vector<int>> vec;
    try {
        vec = homological_vector(graphs);
    } catch (const std::invalid_argument& err) {
        v.verdict = Verdict::Not;
        v.conclusion = err.what();
        return v;
    }
    if (!vec) {
        v.verdict = Verdict::Not;
        v.conclusion = "no shared class-size vector exists";
        return v;
    }
    int pmax = 0;
    for (const auto& g : graphs) pmax = std::max(pmax, chromatic_number(g));
    int k = std::max({static_cast<int>(graphs.size()), pmax, 3});
    v.verdict = Verdict::Applies;
    v.trace = {{"vector", *vec}, {"k", k}, {"p", pmax}, {"count", graphs.size()}};
    if (k == 3)
        v.conclusion = "f(H,P_5) = R_3(H)";
    else
        v.conclusion = "f(H,P_5) <= R_" + std::to_string(k) + "(H)";
    return v;
}

}  // namespace rf
