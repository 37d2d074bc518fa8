#include "rf/json_io.hpp"

#include <stdexcept>

namespace rf {

json to_json(const SimpleGraph& g) {
    json j{{"graph6", to_graph6(g)}, {"order", g.order}};
    if (!g.label.empty()) j["label"] = g.label;
    return j;
}

json to_json(const GraphInvariants& inv) {
    return json{{"components", inv.components},
                {"component_orders", inv.component_orders},
                {"chromatic_number", inv.chromatic_number},
                {"chromatic_surplus", inv.chromatic_surplus},
                {"sigma3", inv.sigma3},
                {"clique_number", inv.clique_number},
                {"is_connected", inv.is_connected},
                {"is_bipartite", inv.is_bipartite},
                {"has_isolated", inv.has_isolated}};
}

json to_json(const PartiteProfile& p) {
    return json{{"s", p.s}, {"t", p.t}, {"s_star", p.s_star}, {"t_star", p.t_star}};
}

json to_json(const DecompositionFamily& fam) {
    json members = json::array();
    for (const auto& m : fam.members) members.push_back(to_graph6(m));
    return json{{"base", to_graph6(fam.base)}, {"index", fam.index}, {"members", members}};
}

json to_json(const ColoredHost& host) {
    if (host.shape == HostShape::Complete)
        return json{{"shape", "complete"}, {"n", host.n}, {"colors", host.colors}};
    return json{{"shape", "bipartite"}, {"m", host.m}, {"n", host.n}, {"colors", host.colors}};
}

json to_json(const Embedding& emb) {
    json j{{"vertices", emb.vertices}};
    if (emb.color != 0) j["color"] = emb.color;
    if (!emb.colors.empty()) j["colors"] = emb.colors;
    return j;
}

json to_json(const ColorCensus& census) {
    json edges = json::object();
    json comps = json::object();
    for (int c = 1; c <= census.color_count; ++c) {
        edges[std::to_string(c)] = census.edge_count[c - 1];
        comps[std::to_string(c)] = census.component_count[c - 1];
    }
    return json{{"color_count", census.color_count},
                {"per_color_edge_count", edges},
                {"per_color_components", comps}};
}

json to_json(const Claim& claim) {
    if (claim.type == Claim::Type::NoMono) {
        json j{{"type", "no-mono"}, {"pattern", to_graph6(claim.pattern)}};
        j["color"] = claim.color ? json(*claim.color) : json(nullptr);
        return j;
    }
    return json{{"type", "no-rainbow-path"}, {"t", claim.path_order}};
}

json to_json(const ConstructionResult& result) {
    json claims = json::array();
    for (const auto& c : result.claims) claims.push_back(to_json(c));
    return json{{"kind", kind_name(result.kind)},
                {"parameters", result.parameters},
                {"host", to_json(result.host)},
                {"claims", claims}};
}

json to_json(const VerifyReport& report) {
    json entries = json::array();
    for (const auto& e : report.entries) {
        json item{{"claim", to_json(e.claim)}, {"verdict", e.pass ? "PASS" : "FAIL"}};
        if (e.counterexample) item["counterexample"] = to_json(*e.counterexample);
        entries.push_back(std::move(item));
    }
    return json{{"all_pass", report.all_pass}, {"claims", entries}};
}

json to_json(const P5Partition& cert) {
    json parts = json::array();
    for (const auto& p : cert.parts)
        parts.push_back(json{{"color", p.color}, {"vertices", p.vertices}});
    return json{{"color1", cert.color1}, {"parts", parts}};
}

json to_json(const CertReport& report) {
    return json{{"pass", report.pass}, {"violations", report.violations}};
}

json to_json(const ExtendedSizeReport& report) {
    return json{{"sorted_sizes", report.sorted_sizes},
                {"k_at_least_4", report.k_at_least_4},
                {"v3_ok", report.v3_ok},
                {"v4_ok", report.v4_ok},
                {"tail_ok", report.tail_ok},
                {"all_ok", report.all_ok}};
}

json to_json(const BipartiteStructure& s) {
    json j{{"t", s.t},
           {"case", std::string(1, s.case_id)},
           {"sides_swapped", s.sides_swapped}};
    if (s.color1 != 0) j["color1"] = s.color1;
    if (!s.u_parts.empty()) j["u_parts"] = s.u_parts;
    if (!s.v_parts.empty()) j["v_parts"] = s.v_parts;
    if (!s.part_colors.empty()) j["part_colors"] = s.part_colors;
    return j;
}

json to_json(const TripartiteDecision& d) {
    return json{{"contains", d.contains}, {"route", d.route}, {"certain", d.certain}};
}

json to_json(const SearchProblem& p) {
    json j{{"shape", p.shape == HostShape::Complete ? "complete" : "bipartite"}};
    if (p.shape == HostShape::Bipartite) j["m"] = p.m;
    j["n"] = p.n;
    j["budget"] = p.color_budget ? json(*p.color_budget) : json("unbounded");
    j["forbid_mono"] = to_graph6(p.forbid_mono);
    if (p.forbid_rainbow_t) j["forbid_rainbow"] = *p.forbid_rainbow_t;
    return j;
}

json to_json(const SearchOutcome& out, bool include_timing) {
    json j;
    switch (out.status) {
        case SearchStatus::Witness: j["status"] = "WITNESS"; break;
        case SearchStatus::Exhausted: j["status"] = "EXHAUSTED"; break;
        case SearchStatus::Timeout: j["status"] = "TIMEOUT"; break;
    }
    if (out.witness) j["witness"] = to_json(*out.witness);
    j["nodes_explored"] = out.nodes;
    if (include_timing) j["wall_time_ms"] = out.wall_ms;
    return j;
}

json to_json(const BoundReport& rep) {
    json entries = json::array();
    for (const auto& e : rep.entries) {
        json item{{"rule", e.rule},
                  {"target", e.target},
                  {"direction", e.direction == 'L'   ? "LOWER"
                                : e.direction == 'U' ? "UPPER"
                                                     : "EQUAL"}};
        if (e.value)
            item["value"] = *e.value;
        else
            item["value"] = nullptr;
        item["expression"] = e.expression;
        item["inputs"] = e.inputs;
        if (e.unknown) item["unknown"] = true;
        entries.push_back(std::move(item));
    }
    return json{{"graph", to_graph6(rep.graph)}, {"entries", entries}};
}

json to_json(const TheoremVerdict& v) {
    const char* verdict = v.verdict == Verdict::Applies ? "APPLIES"
                          : v.verdict == Verdict::Not   ? "NOT"
                                                        : "UNKNOWN";
    return json{{"id", v.id},
                {"verdict", verdict},
                {"conclusion", v.conclusion},
                {"trace", v.trace}};
}

json to_json(const ApplicabilityReport& rep) {
    json verdicts = json::array();
    for (const auto& v : rep.verdicts) verdicts.push_back(to_json(v));
    return json{{"graph", to_graph6(rep.graph)}, {"verdicts", verdicts}};
}

namespace {

[[noreturn]] void bad(const std::string& what) {
    throw std::invalid_argument("malformed JSON: " + what);
}

}  // namespace

ColoredHost host_from_json(const json& j) {
    if (!j.is_object() || !j.contains("shape") || !j.contains("colors")) bad("host object");
    std::string shape = j["shape"].get<std::string>();
    std::vector<int> colors = j["colors"].get<std::vector<int>>();
    if (shape == "complete") {
        if (!j.contains("n")) bad("complete host needs n");
        return build_host(HostShape::Complete, 0, j["n"].get<int>(), std::move(colors));
    }
    if (shape == "bipartite") {
        if (!j.contains("m") || !j.contains("n")) bad("bipartite host needs m and n");
        return build_host(HostShape::Bipartite, j["m"].get<int>(), j["n"].get<int>(),
                          std::move(colors));
    }
    bad("unknown shape " + shape);
}

KnownValuesTable table_from_json(const json& j) {
    KnownValuesTable table;
    if (!j.is_object() || !j.contains("entries")) bad("table object with entries");
    for (const auto& item : j["entries"]) {
        KnownValuesTable::Entry e;
        e.kind = item.at("kind").get<std::string>();
        if (item.contains("graphs"))
            for (const auto& g : item["graphs"]) e.graphs.push_back(parse_graph6(g.get<std::string>()));
        if (item.contains("graph")) e.graphs.push_back(parse_graph6(item["graph"].get<std::string>()));
        if (item.contains("k")) e.k = item["k"].get<int>();
        if (item.contains("index")) e.index = item["index"].get<int>();
        e.value = item.at("value").get<int>();
        if (item.contains("note")) e.note = item["note"].get<std::string>();
        table.add(std::move(e));
    }
    return table;
}

P5Partition p5_partition_from_json(const json& j) {
    P5Partition cert;
    if (!j.is_object() || !j.contains("color1") || !j.contains("parts")) bad("certificate object");
    cert.color1 = j["color1"].get<int>();
    for (const auto& p : j["parts"]) {
        P5Partition::Part part;
        part.color = p.at("color").get<int>();
        part.vertices = p.at("vertices").get<std::vector<int>>();
        cert.parts.push_back(std::move(part));
    }
    return cert;
}

ConstructionResult construction_from_json(const json& j) {
    ConstructionResult res;
    if (!j.is_object() || !j.contains("kind") || !j.contains("host") || !j.contains("claims"))
        bad("certificate object");
    auto kind = kind_from_name(j["kind"].get<std::string>());
    if (!kind) bad("unknown construction kind");
    res.kind = *kind;
    res.host = host_from_json(j["host"]);
    if (j.contains("parameters")) res.parameters = j["parameters"];
    for (const auto& c : j["claims"]) {
        Claim claim;
        std::string type = c.at("type").get<std::string>();
        if (type == "no-mono") {
            claim.type = Claim::Type::NoMono;
            claim.pattern = parse_graph6(c.at("pattern").get<std::string>());
            if (c.contains("color") && !c["color"].is_null())
                claim.color = c["color"].get<int>();
        } else if (type == "no-rainbow-path") {
            claim.type = Claim::Type::NoRainbow;
            claim.path_order = c.at("t").get<int>();
        } else {
            bad("unknown claim type " + type);
        }
        res.claims.push_back(std::move(claim));
    }
    return res;
}

}  // namespace rf
