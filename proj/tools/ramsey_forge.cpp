// ramsey-forge: construct, verify, and exhaustively search edge colorings of
// complete and complete-bipartite hosts; every subcommand emits JSON.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rf/json_io.hpp"

namespace {

using rf::json;

struct CommonOpts {
    bool compact = false;
    bool no_meta = false;
    int jobs = 1;
    double time_limit = 0;
    std::uint64_t seed = 0;
    std::string table_file;
    std::string emit_certificate;
};

void add_common(CLI::App* cmd, CommonOpts& c) {
    cmd->add_flag("--compact", c.compact, "single-line JSON output");
    cmd->add_flag("--no-meta", c.no_meta, "omit timestamps and wall times");
    int default_jobs = 1;
    if (const char* env = std::getenv("RAMSEY_FORGE_JOBS")) default_jobs = std::atoi(env);
    c.jobs = std::max(1, default_jobs);
    cmd->add_option("--jobs", c.jobs, "parallel workers for searches");
    cmd->add_option("--time-limit", c.time_limit, "search time limit in seconds");
    cmd->add_option("--seed", c.seed, "seed for randomized generators");
    cmd->add_option("--table", c.table_file, "known-values table (JSON file)");
    cmd->add_option("--emit-certificate", c.emit_certificate, "write the result JSON here");
}

rf::SearchOptions search_opts(const CommonOpts& c, bool allow_large = false) {
    rf::SearchOptions o;
    o.jobs = c.jobs;
    o.time_limit_s = c.time_limit;
    o.allow_large = allow_large;
    return o;
}

void emit(const json& body, const CommonOpts& c) {
    json out = body;
    if (!c.no_meta) {
        auto now = std::chrono::system_clock::now();
        auto t = std::chrono::system_clock::to_time_t(now);
        char buf[32];
        std::strftime(buf, sizeof buf, "%FT%TZ", std::gmtime(&t));
        out["meta"] = json{{"tool", "ramsey-forge"}, {"timestamp", buf}};
    }
    if (!c.emit_certificate.empty()) {
        std::ofstream f(c.emit_certificate);
        f << out.dump(2) << "\n";
    }
    if (c.compact)
        std::cout << out.dump() << "\n";
    else
        std::cout << out.dump(2) << "\n";
}

std::string slurp(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("cannot open file " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

rf::SimpleGraph graph_arg(const std::string& inline_g6, const std::string& file) {
    if (!inline_g6.empty()) return rf::parse_graph6(inline_g6);
    if (!file.empty()) {
        std::istringstream ss(slurp(file));
        std::string line;
        if (!std::getline(ss, line)) throw std::invalid_argument("empty graph file");
        return rf::parse_graph6(line);
    }
    throw std::invalid_argument("a graph is required (--graph or --graph-file)");
}

rf::ColoredHost host_arg(const std::string& inline_json, const std::string& file) {
    if (!inline_json.empty()) return rf::host_from_json(json::parse(inline_json));
    if (!file.empty()) return rf::host_from_json(json::parse(slurp(file)));
    throw std::invalid_argument("a host is required (--host or --host-file)");
}

std::vector<rf::SimpleGraph> components_arg(const std::string& list) {
    std::vector<rf::SimpleGraph> out;
    std::istringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(rf::parse_graph6(item));
    if (out.empty()) throw std::invalid_argument("no components given");
    return out;
}

std::vector<int> int_list(const std::string& list) {
    std::vector<int> out;
    std::istringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
    return out;
}

rf::KnownValuesTable table_arg(const CommonOpts& c) {
    if (c.table_file.empty()) return {};
    return rf::table_from_json(json::parse(slurp(c.table_file)));
}

std::optional<int> budget_arg(const std::string& budget) {
    if (budget.empty() || budget == "unbounded") return std::nullopt;
    int k = std::stoi(budget);
    if (k < 1) throw std::invalid_argument("budget must be positive or 'unbounded'");
    return k;
}

json value_result_json(const rf::ValueResult& r, const CommonOpts& c) {
    json j;
    j["value"] = r.value ? json(*r.value) : json(nullptr);
    j["n_max"] = r.n_max;
    if (!r.value && !r.timed_out) j["lower_bound"] = r.n_max + 1;
    if (r.witness_at_max) j["witness_at_max"] = rf::to_json(*r.witness_at_max);
    if (r.timed_out) j["timed_out"] = true;
    j["nodes_explored"] = r.nodes;
    if (!c.no_meta) j["wall_time_ms"] = r.wall_ms;
    return j;
}

// ----------------------------------------------------------- subcommands ---

int run_invariants(const std::string& g6, const std::string& gfile, int decomp_index,
                   int critical_r, const std::string& homological, const CommonOpts& c) {
    rf::SimpleGraph g = graph_arg(g6, gfile);
    json out;
    out["graph"] = rf::to_json(g);
    rf::GraphInvariants inv = rf::invariants(g);
    out["invariants"] = rf::to_json(inv);
    if (inv.is_bipartite) out["partite_profile"] = rf::to_json(rf::partite_profile(g));
    if (decomp_index > 0)
        out["decomposition_family"] = rf::to_json(rf::decomposition_family(g, decomp_index));
    if (critical_r > 0) {
        auto res = rf::is_color_critical(g, critical_r);
        json j{{"r", critical_r}, {"critical", res.critical}};
        if (res.witness_edge)
            j["witness_edge"] = {res.witness_edge->first, res.witness_edge->second};
        out["color_critical"] = j;
    }
    if (!homological.empty()) {
        auto graphs = components_arg(homological);
        auto vec = rf::homological_vector(graphs);
        out["homological"] = vec ? json(*vec) : json(nullptr);
    }
    emit(out, c);
    return 0;
}

int run_construct(const std::string& kind_name_, const std::string& comps,
                  const std::string& part_sizes, const std::string& u_sizes,
                  const std::string& v_sizes, const std::string& indices, int k, int m,
                  const std::string& sub_host_file, bool randomize, bool do_verify,
                  const CommonOpts& c) {
    auto kind = rf::kind_from_name(kind_name_);
    if (!kind) throw std::invalid_argument("unknown construction kind " + kind_name_);
    rf::ConstructionParams p;
    if (!comps.empty()) p.components = components_arg(comps);
    if (!part_sizes.empty()) p.part_sizes = int_list(part_sizes);
    if (!u_sizes.empty()) p.u_sizes = int_list(u_sizes);
    if (!v_sizes.empty()) p.v_sizes = int_list(v_sizes);
    if (!indices.empty()) {
        auto idx = int_list(indices);
        if (idx.size() > 0) p.idx_i = idx[0];
        if (idx.size() > 1) p.idx_j = idx[1];
        if (idx.size() > 2) p.idx_l = idx[2];
    }
    p.k = k;
    p.m = m;
    p.seed = c.seed;
    p.randomize_within = randomize;
    rf::KnownValuesTable table = table_arg(c);
    p.table = &table;
    if (!sub_host_file.empty()) p.sub_host = rf::host_from_json(json::parse(slurp(sub_host_file)));
    rf::ConstructionResult res = rf::construct(*kind, p);
    json out = rf::to_json(res);
    int code = 0;
    if (do_verify) {
        rf::VerifyReport rep = rf::verify_construction(res);
        out["report"] = rf::to_json(rep);
        code = rep.all_pass ? 0 : 1;
    }
    emit(out, c);
    return code;
}

// re-check a search certificate: a WITNESS must still dodge every forbidden
// pattern; an EXHAUSTED claim carries no witness and cannot be re-checked
// cheaper than re-running the search
int verify_search_certificate(const json& j, const CommonOpts& c) {
    const json& prob = j["problem"];
    rf::SimpleGraph mono = rf::parse_graph6(prob.at("forbid_mono").get<std::string>());
    std::optional<int> rainbow_t;
    if (prob.contains("forbid_rainbow")) rainbow_t = prob["forbid_rainbow"].get<int>();
    json out;
    out["status"] = j["status"];
    if (j["status"] == "WITNESS") {
        rf::ColoredHost host = rf::host_from_json(j.at("witness"));
        bool ok = true;
        std::vector<std::string> problems;
        if (prob["shape"] == "complete") {
            if (host.shape != rf::HostShape::Complete || host.n != prob["n"].get<int>()) {
                ok = false;
                problems.push_back("witness shape mismatch");
            }
        } else if (host.shape != rf::HostShape::Bipartite || host.n != prob["n"].get<int>() ||
                   host.m != prob["m"].get<int>()) {
            ok = false;
            problems.push_back("witness shape mismatch");
        }
        if (prob["budget"].is_number() && host.color_count > prob["budget"].get<int>()) {
            ok = false;
            problems.push_back("witness exceeds the color budget");
        }
        if (ok && rf::find_mono_copy(host, mono)) {
            ok = false;
            problems.push_back("witness contains the forbidden monochromatic pattern");
        }
        if (ok && rainbow_t && rf::find_rainbow_path(host, *rainbow_t)) {
            ok = false;
            problems.push_back("witness contains a rainbow path");
        }
        out["witness_valid"] = ok;
        out["problems"] = problems;
        emit(out, c);
        return ok ? 0 : 1;
    }
    out["note"] = "exhaustiveness and timeouts are not re-checkable from a certificate; "
                  "re-run the search to confirm";
    emit(out, c);
    return 0;
}

int run_verify(const std::string& cert_file, const CommonOpts& c) {
    if (cert_file.empty()) throw std::invalid_argument("--certificate FILE is required");
    json j = json::parse(slurp(cert_file));
    if (j.contains("problem") && j.contains("status")) return verify_search_certificate(j, c);
    rf::ConstructionResult res = rf::construction_from_json(j);
    rf::VerifyReport rep = rf::verify_construction(res);
    json out;
    out["kind"] = rf::kind_name(res.kind);
    out["report"] = rf::to_json(rep);
    emit(out, c);
    return rep.all_pass ? 0 : 1;
}

int run_structure(const std::string& host_json, const std::string& host_file, bool recover,
                  const std::string& verify_cert, int classify_t,
                  const std::string& extended_graph, const std::string& tripartite,
                  const std::string& comps, const CommonOpts& c) {
    json out;
    int code = 0;
    if (!tripartite.empty()) {
        auto xyz = int_list(tripartite);
        if (xyz.size() != 3) throw std::invalid_argument("--tripartite needs x,y,z");
        auto graphs = components_arg(comps);
        if (graphs.size() != 2) throw std::invalid_argument("--components needs two graphs");
        auto dec = rf::tripartite_contains_union(xyz[0], xyz[1], xyz[2], graphs[0], graphs[1]);
        out["tripartite"] = rf::to_json(dec);
        code = dec.contains ? 0 : 1;
        emit(out, c);
        return code;
    }
    rf::ColoredHost host = host_arg(host_json, host_file);
    out["host"] = rf::to_json(host);
    if (recover) {
        auto rec = rf::recover_p5_partition(host);
        if (rec) {
            out["partition"] = rf::to_json(rec->partition);
            out["relabeling"] = rec->relabeling;
            if (!extended_graph.empty()) {
                rf::SimpleGraph h = rf::parse_graph6(extended_graph);
                out["extended_sizes"] =
                    rf::to_json(rf::check_extended_sizes(rec->partition, h));
            }
        } else {
            out["partition"] = nullptr;
            code = 1;
        }
    } else if (!verify_cert.empty()) {
        rf::P5Partition cert = rf::p5_partition_from_json(json::parse(slurp(verify_cert)));
        rf::CertReport rep = rf::verify_p5_partition(host, cert);
        out["report"] = rf::to_json(rep);
        if (!extended_graph.empty()) {
            rf::SimpleGraph h = rf::parse_graph6(extended_graph);
            out["extended_sizes"] = rf::to_json(rf::check_extended_sizes(cert, h));
        }
        code = rep.pass ? 0 : 1;
    } else if (classify_t > 0) {
        auto s = rf::classify_bipartite_structure(host, classify_t);
        if (s) {
            out["structure"] = rf::to_json(*s);
        } else {
            out["structure"] = nullptr;
            code = 1;
            if (!rf::find_rainbow_path(host, classify_t)) {
                out["lemma_contradiction"] = true;
                std::cerr << "warning: no structure found although the host has no rainbow "
                             "path; this contradicts the structure lemma\n";
            }
        }
    } else {
        throw std::invalid_argument(
            "choose one of --recover-p5, --verify-p5, --classify, --tripartite");
    }
    emit(out, c);
    return code;
}

int run_search(const std::string& shape, int n, int m, const std::string& budget,
               const std::string& mono_g6, int rainbow_t, bool force_large,
               const CommonOpts& c) {
    rf::SearchProblem p;
    if (shape == "complete") {
        p.shape = rf::HostShape::Complete;
        p.n = n;
    } else if (shape == "bipartite") {
        p.shape = rf::HostShape::Bipartite;
        p.m = m > 0 ? m : n;
        p.n = n;
    } else {
        throw std::invalid_argument("--shape must be complete or bipartite");
    }
    p.color_budget = budget_arg(budget);
    p.forbid_mono = rf::parse_graph6(mono_g6);
    if (rainbow_t > 0) p.forbid_rainbow_t = rainbow_t;
    rf::SearchOutcome outcome = rf::exists_good_coloring(p, search_opts(c, force_large));
    json out;
    out["problem"] = rf::to_json(p);
    json oj = rf::to_json(outcome, !c.no_meta);
    for (auto& [key, val] : oj.items()) out[key] = val;
    emit(out, c);
    return outcome.status == rf::SearchStatus::Witness ? 0 : 1;
}

int run_ramsey(const std::string& g6, const std::string& gfile, int colors, int nmax,
               const CommonOpts& c) {
    rf::SimpleGraph h = graph_arg(g6, gfile);
    rf::ValueResult r = rf::ramsey_k(h, colors, nmax, search_opts(c));
    json out = value_result_json(r, c);
    out["graph"] = rf::to_graph6(h);
    out["colors"] = colors;
    emit(out, c);
    return 0;
}

int run_constrained(const std::string& g6, const std::string& gfile, int t, int nmax,
                    const CommonOpts& c) {
    rf::SimpleGraph h = graph_arg(g6, gfile);
    rf::ConstrainedResult r = rf::constrained_ramsey(h, t, nmax, search_opts(c));
    json out = value_result_json(r.constrained, c);
    out["graph"] = rf::to_graph6(h);
    out["path_order"] = t;
    out["budget_value"] = r.budget_value ? json(*r.budget_value) : json(nullptr);
    emit(out, c);
    return 0;
}

int run_bipartite(const std::string& g6, const std::string& gfile, int colors, int nmax,
                  int rainbow_t, const std::string& budget, bool force_large,
                  const CommonOpts& c) {
    rf::SimpleGraph h = graph_arg(g6, gfile);
    json out;
    if (rainbow_t > 0) {
        rf::ValueResult r = rf::bipartite_constrained(h, rainbow_t, budget_arg(budget), nmax,
                                                      search_opts(c, force_large));
        out = value_result_json(r, c);
        out["path_order"] = rainbow_t;
        out["budget"] = budget.empty() ? json("unbounded") : json(budget);
    } else {
        rf::BipartiteValueResult r =
            rf::bipartite_ramsey_k(h, colors, nmax, search_opts(c, force_large));
        out = value_result_json(r.result, c);
        out["colors"] = colors;
        out["blowup_lower"] = r.blowup_lower ? json(*r.blowup_lower) : json(nullptr);
    }
    out["graph"] = rf::to_graph6(h);
    emit(out, c);
    return 0;
}

int run_oracle(const std::string& g6, const std::string& gfile, const std::string& homological,
               bool render_table, const CommonOpts& c) {
    rf::SimpleGraph h = graph_arg(g6, gfile);
    rf::KnownValuesTable table = table_arg(c);
    rf::BoundReport bounds = rf::formula_bounds(h, table);
    rf::ApplicabilityReport app = rf::applicability_report(h, table);
    if (render_table) {
        std::printf("bounds for %s\n", rf::to_graph6(h).c_str());
        std::printf("  %-20s %-24s %-6s %-8s %s\n", "rule", "target", "dir", "value",
                    "expression");
        for (const auto& e : bounds.entries) {
            const char* dir = e.direction == 'L' ? "lower" : e.direction == 'U' ? "upper" : "equal";
            std::string value = e.unknown ? "?" : (e.value ? std::to_string(*e.value) : "-");
            std::printf("  %-20s %-24s %-6s %-8s %s\n", e.rule.c_str(), e.target.c_str(), dir,
                        value.c_str(), e.expression.c_str());
        }
        std::printf("rule applicability\n");
        for (const auto& v : app.verdicts) {
            const char* verdict = v.verdict == rf::Verdict::Applies ? "APPLIES"
                                  : v.verdict == rf::Verdict::Not   ? "NOT"
                                                                    : "UNKNOWN";
            std::printf("  %-28s %-8s %s\n", v.id.c_str(), verdict, v.conclusion.c_str());
        }
        return 0;
    }
    json out;
    out["bounds"] = rf::to_json(bounds);
    out["applicability"] = rf::to_json(app);
    if (!homological.empty()) {
        auto graphs = components_arg(homological);
        out["homological"] = rf::to_json(rf::homological_certificate(graphs));
    }
    emit(out, c);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"edge-coloring toolkit for constrained Ramsey computations"};
    app.require_subcommand(1);

    // invariants
    auto* inv = app.add_subcommand("invariants", "graph invariants and profiles");
    std::string inv_g6, inv_gfile, inv_homological;
    int inv_decomp = 0, inv_critical = 0;
    CommonOpts inv_c;
    inv->add_option("--graph", inv_g6, "graph6 string");
    inv->add_option("--graph-file", inv_gfile, "file with a graph6 line");
    inv->add_option("--decomposition", inv_decomp, "emit the decomposition family at this index");
    inv->add_option("--critical", inv_critical, "check color-criticality at this target");
    inv->add_option("--homological", inv_homological, "comma-separated graph6 list");
    add_common(inv, inv_c);

    // construct
    auto* con = app.add_subcommand("construct", "build a lower-bound coloring");
    std::string con_kind, con_comps, con_parts, con_usizes, con_vsizes, con_indices, con_subhost;
    int con_k = 0, con_m = 0;
    bool con_randomize = false, con_verify = false;
    CommonOpts con_c;
    con->add_option("--kind", con_kind, "construction kind")->required();
    con->add_option("--components", con_comps, "comma-separated graph6 list");
    con->add_option("--part-sizes", con_parts, "comma-separated part sizes");
    con->add_option("--u-sizes", con_usizes, "comma-separated left part sizes");
    con->add_option("--v-sizes", con_vsizes, "comma-separated right part sizes");
    con->add_option("--indices", con_indices, "component picks i[,j[,l]]");
    con->add_option("--colors", con_k, "color count");
    con->add_option("--m", con_m, "matching size");
    con->add_option("--sub-host-file", con_subhost, "inner witness host (JSON file)");
    con->add_flag("--randomize-within", con_randomize, "randomize free within-part colors");
    con->add_flag("--verify", con_verify, "run the claim verifier");
    add_common(con, con_c);

    // verify
    auto* ver = app.add_subcommand("verify", "re-verify an emitted certificate");
    std::string ver_cert;
    CommonOpts ver_c;
    ver->add_option("--certificate", ver_cert, "certificate JSON file")->required();
    add_common(ver, ver_c);

    // structure
    auto* str = app.add_subcommand("structure", "structural certificates and classification");
    std::string str_host, str_hostfile, str_verify, str_extended, str_tripartite, str_comps;
    bool str_recover = false;
    int str_classify = 0;
    CommonOpts str_c;
    str->add_option("--host", str_host, "host JSON inline");
    str->add_option("--host-file", str_hostfile, "host JSON file");
    str->add_flag("--recover-p5", str_recover, "recover the five-path-free partition");
    str->add_option("--verify-p5", str_verify, "partition certificate JSON file");
    str->add_option("--classify", str_classify, "classify bipartite structure (4 or 5)");
    str->add_option("--extended-sizes", str_extended, "graph6 target for the size conditions");
    str->add_option("--tripartite", str_tripartite, "x,y,z part sizes");
    str->add_option("--components", str_comps, "two graph6 components for --tripartite");
    add_common(str, str_c);

    // search
    auto* sea = app.add_subcommand("search", "decide existence of a good coloring");
    std::string sea_shape = "complete", sea_budget = "unbounded", sea_mono;
    int sea_n = 0, sea_m = 0, sea_rainbow = 0;
    bool sea_force = false;
    CommonOpts sea_c;
    sea->add_option("--shape", sea_shape, "complete or bipartite");
    sea->add_option("--n", sea_n, "order / right side")->required();
    sea->add_option("--m", sea_m, "left side (bipartite)");
    sea->add_option("--budget", sea_budget, "color budget: K or 'unbounded'");
    sea->add_option("--forbid-mono-g6", sea_mono, "forbidden monochromatic graph")->required();
    sea->add_option("--forbid-rainbow", sea_rainbow, "forbidden rainbow path order (4 or 5)");
    sea->add_flag("--force-large", sea_force, "lift the documented edge-count caps");
    add_common(sea, sea_c);

    // ramsey
    auto* ram = app.add_subcommand("ramsey", "k-color forcing value by sweep");
    std::string ram_g6, ram_gfile;
    int ram_colors = 2, ram_nmax = 8;
    CommonOpts ram_c;
    ram->add_option("--graph", ram_g6, "graph6 string");
    ram->add_option("--graph-file", ram_gfile, "file with a graph6 line");
    ram->add_option("--colors", ram_colors, "number of colors");
    ram->add_option("--nmax", ram_nmax, "sweep cap");
    add_common(ram, ram_c);

    // constrained
    auto* cons = app.add_subcommand("constrained", "forcing value against a rainbow path");
    std::string cons_g6, cons_gfile;
    int cons_t = 5, cons_nmax = 8;
    CommonOpts cons_c;
    cons->add_option("--graph", cons_g6, "graph6 string");
    cons->add_option("--graph-file", cons_gfile, "file with a graph6 line");
    cons->add_option("--forbid-rainbow", cons_t, "rainbow path order (4 or 5)");
    cons->add_option("--nmax", cons_nmax, "sweep cap");
    add_common(cons, cons_c);

    // bipartite
    auto* bip = app.add_subcommand("bipartite", "bipartite forcing values");
    std::string bip_g6, bip_gfile, bip_budget;
    int bip_colors = 2, bip_nmax = 6, bip_rainbow = 0;
    bool bip_force = false;
    CommonOpts bip_c;
    bip->add_option("--graph", bip_g6, "graph6 string");
    bip->add_option("--graph-file", bip_gfile, "file with a graph6 line");
    bip->add_option("--colors", bip_colors, "number of colors (mono mode)");
    bip->add_option("--nmax", bip_nmax, "sweep cap");
    bip->add_option("--forbid-rainbow", bip_rainbow, "rainbow path order (4 or 5)");
    bip->add_option("--budget", bip_budget, "color budget in constrained mode");
    bip->add_flag("--force-large", bip_force, "lift the documented edge-count caps");
    add_common(bip, bip_c);

    // oracle
    auto* ora = app.add_subcommand("oracle", "closed-form bounds and rule applicability");
    std::string ora_g6, ora_gfile, ora_homological;
    bool ora_render = false;
    CommonOpts ora_c;
    ora->add_option("--graph", ora_g6, "graph6 string");
    ora->add_option("--graph-file", ora_gfile, "file with a graph6 line");
    ora->add_option("--homological", ora_homological, "comma-separated graph6 list");
    ora->add_flag("--render-table", ora_render, "plain-text table instead of JSON");
    add_common(ora, ora_c);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*inv)
            return run_invariants(inv_g6, inv_gfile, inv_decomp, inv_critical, inv_homological,
                                  inv_c);
        if (*con)
            return run_construct(con_kind, con_comps, con_parts, con_usizes, con_vsizes,
                                 con_indices, con_k, con_m, con_subhost, con_randomize,
                                 con_verify, con_c);
        if (*ver) return run_verify(ver_cert, ver_c);
        if (*str)
            return run_structure(str_host, str_hostfile, str_recover, str_verify, str_classify,
                                 str_extended, str_tripartite, str_comps, str_c);
        if (*sea)
            return run_search(sea_shape, sea_n, sea_m, sea_budget, sea_mono, sea_rainbow,
                              sea_force, sea_c);
        if (*ram) return run_ramsey(ram_g6, ram_gfile, ram_colors, ram_nmax, ram_c);
        if (*cons) return run_constrained(cons_g6, cons_gfile, cons_t, cons_nmax, cons_c);
        if (*bip)
            return run_bipartite(bip_g6, bip_gfile, bip_colors, bip_nmax, bip_rainbow,
                                 bip_budget, bip_force, bip_c);
        if (*ora) return run_oracle(ora_g6, ora_gfile, ora_homological, ora_render, ora_c);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
