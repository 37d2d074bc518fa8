#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "construction_cases.hpp"
#include "rf/constructions.hpp"
#include "rf/detect.hpp"
#include "rf/host.hpp"
#include "rf/search.hpp"
#include "test_util.hpp"

using namespace rf;

TEST_CASE("rotational three-part construction on two triangles") {
    ConstructionParams p;
    p.components = {complete_graph(3), complete_graph(3)};
    auto res = construct(ConstructionKind::R3III, p);
    CHECK(res.host.n == 15);
    CHECK(res.host.color_count == 3);
    auto report = verify_construction(res);
    CHECK(report.all_pass);
    // permuting the component list changes nothing at all
    ConstructionParams q;
    q.components = {complete_graph(3), complete_graph(3)};
    std::swap(q.components[0], q.components[1]);
    auto res2 = construct(ConstructionKind::R3III, q);
    CHECK(res2.host.colors == res.host.colors);

    ConstructionParams bad;
    bad.components = {cycle_graph(4)};  // not 3-chromatic
    CHECK_THROWS(construct(ConstructionKind::R3III, bad));
}

TEST_CASE("two-part-plus-surplus construction") {
    ConstructionParams p;
    p.components = {complete_graph(3), cycle_graph(4)};
    auto res = construct(ConstructionKind::R3IV, p);
    CHECK(res.host.n == 12);  // parts 6, 6 and an empty third
    CHECK(verify_construction(res).all_pass);
}

TEST_CASE("cone-over-clique matching construction") {
    ConstructionParams p;
    p.components = {disjoint_union(path_graph(3), path_graph(3))};
    p.m = 2;
    auto res = construct(ConstructionKind::Matching, p);
    CHECK(res.host.n == 6);
    REQUIRE(res.claims.size() == 2);
    CHECK(verify_construction(res).all_pass);

    // tampering plants a two-edge matching in the cone color
    ConstructionResult tampered = res;
    std::vector<int> colors = tampered.host.colors;
    colors[tampered.host.edge_index(1, 2)] = 1;
    tampered.host = build_host(HostShape::Complete, 0, 6, colors);
    auto report = verify_construction(tampered);
    CHECK_FALSE(report.all_pass);
    bool found_witness = false;
    for (const auto& e : report.entries)
        if (!e.pass && e.counterexample) found_witness = true;
    CHECK(found_witness);
}

TEST_CASE("product construction with an inner two-colored witness") {
    ConstructionParams p;
    p.components = {complete_graph(3), complete_graph(3)};
    p.idx_i = 1;
    p.idx_j = 1;
    p.idx_l = 2;
    auto res = construct(ConstructionKind::R3I, p);
    // two parts of R(K3,K3)-1 = 5 plus a surplus part of 1
    CHECK(res.host.n == 11);
    CHECK(verify_construction(res).all_pass);
    CHECK(res.parameters["table_values"].begin().value()["value"] == 6);
}

TEST_CASE("clique blow-up construction") {
    ConstructionParams p;
    p.components = {complete_graph(3), path_graph(3)};
    p.idx_i = 1;  // omega = 3
    p.idx_j = 2;  // blow-up factor |V(P3)|-1 = 2
    auto res = construct(ConstructionKind::R3II, p);
    CHECK(res.host.n == 10);
    CHECK(verify_construction(res).all_pass);
}

TEST_CASE("independent-parts construction over a family-avoiding witness") {
    for (const SimpleGraph& h : {complete_graph(3), cycle_graph(5), complete_graph(4)}) {
        ConstructionParams p;
        p.components = {h};
        auto res = construct(ConstructionKind::Decomp, p);
        CAPTURE(to_graph6(h));
        CHECK(verify_construction(res).all_pass);
        CHECK(res.host.color_count <= 2);
    }
}

TEST_CASE("bipartite matching blow-up") {
    ConstructionParams p;
    p.components = {star_graph(3)};
    p.k = 3;
    auto res = construct(ConstructionKind::BipartiteBlowup, p);
    CHECK(res.host.shape == HostShape::Bipartite);
    CHECK(res.host.m == 6);
    CHECK(res.host.n == 6);
    CHECK(res.host.color_count == 3);
    ColorCensus census = color_census(res.host);
    for (int c = 1; c <= 3; ++c) {
        CHECK(census.edge_count[c - 1] == 12);
        CHECK(census.component_count[c - 1] == 3);  // three biclique blocks
    }
    CHECK(verify_construction(res).all_pass);

    // factor one degenerates to a proper edge coloring
    ConstructionParams q;
    q.components = {path_graph(3)};
    q.k = 4;
    auto res2 = construct(ConstructionKind::BipartiteBlowup, q);
    CHECK(res2.host.m == 4);
    ColorCensus c2 = color_census(res2.host);
    for (int c = 1; c <= 4; ++c) {
        CHECK(c2.edge_count[c - 1] == 4);
        CHECK(c2.component_count[c - 1] == 4);  // perfect matchings
    }
    CHECK(verify_construction(res2).all_pass);
}

TEST_CASE("exact-color-count construction") {
    ConstructionParams p;
    p.components = {complete_graph(4)};
    p.k = 4;
    auto res = construct(ConstructionKind::ExactK, p);
    CHECK(res.host.n == 9);  // two parts of 3 plus a witness part of 3
    CHECK(res.host.color_count == 4);
    CHECK(verify_construction(res).all_pass);

    ConstructionParams bad = p;
    bad.k = 3;
    CHECK_THROWS(construct(ConstructionKind::ExactK, bad));
}

TEST_CASE("bipartite star partition") {
    ConstructionParams p;
    p.components = {cycle_graph(4)};
    p.k = 3;
    auto res = construct(ConstructionKind::BipartiteStarpart, p);
    CHECK(res.host.m == 3);
    CHECK(verify_construction(res).all_pass);
}

TEST_CASE("complete no-rainbow-path shape") {
    ConstructionParams p;
    p.part_sizes = {4, 3, 2};
    auto res = construct(ConstructionKind::NoRainbowP5Shape, p);
    CHECK(res.host.n == 9);
    CHECK(res.host.color_count == 4);
    CHECK(verify_construction(res).all_pass);

    ConstructionParams bad;
    bad.part_sizes = {1, 3};
    CHECK_THROWS(construct(ConstructionKind::NoRainbowP5Shape, bad));
}

TEST_CASE("bipartite no-rainbow shapes") {
    ConstructionParams p4;
    p4.u_sizes = {2, 1, 3};
    auto r1 = construct(ConstructionKind::BipartiteNoRainbowP4Shape, p4);
    CHECK(r1.host.m == 6);
    CHECK(verify_construction(r1).all_pass);

    ConstructionParams a;
    a.u_sizes = {3, 2};
    a.v_sizes = {1, 2, 1, 1};
    auto r2 = construct(ConstructionKind::BipartiteNoRainbowP5A, a);
    CHECK(r2.host.m == 5);
    CHECK(verify_construction(r2).all_pass);

    ConstructionParams b;
    b.u_sizes = {2, 2, 1};
    b.v_sizes = {1, 2, 2};
    auto r3 = construct(ConstructionKind::BipartiteNoRainbowP5B, b);
    CHECK(r3.host.m == 5);
    CHECK(verify_construction(r3).all_pass);
}

TEST_CASE("supplied sub-hosts are validated") {
    // the product construction rejects an inner witness with a planted triangle
    ConstructionParams p;
    p.components = {complete_graph(3), complete_graph(3)};
    std::vector<int> all_one(10, 1);
    p.sub_host = build_host(HostShape::Complete, 0, 5, all_one);
    CHECK_THROWS(construct(ConstructionKind::R3I, p));

    // a genuine pentagon witness is accepted
    SimpleGraph c5 = cycle_graph(5);
    std::vector<int> pent;
    ColoredHost probe;
    probe.shape = HostShape::Complete;
    probe.n = 5;
    for (std::size_t e = 0; e < 10; ++e) {
        auto [u, v] = probe.edge_endpoints(e);
        pent.push_back(c5.has_edge(u, v) ? 1 : 2);
    }
    p.sub_host = build_host(HostShape::Complete, 0, 5, pent);
    auto res = construct(ConstructionKind::R3I, p);
    CHECK(verify_construction(res).all_pass);
    CHECK(res.parameters["inner"]["source"] == "supplied");
}

TEST_CASE("randomized parameterizations verify for every kind") {
    std::mt19937_64 rng(987654321);
    for (ConstructionKind kind : all_construction_kinds()) {
        for (int trial = 0; trial < 12; ++trial) {
            ConstructionParams p = cases::random_case(kind, rng);
            CAPTURE(kind_name(kind));
            CAPTURE(trial);
            ConstructionResult res = construct(kind, p);
            CHECK(res.host.vertex_count() <= 40);
            auto report = verify_construction(res);
            CHECK(report.all_pass);
        }
    }
}
