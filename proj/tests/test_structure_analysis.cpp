#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "construction_cases.hpp"
#include "rf/constructions.hpp"
#include "rf/detect.hpp"
#include "rf/search.hpp"
#include "rf/structure.hpp"
#include "test_util.hpp"

using namespace rf;

namespace {

ConstructionResult shape_host(std::vector<int> sizes, std::uint64_t seed, bool randomize) {
    ConstructionParams p;
    p.part_sizes = std::move(sizes);
    p.seed = seed;
    p.randomize_within = randomize;
    return construct(ConstructionKind::NoRainbowP5Shape, p);
}

}  // namespace

TEST_CASE("verify accepts the generator's own partition and rejects tampering") {
    auto res = shape_host({4, 3, 2}, 0, false);
    auto rec = recover_p5_partition(res.host);
    REQUIRE(rec.has_value());
    CHECK(verify_p5_partition(res.host, rec->partition).pass);

    // recolor one cross-part edge: verification must list the edge
    std::vector<int> colors = res.host.colors;
    // vertices 0 and 4 sit in different parts of the [4,3,2] shape
    colors[res.host.edge_index(0, 4)] = 3;
    ColoredHost tampered = build_host(HostShape::Complete, 0, 9, colors);
    auto report = verify_p5_partition(tampered, rec->partition);
    CHECK_FALSE(report.pass);
    CHECK_FALSE(report.violations.empty());

    // a monochromatic host cannot exhibit any part's color
    ColoredHost mono = build_host(HostShape::Complete, 0, 5, std::vector<int>(10, 1));
    P5Partition cert;
    cert.color1 = 1;
    cert.parts.push_back({2, {0, 1, 2}});
    cert.parts.push_back({3, {3, 4}});
    auto rep2 = verify_p5_partition(mono, cert);
    CHECK_FALSE(rep2.pass);

    // non-partitions are input errors, not reports
    P5Partition overlap = cert;
    overlap.parts[1].vertices = {2, 3, 4};
    CHECK_THROWS(verify_p5_partition(mono, overlap));
}

TEST_CASE("recovery round-trips on generated shapes") {
    std::mt19937_64 rng(555);
    for (int trial = 0; trial < 120; ++trial) {
        ConstructionParams p = cases::random_case(ConstructionKind::NoRainbowP5Shape, rng);
        auto res = construct(ConstructionKind::NoRainbowP5Shape, p);
        auto rec = recover_p5_partition(res.host);
        if (res.host.color_count < 2) continue;  // degenerate collapse
        REQUIRE(rec.has_value());
        CHECK(verify_p5_partition(res.host, rec->partition).pass);
        // soundness: a certificate implies the host has no rainbow path
        CHECK_FALSE(find_rainbow_path(res.host, 5).has_value());
    }
}

TEST_CASE("recovery refuses hosts with a rainbow path") {
    std::mt19937_64 rng(556);
    int checked = 0;
    while (checked < 200) {
        ColoredHost host = oracle::random_host(8, 6, rng);
        if (host.shape != HostShape::Complete) continue;
        if (!find_rainbow_path(host, 5)) continue;
        ++checked;
        CHECK_FALSE(recover_p5_partition(host).has_value());
    }
}

TEST_CASE("recovery answers absent for single-colored hosts") {
    ColoredHost mono = build_host(HostShape::Complete, 0, 4, std::vector<int>(6, 1));
    CHECK_FALSE(recover_p5_partition(mono).has_value());
}

TEST_CASE("recovery is sound on arbitrary hosts") {
    // success always implies rainbow-freeness; the converse needs the
    // structure lemma's no-monochromatic hypothesis (see the next case)
    std::mt19937_64 rng(557);
    int checked = 0;
    for (int trial = 0; trial < 1500; ++trial) {
        int n = 5 + static_cast<int>(rng() % 2);
        std::size_t E = host_edge_count(HostShape::Complete, 0, n);
        std::vector<int> colors(E);
        for (auto& c : colors) c = 1 + static_cast<int>(rng() % 5);
        ColoredHost host = build_host(HostShape::Complete, 0, n, colors);
        if (host.color_count < 2) continue;
        ++checked;
        auto rec = recover_p5_partition(host);
        if (rec) {
            CHECK(verify_p5_partition(host, rec->partition).pass);
            CHECK_FALSE(find_rainbow_path(host, 5).has_value());
        }
    }
    CHECK(checked > 500);
}

TEST_CASE("a star vertex over a monochromatic rest defeats recovery but not soundness") {
    // all edges off vertex 0 share one color while 0's star runs through four:
    // rainbow-free with four colors, yet no partition certificate can exist
    // because three colors each pin vertex 0 to their part
    std::vector<int> colors(10, 2);
    ColoredHost probe;
    probe.shape = HostShape::Complete;
    probe.n = 5;
    colors[probe.edge_index(0, 1)] = 1;
    colors[probe.edge_index(0, 3)] = 3;
    colors[probe.edge_index(0, 4)] = 4;
    ColoredHost host = build_host(HostShape::Complete, 0, 5, colors);
    CHECK(host.color_count == 4);
    CHECK_FALSE(find_rainbow_path(host, 5).has_value());
    CHECK_FALSE(recover_p5_partition(host).has_value());
}

TEST_CASE("recovery is complete in the structure lemma's regime") {
    // enumerate all colorings of K_5 avoiding a monochromatic P_3 (the graph
    // with three-color forcing value 5); among them, recovery succeeds exactly
    // on the rainbow-free ones
    int with_many_colors = 0;
    enumerate_colorings(
        HostShape::Complete, 0, 5, std::nullopt, std::nullopt,
        [&](std::span<const int> colors, int k) {
            std::vector<int> c(colors.begin(), colors.end());
            ColoredHost host = build_host(HostShape::Complete, 0, 5, c);
            if (find_mono_copy(host, path_graph(3))) return;
            if (k < 4) return;
            ++with_many_colors;
            bool rainbow = find_rainbow_path(host, 5).has_value();
            auto rec = recover_p5_partition(host);
            CHECK(rec.has_value() == !rainbow);
            if (rec) CHECK(verify_p5_partition(host, rec->partition).pass);
        });
    CHECK(with_many_colors > 0);
}

TEST_CASE("extended size conditions") {
    SimpleGraph two_k3 = disjoint_union(complete_graph(3), complete_graph(3));
    auto cert_of = [](std::vector<int> sizes) {
        P5Partition cert;
        cert.color1 = 1;
        int v = 0;
        for (std::size_t i = 0; i < sizes.size(); ++i) {
            P5Partition::Part part;
            part.color = static_cast<int>(i) + 2;
            for (int j = 0; j < sizes[i]; ++j) part.vertices.push_back(v++);
            cert.parts.push_back(std::move(part));
        }
        return cert;
    };
    auto r1 = check_extended_sizes(cert_of({7, 6, 3}), two_k3);
    CHECK(r1.k_at_least_4);
    CHECK(r1.v3_ok);
    CHECK(r1.v4_ok);
    CHECK(r1.tail_ok);
    CHECK(r1.all_ok);

    auto r2 = check_extended_sizes(cert_of({10, 2, 2}), two_k3);
    CHECK_FALSE(r2.v3_ok);
    CHECK_FALSE(r2.all_ok);

    auto r3 = check_extended_sizes(cert_of({6, 6}), two_k3);
    CHECK_FALSE(r3.k_at_least_4);
    CHECK_FALSE(r3.all_ok);
}

TEST_CASE("bipartite star partition classification") {
    ConstructionParams p;
    p.u_sizes = {2, 1, 1};
    auto res = construct(ConstructionKind::BipartiteNoRainbowP4Shape, p);
    auto s = classify_bipartite_structure(res.host, 4);
    REQUIRE(s.has_value());
    CHECK(s->case_id == 'S');
    CHECK_FALSE(s->sides_swapped);
    CHECK(s->u_parts.size() == 3);

    // the same shape hides on the other side after a transpose
    std::vector<int> colors(16);
    for (int u = 0; u < 4; ++u)
        for (int v = 0; v < 4; ++v) colors[u * 4 + v] = v + 1;
    ColoredHost swapped = build_host(HostShape::Bipartite, 4, 4, colors);
    auto s2 = classify_bipartite_structure(swapped, 4);
    REQUIRE(s2.has_value());
    CHECK(s2->sides_swapped);

    CHECK_THROWS(classify_bipartite_structure(res.host, 3));
    // too few colors for the lemma's regime
    ColoredHost two = build_host(HostShape::Bipartite, 2, 2, {1, 2, 2, 1});
    CHECK_THROWS(classify_bipartite_structure(two, 4));
}

TEST_CASE("bipartite five-path cases classify and round-trip") {
    std::mt19937_64 rng(600);
    int case_a = 0, case_b = 0;
    for (int trial = 0; trial < 150; ++trial) {
        ConstructionParams pa = cases::random_case(ConstructionKind::BipartiteNoRainbowP5A, rng);
        auto ra = construct(ConstructionKind::BipartiteNoRainbowP5A, pa);
        if (ra.host.color_count >= 4) {
            auto s = classify_bipartite_structure(ra.host, 5);
            REQUIRE(s.has_value());
            ++case_a;
        }
        ConstructionParams pb = cases::random_case(ConstructionKind::BipartiteNoRainbowP5B, rng);
        auto rb = construct(ConstructionKind::BipartiteNoRainbowP5B, pb);
        if (rb.host.color_count >= 4) {
            auto s = classify_bipartite_structure(rb.host, 5);
            REQUIRE(s.has_value());
            ++case_b;
        }
    }
    CHECK(case_a > 20);
    CHECK(case_b > 20);
}

TEST_CASE("matching-per-color hosts classify as the sporadic case") {
    // 4x4 grid: color = Latin square from the two-bit group, every color a
    // perfect matching and no rainbow path
    std::vector<int> colors(16);
    for (int u = 0; u < 4; ++u)
        for (int v = 0; v < 4; ++v) colors[u * 4 + v] = (u ^ v) + 1;
    ColoredHost host = build_host(HostShape::Bipartite, 4, 4, colors);
    CHECK_FALSE(find_rainbow_path(host, 5).has_value());
    auto s = classify_bipartite_structure(host, 5);
    REQUIRE(s.has_value());
    CHECK(s->case_id == 'C');

    // a 3x3 host with colors sized 3,3,2,1 built from matchings
    std::vector<int> c9(9);
    auto idx = [](int u, int v) { return u * 3 + v; };
    c9[idx(0, 0)] = 1; c9[idx(1, 1)] = 1; c9[idx(2, 2)] = 1;
    c9[idx(0, 1)] = 2; c9[idx(1, 2)] = 2; c9[idx(2, 0)] = 2;
    c9[idx(0, 2)] = 3; c9[idx(1, 0)] = 3;
    c9[idx(2, 1)] = 4;
    ColoredHost host3 = build_host(HostShape::Bipartite, 3, 3, c9);
    auto s3 = classify_bipartite_structure(host3, 5);
    REQUIRE(s3.has_value());
    CHECK(s3->case_id == 'C');
}

TEST_CASE("classification absence entails a rainbow path at the right sizes") {
    // every 4-colored K_{n,n} (n >= 3) either classifies or has a rainbow path
    std::mt19937_64 rng(601);
    int checked = 0;
    while (checked < 400) {
        int n = 3 + static_cast<int>(rng() % 2);
        std::vector<int> colors(static_cast<std::size_t>(n) * n);
        for (auto& c : colors) c = 1 + static_cast<int>(rng() % 4);
        ColoredHost host = build_host(HostShape::Bipartite, n, n, colors);
        if (host.color_count < 4) continue;
        ++checked;
        bool rainbow = find_rainbow_path(host, 5).has_value();
        auto s = classify_bipartite_structure(host, 5);
        if (!rainbow) {
            REQUIRE(s.has_value());
        } else {
            CHECK_FALSE(s.has_value());
        }
    }
}

TEST_CASE("tripartite containment decisions") {
    auto d1 = tripartite_contains_union(2, 2, 2, complete_graph(3), complete_graph(3));
    CHECK(d1.contains);
    CHECK(d1.route == "size-condition-ii");

    auto d2 = tripartite_contains_union(2, 2, 1, complete_graph(3), complete_graph(3));
    CHECK_FALSE(d2.contains);
    CHECK(d2.route == "counting");

    auto d3 = tripartite_contains_union(3, 3, 2, cycle_graph(5), complete_graph(3));
    CHECK(d3.contains);
    CHECK(d3.route == "size-condition-ii");

    CHECK_THROWS(tripartite_contains_union(3, 3, 3, cycle_graph(4), complete_graph(3)));
}

TEST_CASE("tripartite size conditions never contradict exact search") {
    std::mt19937_64 rng(602);
    std::vector<SimpleGraph> pool{complete_graph(3), cycle_graph(5), cases::paw(),
                                  cases::diamond()};
    for (int trial = 0; trial < 60; ++trial) {
        const SimpleGraph& g1 = pool[rng() % pool.size()];
        const SimpleGraph& g2 = pool[rng() % pool.size()];
        int x = 1 + static_cast<int>(rng() % 4);
        int y = 1 + static_cast<int>(rng() % 4);
        int z = 1 + static_cast<int>(rng() % 4);
        if (x + y + z > 12) continue;
        auto dec = tripartite_contains_union(x, y, z, g1, g2);
        // exact reference on the same small host
        SimpleGraph hostg(x + y + z);
        auto part = [&](int v) { return v < x ? 0 : (v < x + y ? 1 : 2); };
        for (int a = 0; a < hostg.order; ++a)
            for (int b = a + 1; b < hostg.order; ++b)
                if (part(a) != part(b)) hostg.add_edge(a, b);
        bool exact = oracle::brute_contains(hostg, disjoint_union(g1, g2));
        CAPTURE(x);
        CAPTURE(y);
        CAPTURE(z);
        if (dec.contains) CHECK(exact);          // conditions are sound
        if (dec.route == "exact-search") CHECK(dec.contains == exact);
        if (dec.route == "counting") CHECK_FALSE(exact);
    }
}
