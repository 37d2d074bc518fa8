#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "rf/detect.hpp"
#include "rf/graph.hpp"
#include "rf/host.hpp"
#include "test_util.hpp"

using namespace rf;

namespace {

// the rotational three-part coloring: within part i color i+1, between parts
// the color missing from both part interiors
ColoredHost rotational_three(int q) {
    int n = 3 * q;
    auto part = [&](int v) { return v / q; };
    std::vector<int> colors;
    ColoredHost probe;
    probe.shape = HostShape::Complete;
    probe.n = n;
    for (std::size_t e = 0; e < host_edge_count(HostShape::Complete, 0, n); ++e) {
        auto [u, v] = probe.edge_endpoints(e);
        int pu = part(u), pv = part(v);
        colors.push_back(pu == pv ? pu + 1 : 4 - pu - pv);
    }
    return build_host(HostShape::Complete, 0, n, colors);
}

}  // namespace

TEST_CASE("build_host normalizes colors by first occurrence") {
    ColoredHost h1 = build_host(HostShape::Complete, 0, 3, {1, 1, 1});
    CHECK(h1.color_count == 1);

    ColoredHost h2 = build_host(HostShape::Complete, 0, 3, {5, 7, 5});
    CHECK(h2.color_count == 2);
    CHECK(h2.colors == std::vector<int>{1, 2, 1});
    CHECK(h2.original_labels == std::vector<int>{5, 7});

    ColoredHost h3 = build_host(HostShape::Bipartite, 2, 2, {1, 2, 3, 4});
    CHECK(h3.color_count == 4);

    CHECK_THROWS(build_host(HostShape::Complete, 0, 3, {1, 1}));
    CHECK_THROWS(build_host(HostShape::Complete, 0, 3, {1, 0, 1}));
    CHECK_THROWS(build_host(HostShape::Complete, 0, 3, {1, -2, 1}));
}

TEST_CASE("normalization is idempotent and preserves query answers") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        ColoredHost h = oracle::random_host(7, 9, rng);
        ColoredHost again = build_host(h.shape, h.m, h.n, h.colors);
        CHECK(again.colors == h.colors);
        CHECK(again.color_count == h.color_count);
        // scramble labels with an injective map; answers must not move
        std::vector<int> scrambled(h.colors.size());
        for (std::size_t e = 0; e < h.colors.size(); ++e) scrambled[e] = h.colors[e] * 7 + 3;
        ColoredHost relabeled = build_host(h.shape, h.m, h.n, scrambled);
        SimpleGraph pat = oracle::random_graph(3, 0.7, rng);
        if (pat.is_empty()) continue;
        CHECK(find_mono_copy(h, pat).has_value() == find_mono_copy(relabeled, pat).has_value());
        CHECK(find_rainbow_path(h, 5).has_value() ==
              find_rainbow_path(relabeled, 5).has_value());
    }
}

TEST_CASE("color census") {
    ColoredHost k4 = build_host(HostShape::Complete, 0, 4, {1, 1, 1, 1, 1, 1});
    ColorCensus c1 = color_census(k4);
    CHECK(c1.color_count == 1);
    CHECK(c1.edge_count == std::vector<long long>{6});
    CHECK(c1.component_count == std::vector<int>{1});

    // proper 3-edge-coloring of K4: three perfect matchings
    // edges in order: 01,02,03,12,13,23 -> matchings {01,23},{02,13},{03,12}
    ColoredHost pk4 = build_host(HostShape::Complete, 0, 4, {1, 2, 3, 3, 2, 1});
    ColorCensus c2 = color_census(pk4);
    CHECK(c2.color_count == 3);
    CHECK(c2.edge_count == std::vector<long long>{2, 2, 2});
    CHECK(c2.component_count == std::vector<int>{2, 2, 2});

    ColoredHost b = build_host(HostShape::Bipartite, 2, 2, {1, 2, 3, 4});
    ColorCensus c3 = color_census(b);
    CHECK(c3.color_count == 4);
    CHECK(c3.edge_count == std::vector<long long>{1, 1, 1, 1});

    long long total = 0;
    for (long long e : c2.edge_count) total += e;
    CHECK(total == static_cast<long long>(pk4.edge_count()));
}

TEST_CASE("find_mono_copy on the named examples") {
    ColoredHost all1 = build_host(HostShape::Complete, 0, 5,
                                  std::vector<int>(10, 1));
    auto hit = find_mono_copy(all1, complete_graph(3));
    REQUIRE(hit.has_value());
    CHECK(hit->color == 1);
    CHECK(hit->vertices.size() == 3);

    // pentagon in color 1, complement pentagon in color 2: no mono triangle
    SimpleGraph c5 = cycle_graph(5);
    std::vector<int> colors;
    ColoredHost probe;
    probe.shape = HostShape::Complete;
    probe.n = 5;
    for (std::size_t e = 0; e < 10; ++e) {
        auto [u, v] = probe.edge_endpoints(e);
        colors.push_back(c5.has_edge(u, v) ? 1 : 2);
    }
    ColoredHost pent = build_host(HostShape::Complete, 0, 5, colors);
    CHECK_FALSE(find_mono_copy(pent, complete_graph(3)).has_value());
    CHECK(oracle::naive_mono_color(pent, complete_graph(3)) == std::nullopt);

    // rotational three-part host on 15 vertices has no monochromatic 2K3
    ColoredHost rot = rotational_three(5);
    SimpleGraph two_k3 = disjoint_union(complete_graph(3), complete_graph(3));
    CHECK_FALSE(find_mono_copy(rot, two_k3).has_value());
    CHECK(find_mono_copy(rot, complete_graph(3)).has_value());  // single triangles exist
}

TEST_CASE("find_rainbow_path on the named examples") {
    // few colors can never make a rainbow path
    ColoredHost three = build_host(HostShape::Complete, 0, 6,
                                   std::vector<int>(15, 1));
    CHECK_FALSE(find_rainbow_path(three, 5).has_value());

    // plant a rainbow path 0-1-2-3-4 under colors 1,2,3,4
    SimpleGraph p5 = path_graph(5);
    std::vector<int> colors;
    ColoredHost probe;
    probe.shape = HostShape::Complete;
    probe.n = 5;
    for (std::size_t e = 0; e < 10; ++e) colors.push_back(1);
    for (int v = 0; v + 1 < 5; ++v) colors[probe.edge_index(v, v + 1)] = v + 1;
    ColoredHost planted = build_host(HostShape::Complete, 0, 5, colors);
    auto rb = find_rainbow_path(planted, 5);
    REQUIRE(rb.has_value());
    CHECK(rb->vertices.size() == 5);
    CHECK(rb->colors.size() == 4);
    CHECK(oracle::naive_rainbow(planted, 5));

    CHECK_THROWS(find_rainbow_path(planted, 2));
}

TEST_CASE("detectors agree with naive enumeration on random hosts") {
    std::mt19937_64 rng(20250101);
    std::vector<SimpleGraph> patterns{
        complete_graph(3),        path_graph(3),
        path_graph(4),            matching_graph(2),
        star_graph(3),            cycle_graph(4),
        disjoint_union(path_graph(3), complete_graph(2)),
        disjoint_union(complete_graph(3), complete_graph(2))};
    for (int trial = 0; trial < 1200; ++trial) {
        ColoredHost host = oracle::random_host(9, 1 + static_cast<int>(rng() % 8), rng);
        const SimpleGraph& pat = patterns[rng() % patterns.size()];
        bool fast = find_mono_copy(host, pat).has_value();
        bool naive = oracle::naive_mono_color(host, pat).has_value();
        CHECK(fast == naive);
        bool fast_rb = find_rainbow_path(host, 5).has_value();
        bool naive_rb = oracle::naive_rainbow(host, 5);
        CHECK(fast_rb == naive_rb);
    }
}

TEST_CASE("returned embeddings really are what they claim") {
    std::mt19937_64 rng(31337);
    for (int trial = 0; trial < 300; ++trial) {
        ColoredHost host = oracle::random_host(8, 4, rng);
        SimpleGraph pat = oracle::random_graph(2 + static_cast<int>(rng() % 3), 0.8, rng);
        if (pat.is_empty()) continue;
        auto emb = find_mono_copy(host, pat);
        if (emb) {
            for (auto [u, v] : pat.edges()) {
                CHECK(host.adjacent(emb->vertices[u], emb->vertices[v]));
                CHECK(host.color_of(emb->vertices[u], emb->vertices[v]) == emb->color);
            }
        }
        auto rb = find_rainbow_path(host, 4);
        if (rb) {
            std::vector<int> seen;
            for (std::size_t i = 0; i + 1 < rb->vertices.size(); ++i) {
                CHECK(host.adjacent(rb->vertices[i], rb->vertices[i + 1]));
                seen.push_back(host.color_of(rb->vertices[i], rb->vertices[i + 1]));
            }
            std::sort(seen.begin(), seen.end());
            CHECK(std::adjacent_find(seen.begin(), seen.end()) == seen.end());
        }
    }
}

TEST_CASE("splitting a color class never creates a mono copy") {
    std::mt19937_64 rng(777);
    int done = 0;
    while (done < 120) {
        ColoredHost host = oracle::random_host(8, 3, rng);
        SimpleGraph pat = oracle::random_graph(3 + static_cast<int>(rng() % 2), 0.6, rng);
        if (pat.is_empty()) continue;
        if (find_mono_copy(host, pat)) continue;  // want mono-free hosts
        ++done;
        // split the largest class into two new labels
        std::vector<int> colors = host.colors;
        int big = 1;
        {
            std::vector<int> cnt(host.color_count + 1, 0);
            for (int c : colors) ++cnt[c];
            for (int c = 1; c <= host.color_count; ++c)
                if (cnt[c] > cnt[big]) big = c;
        }
        bool flip = false;
        for (auto& c : colors) {
            if (c == big) {
                if (flip) c = host.color_count + 1;
                flip = !flip;
            }
        }
        ColoredHost split = build_host(host.shape, host.m, host.n, colors);
        CHECK_FALSE(find_mono_copy(split, pat).has_value());
    }
}

TEST_CASE("isolated pattern vertices need spare host room") {
    ColoredHost k3 = build_host(HostShape::Complete, 0, 3, {1, 1, 1});
    SimpleGraph edge_plus_iso = disjoint_union(complete_graph(2), empty_graph(2));  // order 4
    CHECK_FALSE(find_mono_copy(k3, edge_plus_iso).has_value());
    ColoredHost k4 = build_host(HostShape::Complete, 0, 4, std::vector<int>(6, 1));
    CHECK(find_mono_copy(k4, edge_plus_iso).has_value());
}
