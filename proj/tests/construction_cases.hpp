#pragma once

// Random valid parameterizations for every construction kind, shared by the
// unit tests and the acceptance suite. All emitted hosts stay at or below 40
// vertices and every inner Ramsey value stays inside the search cap.

#include <numeric>
#include <random>
#include <vector>

#include "rf/constructions.hpp"
#include "rf/graph.hpp"
#include "rf/invariants.hpp"

namespace cases {

inline rf::SimpleGraph paw() {
    rf::SimpleGraph g = rf::complete_graph(3);
    g = rf::disjoint_union(g, rf::empty_graph(1));
    g.add_edge(2, 3);
    return g;
}

inline rf::SimpleGraph diamond() {
    rf::SimpleGraph g = rf::complete_graph(4);
    g.remove_edge(0, 1);
    return g;
}

inline rf::SimpleGraph wheel5() {  // 5-cycle joined to a hub
    rf::SimpleGraph g = rf::cycle_graph(5);
    g = rf::disjoint_union(g, rf::empty_graph(1));
    for (int v = 0; v < 5; ++v) g.add_edge(v, 5);
    return g;
}

inline rf::SimpleGraph wheel7() {
    rf::SimpleGraph g = rf::cycle_graph(7);
    g = rf::disjoint_union(g, rf::empty_graph(1));
    for (int v = 0; v < 7; ++v) g.add_edge(v, 7);
    return g;
}

// connected graphs whose pairwise two-color values stay small enough to search
inline const std::vector<rf::SimpleGraph>& searchable_pool() {
    static const std::vector<rf::SimpleGraph> pool{
        rf::complete_graph(2), rf::path_graph(3),  rf::path_graph(4),
        rf::star_graph(3),     rf::complete_graph(3), rf::cycle_graph(4),
        rf::path_graph(5)};
    return pool;
}

inline const std::vector<rf::SimpleGraph>& trichromatic_pool() {
    static const std::vector<rf::SimpleGraph> pool{
        rf::complete_graph(3), rf::cycle_graph(5), paw(), diamond(), rf::cycle_graph(7)};
    return pool;
}

inline const std::vector<rf::SimpleGraph>& low_chromatic_pool() {
    static const std::vector<rf::SimpleGraph> pool{
        rf::complete_graph(3), rf::cycle_graph(5), paw(),
        rf::complete_graph(2), rf::path_graph(3),  rf::path_graph(4),
        rf::cycle_graph(4)};
    return pool;
}

inline const std::vector<rf::SimpleGraph>& bipartite_pool() {
    static const std::vector<rf::SimpleGraph> pool{
        rf::path_graph(3), rf::path_graph(4),        rf::cycle_graph(4),
        rf::star_graph(3), rf::complete_bipartite(2, 3), rf::cycle_graph(6),
        rf::path_graph(5)};
    return pool;
}

template <typename T>
const T& pick(const std::vector<T>& v, std::mt19937_64& rng) {
    return v[rng() % v.size()];
}

inline int pick_int(int lo, int hi, std::mt19937_64& rng) {
    return lo + static_cast<int>(rng() % (hi - lo + 1));
}

inline rf::ConstructionParams random_case(rf::ConstructionKind kind, std::mt19937_64& rng) {
    using rf::ConstructionKind;
    rf::ConstructionParams p;
    p.seed = rng();
    switch (kind) {
        case ConstructionKind::R3I: {
            int t = pick_int(1, 3, rng);
            // keep the product part small: chi <= 3 components and small pairs
            for (int i = 0; i < t; ++i) p.components.push_back(pick(low_chromatic_pool(), rng));
            p.idx_i = pick_int(1, t, rng);
            // the inner pair must stay searchable; trees and small graphs only
            std::vector<int> small;
            for (int i = 0; i < t; ++i)
                if (p.components[i].order <= 4 || rf::chromatic_number(p.components[i]) <= 2)
                    small.push_back(i + 1);
            if (small.empty()) {
                p.components[0] = rf::path_graph(3);
                small.push_back(1);
            }
            p.idx_j = small[rng() % small.size()];
            p.idx_l = small[rng() % small.size()];
            break;
        }
        case ConstructionKind::R3II: {
            int t = pick_int(1, 3, rng);
            for (int i = 0; i < t; ++i) p.components.push_back(pick(low_chromatic_pool(), rng));
            p.idx_i = pick_int(1, t, rng);
            p.idx_j = pick_int(1, t, rng);
            // hosts of (R_2(K_3)-1)(n_j-1) = 5(n_j-1) vertices; keep n_j <= 5
            break;
        }
        case ConstructionKind::R3III: {
            int t = pick_int(1, 2, rng);
            int total = 0;
            for (int i = 0; i < t; ++i) {
                const auto& g = pick(trichromatic_pool(), rng);
                if (total + g.order > 13) break;
                p.components.push_back(g);
                total += g.order;
            }
            if (p.components.empty()) p.components.push_back(rf::complete_graph(3));
            break;
        }
        case ConstructionKind::R3IV: {
            int t = pick_int(1, 3, rng);
            int total = 0;
            p.components.push_back(pick(trichromatic_pool(), rng));
            total = p.components[0].order;
            for (int i = 1; i < t; ++i) {
                const auto& g = pick(low_chromatic_pool(), rng);
                if (2 * (total + g.order) > 36) break;
                p.components.push_back(g);
                total += g.order;
            }
            break;
        }
        case ConstructionKind::Matching: {
            rf::SimpleGraph h = pick(low_chromatic_pool(), rng);
            if (rng() % 2) h = rf::disjoint_union(h, pick(bipartite_pool(), rng));
            p.components.push_back(h);
            p.m = pick_int(1, 4, rng);
            break;
        }
        case ConstructionKind::Decomp: {
            static const std::vector<rf::SimpleGraph> pool{
                rf::complete_graph(3), rf::cycle_graph(5), paw(),        diamond(),
                rf::cycle_graph(7),    rf::complete_graph(4), wheel5()};
            p.components.push_back(pick(pool, rng));
            break;
        }
        case ConstructionKind::BipartiteBlowup: {
            p.components.push_back(pick(bipartite_pool(), rng));
            rf::PartiteProfile prof = rf::partite_profile(p.components[0]);
            int cap = 20 / (prof.t - 1);
            p.k = pick_int(1, std::max(1, std::min(5, cap)), rng);
            break;
        }
        case ConstructionKind::ExactK: {
            static const std::vector<std::pair<rf::SimpleGraph, int>> pool{
                {rf::complete_graph(4), 4},
                {wheel5(), 4},
                {wheel7(), 4},
                {rf::complete_graph(5), 5},
                {rf::complete_graph(6), 6}};
            auto [h, k] = pool[rng() % pool.size()];
            p.components.push_back(h);
            p.k = k;
            break;
        }
        case ConstructionKind::BipartiteStarpart: {
            static const std::vector<rf::SimpleGraph> pool{
                rf::cycle_graph(4), rf::path_graph(4),        rf::complete_bipartite(2, 3),
                rf::cycle_graph(6), rf::complete_bipartite(3, 3), rf::path_graph(5),
                rf::matching_graph(2)};
            p.components.push_back(pick(pool, rng));
            rf::PartiteProfile prof = rf::partite_profile(p.components[0]);
            int cap = 20 / std::max(1, prof.s - 1);
            p.k = pick_int(1, std::max(1, std::min(5, cap)), rng);
            break;
        }
        case ConstructionKind::NoRainbowP5Shape: {
            int parts = pick_int(1, 5, rng);
            int total = 0;
            for (int i = 0; i < parts; ++i) {
                int s = pick_int(2, 6, rng);
                if (total + s > 20) break;
                p.part_sizes.push_back(s);
                total += s;
            }
            if (p.part_sizes.empty()) p.part_sizes = {2, 2};
            p.randomize_within = true;
            break;
        }
        case ConstructionKind::BipartiteNoRainbowP4Shape: {
            int parts = pick_int(1, 6, rng);
            for (int i = 0; i < parts; ++i) p.u_sizes.push_back(pick_int(1, 4, rng));
            while (std::accumulate(p.u_sizes.begin(), p.u_sizes.end(), 0) > 20)
                p.u_sizes.pop_back();
            if (p.u_sizes.empty()) p.u_sizes = {1};
            break;
        }
        case ConstructionKind::BipartiteNoRainbowP5A: {
            int k = pick_int(2, 6, rng);
            p.v_sizes.push_back(pick_int(0, 3, rng));  // the color-1 block may be empty
            for (int i = 1; i < k; ++i) p.v_sizes.push_back(pick_int(1, 4, rng));
            int n = std::accumulate(p.v_sizes.begin(), p.v_sizes.end(), 0);
            if (n < 1) {
                p.v_sizes[0] = 1;
                n = 1;
            }
            int u1 = pick_int(1, n, rng);
            p.u_sizes = {u1, n - u1};
            break;
        }
        case ConstructionKind::BipartiteNoRainbowP5B: {
            int parts = pick_int(1, 4, rng);
            int total = 0;
            for (int i = 0; i < parts; ++i) {
                int s = pick_int(1, 4, rng);
                if (total + s > 16) break;
                p.u_sizes.push_back(s);
                total += s;
            }
            if (p.u_sizes.empty()) p.u_sizes = {1};
            // split the same total over the same number of right parts
            int blocks = static_cast<int>(p.u_sizes.size());
            total = std::accumulate(p.u_sizes.begin(), p.u_sizes.end(), 0);
            p.v_sizes.assign(blocks, 1);
            for (int extra = total - blocks; extra > 0; --extra)
                ++p.v_sizes[rng() % blocks];
            p.randomize_within = true;
            break;
        }
    }
    return p;
}

}  // namespace cases
