#pragma once

#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "rf/graph.hpp"

namespace rf {

// exact chromatic computations are only attempted up to this order
inline constexpr int kMaxExactOrder = 16;

struct GraphInvariants {
    int components = 0;
    std::vector<int> component_orders;  // ascending
    int chromatic_number = 0;
    int chromatic_surplus = 0;  // min class size over all proper chi-colorings
    int sigma3 = 0;             // surplus if chi == 3, else 0
    int clique_number = 0;
    bool is_connected = false;
    bool is_bipartite = false;
    bool has_isolated = false;
};

int clique_number(const SimpleGraph& g);
int chromatic_number(const SimpleGraph& g);
int chromatic_surplus(const SimpleGraph& g);
GraphInvariants invariants(const SimpleGraph& g);

// Enumerates proper colorings using at most max_colors colors, in first-use
// canonical order (color c+1 may appear only after colors 1..c). The visitor
// receives the class assignment (1-based); returning false stops the scan.
void for_each_proper_coloring(const SimpleGraph& g, int max_colors,
                              const std::function<bool(std::span<const int>)>& visit);

// Extreme partite-set sizes over all bipartitions of a bipartite graph:
// s = smallest achievable small side, s_star = largest, t/t_star their
// complements (s + t = s_star + t_star = order).
struct PartiteProfile {
    int s = 0;
    int t = 0;
    int s_star = 0;
    int t_star = 0;
};

PartiteProfile partite_profile(const SimpleGraph& g);

struct CriticalEdgeResult {
    bool critical = false;
    std::optional<std::pair<int, int>> witness_edge;
};

// true iff chi(g) == r and removing some edge drops chi to r-1
CriticalEdgeResult is_color_critical(const SimpleGraph& g, int r);

std::pair<SimpleGraph, int> strip_isolated(const SimpleGraph& g);

// Shared class-size vector (sorted descending) over proper p-colorings with
// p = max chi(G_i) and no empty class; absent when the graphs admit none.
// Throws when the orders differ.
std::optional<std::vector<int>> homological_vector(std::span<const SimpleGraph> graphs);

// All achievable multisets of class sizes (sorted descending, all classes
// nonempty) over proper colorings with exactly p colors.
std::vector<std::vector<int>> proper_coloring_size_vectors(const SimpleGraph& g, int p);

}  // namespace rf
