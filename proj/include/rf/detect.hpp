#pragma once

#include <optional>
#include <span>
#include <utility>

#include "rf/graph.hpp"
#include "rf/host.hpp"

namespace rf {

// Witness of a pattern inside a host. For monochromatic findings, vertices[i]
// is the host vertex carrying pattern vertex i and color is the single color.
// For rainbow paths, vertices is the path in order and colors its edge colors.
struct Embedding {
    std::vector<int> vertices;
    int color = 0;
    std::vector<int> colors;
};

// Exact search for a monochromatic copy of pattern (optionally restricted to
// one color). Patterns may be disconnected; isolated pattern vertices only
// consume spare host vertices.
std::optional<Embedding> find_mono_copy(const ColoredHost& host, const SimpleGraph& pattern,
                                        std::optional<int> color = std::nullopt);

// Exact search for a path on t distinct vertices whose t-1 edges have pairwise
// distinct colors.
std::optional<Embedding> find_rainbow_path(const ColoredHost& host, int t);

namespace detail {

// Reusable per-pattern data: non-isolated components ranked most-constrained
// first (chromatic number, then order).
struct PatternInfo {
    std::vector<std::uint64_t> ranked_components;
    std::uint64_t isolated = 0;
    int trichromatic = 0;   // components with chromatic number >= 3
    int tri_total = 0;      // their total order
    int tri_max = 0;        // largest such component
};

PatternInfo analyze_pattern(const SimpleGraph& pattern);

// Single-color-class matcher over adjacency masks; V is the number of host
// vertices available (isolated pattern vertices take unused ones). anchor
// forces the embedding to use that host edge. Returns the map over the
// original pattern vertices.
std::optional<std::vector<int>> find_pattern_in_class(std::span<const std::uint64_t> hostadj,
                                                      int V, const SimpleGraph& pattern,
                                                      const PatternInfo& info,
                                                      std::optional<std::pair<int, int>> anchor);

std::optional<std::vector<int>> find_pattern_in_class(std::span<const std::uint64_t> hostadj,
                                                      int V, const SimpleGraph& pattern,
                                                      std::optional<std::pair<int, int>> anchor);

}  // namespace detail

}  // namespace rf
