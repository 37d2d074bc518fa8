#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "rf/graph.hpp"

namespace rf {

enum class HostShape { Complete, Bipartite };

// Edge-colored complete or complete-bipartite host. Colors are positive and
// normalized to first-occurrence order 1..k; the canonical edge order is
// (i,j) with i<j lexicographic for complete hosts and (left,right) row-major
// for bipartite ones. Bipartite host vertices are numbered left 0..m-1 then
// right m..m+n-1.
struct ColoredHost {
    HostShape shape = HostShape::Complete;
    int m = 0;  // left side (bipartite only)
    int n = 0;  // order, or right side
    std::vector<int> colors;
    int color_count = 0;
    std::vector<int> original_labels;  // original_labels[c-1] = input color behind c

    int vertex_count() const { return shape == HostShape::Complete ? n : m + n; }
    std::size_t edge_count() const {
        return shape == HostShape::Complete
                   ? static_cast<std::size_t>(n) * (n - 1) / 2
                   : static_cast<std::size_t>(m) * n;
    }
    bool adjacent(int u, int v) const {
        if (u == v) return false;
        if (shape == HostShape::Complete) return true;
        return (u < m) != (v < m);
    }
    std::size_t edge_index(int u, int v) const;
    std::pair<int, int> edge_endpoints(std::size_t idx) const;
    int color_of(int u, int v) const { return colors[edge_index(u, v)]; }
};

std::size_t host_edge_count(HostShape shape, int m, int n);

// validates lengths and positivity, then relabels colors to 1..k
ColoredHost build_host(HostShape shape, int m, int n, std::vector<int> colors);

struct ColorCensus {
    int color_count = 0;
    std::vector<long long> edge_count;   // per color, index c-1
    std::vector<int> component_count;    // components of the color class on its support
};

ColorCensus color_census(const ColoredHost& host);

}  // namespace rf
