#pragma once

#include <vector>

#include "rf/graph.hpp"

namespace rf {

// Minimal cores whose placement inside one part of a large complete
// multipartite graph creates the base graph. members carry no isolated
// vertices and are pairwise incomparable under the subgraph relation.
struct DecompositionFamily {
    SimpleGraph base;
    int index = 2;
    std::vector<SimpleGraph> members;
};

// index i means chi(base)-i parts stay independent; i=2 is the classic family
DecompositionFamily decomposition_family(const SimpleGraph& h, int index);

}  // namespace rf
