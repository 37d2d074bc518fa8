#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rf/graph.hpp"

namespace rf {

// Externally supplied Ramsey quantities. Lookups match graphs structurally
// (isomorphism), not by encoding, so callers may pass any labeling.
//   kind "R"    two-color value R(G1, G2), graphs = {G1, G2}
//   kind "Rk"   k-color value R_k(G), graphs = {G}, k set
//   kind "BR"   bipartite value BR_k(G), graphs = {G}, k set
//   kind "RM"   R(M_index(H), H) for the decomposition family, graphs = {H}
//   kind "R2C"  R_2 over the connected supergraphs of H, graphs = {H}
struct KnownValuesTable {
    struct Entry {
        std::string kind;
        std::vector<SimpleGraph> graphs;
        int k = 0;
        int index = 0;
        int value = 0;
        std::string note;
    };
    std::vector<Entry> entries;

    void add(Entry e);
    std::optional<int> two_color(const SimpleGraph& g1, const SimpleGraph& g2) const;
    std::optional<int> multicolor(int k, const SimpleGraph& g) const;
    std::optional<int> bipartite(int k, const SimpleGraph& g) const;
    std::optional<int> family_vs_base(const SimpleGraph& h, int index) const;
    std::optional<int> connected_family(const SimpleGraph& h) const;
};

}  // namespace rf
