#include "rf/decomposition.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "rf/invariants.hpp"

namespace rf {

DecompositionFamily decomposition_family(const SimpleGraph& h, int index) {
    if (h.order > 10) throw std::invalid_argument("order exceeds limit of 10");
    int p = chromatic_number(h);
    if (p < 3) throw std::invalid_argument("chromatic number must be at least 3");
    if (index < 2 || index > p - 1) throw std::invalid_argument("index out of range");

    // A core arises from any vertex split: the rest must be (p-index)-colorable,
    // the kept part contributes its non-isolated induced subgraph.
    std::vector<SimpleGraph> cores;
    std::uint64_t all = (std::uint64_t{1} << h.order) - 1;
    int free_parts = p - index;
    for (std::uint64_t kept = 0; kept <= all; ++kept) {
        SimpleGraph rest = induced_subgraph(h, all & ~kept);
        if (chromatic_number(rest) > free_parts) continue;
        auto [core, removed] = strip_isolated(induced_subgraph(h, kept));
        (void)removed;
        if (core.is_empty()) continue;  // impossible when chi(h) = p > p-index+1
        bool dup = false;
        for (const auto& c : cores)
            if (isomorphic(c, core)) { dup = true; break; }
        if (!dup) cores.push_back(core);
    }
    // keep only subgraph-minimal cores
    std::vector<SimpleGraph> members;
    for (std::size_t i = 0; i < cores.size(); ++i) {
        bool minimal = true;
        for (std::size_t j = 0; j < cores.size() && minimal; ++j) {
            if (i == j) continue;
            if (contains_subgraph(cores[i], cores[j]) && !isomorphic(cores[i], cores[j]))
                minimal = false;
        }
        if (minimal) members.push_back(cores[i]);
    }
    std::sort(members.begin(), members.end(), [](const SimpleGraph& a, const SimpleGraph& b) {
        if (a.order != b.order) return a.order < b.order;
        return a.edge_count() < b.edge_count();
    });
    DecompositionFamily fam;
    fam.base = h;
    fam.index = index;
    fam.members = std::move(members);
    return fam;
}

}  // namespace rf
