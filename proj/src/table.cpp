#include "rf/table.hpp"

#include <stdexcept>

namespace rf {

void KnownValuesTable::add(Entry e) {
    if (e.value < 2) throw std::invalid_argument("table values must be at least 2");
    entries.push_back(std::move(e));
}

std::optional<int> KnownValuesTable::two_color(const SimpleGraph& g1,
                                               const SimpleGraph& g2) const {
    for (const auto& e : entries) {
        if (e.kind != "R" || e.graphs.size() != 2) continue;
        if ((isomorphic(e.graphs[0], g1) && isomorphic(e.graphs[1], g2)) ||
            (isomorphic(e.graphs[0], g2) && isomorphic(e.graphs[1], g1)))
            return e.value;
    }
    return std::nullopt;
}

std::optional<int> KnownValuesTable::multicolor(int k, const SimpleGraph& g) const {
    for (const auto& e : entries)
        if (e.kind == "Rk" && e.k == k && e.graphs.size() == 1 && isomorphic(e.graphs[0], g))
            return e.value;
    return std::nullopt;
}

std::optional<int> KnownValuesTable::bipartite(int k, const SimpleGraph& g) const {
    for (const auto& e : entries)
        if (e.kind == "BR" && e.k == k && e.graphs.size() == 1 && isomorphic(e.graphs[0], g))
            return e.value;
    return std::nullopt;
}

std::optional<int> KnownValuesTable::family_vs_base(const SimpleGraph& h, int index) const {
    for (const auto& e : entries)
        if (e.kind == "RM" && e.index == index && e.graphs.size() == 1 &&
            isomorphic(e.graphs[0], h))
            return e.value;
    return std::nullopt;
}

std::optional<int> KnownValuesTable::connected_family(const SimpleGraph& h) const {
    for (const auto& e : entries)
        if (e.kind == "R2C" && e.graphs.size() == 1 && isomorphic(e.graphs[0], h))
            return e.value;
    return std::nullopt;
}

}  // namespace rf
