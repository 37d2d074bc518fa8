#include "rf/host.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace rf {

std::size_t host_edge_count(HostShape shape, int m, int n) {
    return shape == HostShape::Complete ? static_cast<std::size_t>(n) * (n - 1) / 2
                                        : static_cast<std::size_t>(m) * n;
}

std::size_t ColoredHost::edge_index(int u, int v) const {
    if (shape == HostShape::Complete) {
        if (u > v) std::swap(u, v);
        return static_cast<std::size_t>(u) * n - static_cast<std::size_t>(u) * (u + 1) / 2 +
               (v - u - 1);
    }
    if (u > v) std::swap(u, v);  // u left, v right
    return static_cast<std::size_t>(u) * n + (v - m);
}

std::pair<int, int> ColoredHost::edge_endpoints(std::size_t idx) const {
    if (shape == HostShape::Complete) {
        int u = 0;
        std::size_t row = static_cast<std::size_t>(n) - 1;
        while (idx >= row) {
            idx -= row;
            --row;
            ++u;
        }
        return {u, u + 1 + static_cast<int>(idx)};
    }
    int u = static_cast<int>(idx / n);
    int v = m + static_cast<int>(idx % n);
    return {u, v};
}

ColoredHost build_host(HostShape shape, int m, int n, std::vector<int> colors) {
    if (shape == HostShape::Complete) {
        if (n < 1) throw std::invalid_argument("complete host needs order >= 1");
        m = 0;
    } else {
        if (m < 1 || n < 1) throw std::invalid_argument("bipartite host needs both sides >= 1");
    }
    std::size_t want = host_edge_count(shape, m, n);
    if (colors.size() != want)
        throw std::invalid_argument("color list length " + std::to_string(colors.size()) +
                                    " does not match edge count " + std::to_string(want));
    ColoredHost host;
    host.shape = shape;
    host.m = (shape == HostShape::Bipartite) ? m : 0;
    host.n = n;
    host.colors.resize(colors.size());
    std::vector<int> relabel;  // relabel of original color values, first occurrence first
    for (std::size_t e = 0; e < colors.size(); ++e) {
        if (colors[e] < 1) throw std::invalid_argument("colors must be positive");
        auto it = std::find(relabel.begin(), relabel.end(), colors[e]);
        int c;
        if (it == relabel.end()) {
            relabel.push_back(colors[e]);
            c = static_cast<int>(relabel.size());
        } else {
            c = static_cast<int>(it - relabel.begin()) + 1;
        }
        host.colors[e] = c;
    }
    host.color_count = static_cast<int>(relabel.size());
    host.original_labels = std::move(relabel);
    return host;
}

ColorCensus color_census(const ColoredHost& host) {
    ColorCensus census;
    census.color_count = host.color_count;
    census.edge_count.assign(host.color_count, 0);
    for (int c : host.colors) ++census.edge_count[c - 1];
    census.component_count.assign(host.color_count, 0);
    int V = host.vertex_count();
    for (int c = 1; c <= host.color_count; ++c) {
        std::vector<std::uint64_t> adj(V, 0);
        for (std::size_t e = 0; e < host.colors.size(); ++e) {
            if (host.colors[e] != c) continue;
            auto [u, v] = host.edge_endpoints(e);
            adj[u] |= std::uint64_t{1} << v;
            adj[v] |= std::uint64_t{1} << u;
        }
        std::uint64_t support = 0;
        for (int v = 0; v < V; ++v)
            if (adj[v]) support |= std::uint64_t{1} << v;
        int comps = 0;
        std::uint64_t seen = 0;
        while (support & ~seen) {
            int v = std::countr_zero(support & ~seen);
            std::uint64_t comp = std::uint64_t{1} << v;
            std::uint64_t frontier = comp;
            while (frontier) {
                std::uint64_t next = 0, f = frontier;
                while (f) {
                    int u = std::countr_zero(f);
                    f &= f - 1;
                    next |= adj[u];
                }
                frontier = next & ~comp;
                comp |= next;
            }
            seen |= comp;
            ++comps;
        }
        census.component_count[c - 1] = comps;
    }
    return census;
}

}  // namespace rf
