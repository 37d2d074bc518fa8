#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rf {

// Simple undirected graph on vertices 0..order-1, adjacency kept as one
// 64-bit mask per vertex. graph6 caps the order at 62, which is also the
// limit of this representation.
struct SimpleGraph {
    int order = 0;
    std::vector<std::uint64_t> adj;
    std::string label;

    SimpleGraph() = default;
    explicit SimpleGraph(int n, std::string name = {})
        : order(n), adj(static_cast<std::size_t>(n), 0), label(std::move(name)) {}

    bool has_edge(int u, int v) const { return (adj[u] >> v) & 1u; }
    void add_edge(int u, int v) {
        if (u == v) throw std::invalid_argument("self-loop");
        adj[u] |= std::uint64_t{1} << v;
        adj[v] |= std::uint64_t{1} << u;
    }
    void remove_edge(int u, int v) {
        adj[u] &= ~(std::uint64_t{1} << v);
        adj[v] &= ~(std::uint64_t{1} << u);
    }
    int degree(int v) const;
    int edge_count() const;
    std::vector<std::pair<int, int>> edges() const;
    bool is_empty() const { return edge_count() == 0; }  // nonempty = has an edge

    // structural equality; labels are display-only
    friend bool operator==(const SimpleGraph& a, const SimpleGraph& b) {
        return a.order == b.order && a.adj == b.adj;
    }
};

// thrown by parse_graph6 with the byte offset of the offending character
struct Graph6Error : std::runtime_error {
    std::size_t offset;
    Graph6Error(const std::string& msg, std::size_t off)
        : std::runtime_error(msg + " (byte " + std::to_string(off) + ")"), offset(off) {}
};

SimpleGraph parse_graph6(const std::string& text);
std::string to_graph6(const SimpleGraph& g);

// small constructors used all over the test and oracle layers
SimpleGraph empty_graph(int n);
SimpleGraph complete_graph(int n);
SimpleGraph path_graph(int n);
SimpleGraph cycle_graph(int n);
SimpleGraph complete_bipartite(int a, int b);
SimpleGraph star_graph(int leaves);  // K_{1,leaves}
SimpleGraph matching_graph(int m);   // mK_2
SimpleGraph disjoint_union(const SimpleGraph& a, const SimpleGraph& b);
SimpleGraph complement(const SimpleGraph& g);
SimpleGraph induced_subgraph(const SimpleGraph& g, std::uint64_t vertex_mask);

int component_count(const SimpleGraph& g);
std::vector<std::uint64_t> component_masks(const SimpleGraph& g);
std::vector<SimpleGraph> split_components(const SimpleGraph& g);
bool is_connected(const SimpleGraph& g);

// subgraph containment (not induced): injective map preserving pattern edges
std::optional<std::vector<int>> find_subgraph(const SimpleGraph& host, const SimpleGraph& pattern);
bool contains_subgraph(const SimpleGraph& host, const SimpleGraph& pattern);
bool isomorphic(const SimpleGraph& a, const SimpleGraph& b);

int popcount64(std::uint64_t x);

}  // namespace rf
