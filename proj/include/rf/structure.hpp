#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rf/graph.hpp"
#include "rf/host.hpp"

namespace rf {

// Certificate that a complete host has the rainbow-path-free shape: one
// distinguished color on all cross-part edges, each part showing only its own
// color besides the distinguished one, and showing it at least once.
struct P5Partition {
    int color1 = 0;
    struct Part {
        int color = 0;
        std::vector<int> vertices;
    };
    std::vector<Part> parts;
};

struct CertReport {
    bool pass = false;
    std::vector<std::string> violations;  // one line per violating edge/condition
};

CertReport verify_p5_partition(const ColoredHost& host, const P5Partition& cert);

struct RecoveredP5 {
    P5Partition partition;
    std::vector<int> relabeling;  // relabeling[c-1] = canonical number of host color c
};

// Deterministic recovery: smallest viable distinguished color, color spans as
// parts, span-free vertices attached to the largest part (ties: first part).
// Absent when no choice of distinguished color yields a valid certificate.
std::optional<RecoveredP5> recover_p5_partition(const ColoredHost& host);

// Size conditions a certificate must meet before the partition can dodge a
// disconnected pattern: sorted parts, third largest covers the largest
// component, fourth the smallest, and the tail covers the whole pattern.
struct ExtendedSizeReport {
    bool k_at_least_4 = false;
    bool v3_ok = false;
    bool v4_ok = false;
    bool tail_ok = false;
    bool all_ok = false;
    std::vector<int> sorted_sizes;
};

ExtendedSizeReport check_extended_sizes(const P5Partition& cert, const SimpleGraph& h);

// Shapes of rainbow-path-free colorings of K_{n,n}. For t = 4 a star
// partition of one side; for t = 5 one of three cases.
struct BipartiteStructure {
    int t = 0;             // 4 or 5
    char case_id = 0;      // 'S' star partition (t=4); 'A','B','C' (t=5)
    bool sides_swapped = false;  // partitions described on the right side
    int color1 = 0;        // distinguished color (cases A and B)
    // case S: star_parts[i] = vertices of the U-part carrying color i+1
    // case A: u1, u2 and v_parts per color; case B: u_parts/v_parts per color
    std::vector<std::vector<int>> u_parts;
    std::vector<std::vector<int>> v_parts;
    std::vector<int> part_colors;  // colors matching u_parts/v_parts entries
};

std::optional<BipartiteStructure> classify_bipartite_structure(const ColoredHost& host, int t);

struct TripartiteDecision {
    bool contains = false;
    std::string route;  // "size-condition-i", "size-condition-ii", "exact-search", "counting"
    bool certain = true;
};

// Does K_{x,y,z} contain g1 + g2 (both 3-chromatic)? Size conditions first,
// exact subgraph search as the fallback on small hosts.
TripartiteDecision tripartite_contains_union(int x, int y, int z, const SimpleGraph& g1,
                                             const SimpleGraph& g2);

}  // namespace rf
