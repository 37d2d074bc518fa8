#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "rf/detect.hpp"
#include "rf/graph.hpp"
#include "rf/host.hpp"
#include "rf/table.hpp"

namespace rf {

// Explicit lower-bound colorings. Each returns a host together with the
// machine-checkable claims the coloring is built to satisfy.
enum class ConstructionKind {
    R3I,              // chi-part product with an inner two-colored witness
    R3II,             // blow-up of a clique-free two-colored base
    R3III,            // rotational three-part coloring
    R3IV,             // two big parts plus a surplus part
    Matching,         // cone over a one-smaller clique
    Decomp,           // independent parts over a family-avoiding inner witness
    BipartiteBlowup,  // bipartite matching blow-up
    ExactK,           // many one-color parts over a family-avoiding witness
    BipartiteStarpart,
    NoRainbowP5Shape,
    BipartiteNoRainbowP4Shape,
    BipartiteNoRainbowP5A,
    BipartiteNoRainbowP5B,
};

std::string kind_name(ConstructionKind kind);
std::optional<ConstructionKind> kind_from_name(const std::string& name);
std::vector<ConstructionKind> all_construction_kinds();

struct Claim {
    enum class Type { NoMono, NoRainbow };
    Type type = Type::NoMono;
    SimpleGraph pattern;            // NoMono only
    std::optional<int> color;       // NoMono: normalized color, absent = every color
    int path_order = 0;             // NoRainbow only
};

struct ConstructionParams {
    std::vector<SimpleGraph> components;
    int k = 0;  // color count for the kinds that take one
    int m = 0;  // matching size
    int idx_i = 1, idx_j = 1, idx_l = 1;  // 1-based component picks
    std::vector<int> part_sizes;          // complete-shape generator
    std::vector<int> u_sizes, v_sizes;    // bipartite shape generators
    std::optional<ColoredHost> sub_host;  // supplied inner witness
    std::uint64_t seed = 0;
    bool randomize_within = false;
    const KnownValuesTable* table = nullptr;
};

struct ConstructionResult {
    ConstructionKind kind = ConstructionKind::R3III;
    ColoredHost host;
    std::vector<Claim> claims;
    nlohmann::ordered_json parameters;
};

// inner witnesses are searched (rather than required) up to this order
inline constexpr int kMaxInnerSearchOrder = 8;

ConstructionResult construct(ConstructionKind kind, const ConstructionParams& params);

struct ClaimReport {
    Claim claim;
    bool pass = false;
    std::optional<Embedding> counterexample;
};

struct VerifyReport {
    bool all_pass = false;
    std::vector<ClaimReport> entries;
};

VerifyReport verify_construction(const ConstructionResult& result);

}  // namespace rf
