#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "rf/detect.hpp"
#include "rf/graph.hpp"
#include "rf/host.hpp"

namespace rf {

// Decision problem: does K_n (or K_{n,n}) admit a coloring under the budget
// with no monochromatic forbid_mono and, when set, no rainbow P_t?
struct SearchProblem {
    HostShape shape = HostShape::Complete;
    int m = 0;
    int n = 0;
    std::optional<int> color_budget;  // nullopt = any number of colors
    SimpleGraph forbid_mono;
    std::optional<int> forbid_rainbow_t;
};

enum class SearchStatus { Witness, Exhausted, Timeout };

struct SearchOutcome {
    SearchStatus status = SearchStatus::Exhausted;
    std::optional<ColoredHost> witness;
    unsigned long long nodes = 0;
    double wall_ms = 0;
};

struct SearchOptions {
    int jobs = 1;
    double time_limit_s = 0;   // 0 = no limit
    bool allow_large = false;  // lift the documented edge-count caps
};

// documented hard caps on enumerable edge counts
inline constexpr int kMaxEdgesUnbounded = 36;
inline constexpr int kMaxEdgesSmallBudget = 45;  // budgets of at most 3 colors

// per-color forbidden pattern; color 0 forbids the pattern in every color
struct Forbid {
    SimpleGraph pattern;
    int color = 0;
};

// Canonical kernel: enumerates colorings in lexicographic edge order with
// first-use color numbering, so exactly one representative per color-renaming
// class is visited. EXHAUSTED is therefore a nonexistence proof.
SearchOutcome exists_good_coloring(const SearchProblem& p, const SearchOptions& opts = {});

// Fixed-role kernel: exactly k color slots whose forbidden patterns differ,
// no renaming symmetry (used for asymmetric two-color problems and for inner
// witnesses that avoid a family in one color and a graph in the other).
SearchOutcome find_coloring_fixed_roles(HostShape shape, int m, int n, int k,
                                        const std::vector<Forbid>& forbids,
                                        std::optional<int> rainbow_t,
                                        const SearchOptions& opts = {});

// Sweep/test hook: canonical enumeration, optionally pruned by the rainbow
// detector and by forbidden monochromatic patterns, calling
// leaf(colors, color_count) for every complete coloring. With jobs > 1 the
// callback must be thread-safe.
void enumerate_colorings(HostShape shape, int m, int n, std::optional<int> budget,
                         std::optional<int> prune_rainbow_t,
                         const std::function<void(std::span<const int>, int)>& leaf,
                         const SearchOptions& opts = {},
                         const std::vector<Forbid>& forbids = {});

struct ValueResult {
    std::optional<int> value;  // smallest forcing n, when the sweep settled it
    int n_max = 0;
    std::optional<ColoredHost> witness_at_max;  // good coloring at n_max when value absent
    bool timed_out = false;
    unsigned long long nodes = 0;
    double wall_ms = 0;
};

ValueResult ramsey_k(const SimpleGraph& h, int k, int n_max, const SearchOptions& opts = {});

struct ConstrainedResult {
    ValueResult constrained;          // forcing value against the rainbow path
    std::optional<int> budget_value;  // matching (t-2)-color value when it settled
};

ConstrainedResult constrained_ramsey(const SimpleGraph& h, int t, int n_max,
                                     const SearchOptions& opts = {});

ValueResult two_color_ramsey(const SimpleGraph& g1, const SimpleGraph& g2, int n_max,
                             const SearchOptions& opts = {});

struct BipartiteValueResult {
    ValueResult result;
    std::optional<int> blowup_lower;  // k(t(h)-1)+1 for connected h
};

BipartiteValueResult bipartite_ramsey_k(const SimpleGraph& h, int k, int n_max,
                                        const SearchOptions& opts = {});

ValueResult bipartite_constrained(const SimpleGraph& h, int t, std::optional<int> budget,
                                  int n_max, const SearchOptions& opts = {});

}  // namespace rf
