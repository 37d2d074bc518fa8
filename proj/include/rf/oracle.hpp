#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "rf/graph.hpp"
#include "rf/table.hpp"

namespace rf {

// One evaluated closed-form bound. Parametric rules carry the expression and
// leave the value empty; rules starved of a table entry are marked unknown.
struct BoundEntry {
    std::string rule;
    std::string target;
    char direction = 'L';  // 'L' lower, 'U' upper, 'E' equality
    std::optional<long long> value;
    std::string expression;
    nlohmann::ordered_json inputs;
    bool unknown = false;
};

struct BoundReport {
    SimpleGraph graph;
    std::vector<BoundEntry> entries;
};

BoundReport formula_bounds(const SimpleGraph& h, const KnownValuesTable& table);

enum class Verdict { Applies, Not, Unknown };

struct TheoremVerdict {
    std::string id;
    Verdict verdict = Verdict::Unknown;
    std::string conclusion;  // what holds when the verdict is Applies
    nlohmann::ordered_json trace;
};

struct ApplicabilityReport {
    SimpleGraph graph;
    std::vector<TheoremVerdict> verdicts;
};

ApplicabilityReport applicability_report(const SimpleGraph& h, const KnownValuesTable& table);

// joint proper-coloring size vector for a list of connected graphs, with the
// color budget max{count, max chromatic number, 3}
TheoremVerdict homological_certificate(std::span<const SimpleGraph> graphs);

}  // namespace rf
