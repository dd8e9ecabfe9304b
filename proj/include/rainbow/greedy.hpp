#pragma once

#include <optional>

#include "rainbow/sequence.hpp"
#include "rainbow/split.hpp"

namespace rainbow {

enum class GreedyStatus { Certificate, Infeasible, GiveUp };

struct GreedyResult {
    GreedyStatus status = GreedyStatus::GiveUp;
    std::optional<SplitCertificate> certificate;
    std::uint64_t nodes = 0;
};

inline constexpr std::uint64_t kDefaultGreedyBudget = 2'000'000;

/// Depth-first search over standard colouring steps applied to the largest
/// remaining block: simple steps first (colours by decreasing budget), then
/// larger sizes, with memoised dead ends keyed on the sorted block sizes and
/// sorted budgets. Infeasible means the search space was exhausted; GiveUp
/// means the node budget ran out first.
GreedyResult construct_greedy(const DistributionSequence& seq, std::uint64_t node_budget = kDefaultGreedyBudget);

}  // namespace rainbow
