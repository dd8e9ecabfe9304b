#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rainbow/bounds.hpp"
#include "rainbow/colouring.hpp"
#include "rainbow/graph.hpp"
#include "rainbow/greedy.hpp"
#include "rainbow/mindeg3.hpp"
#include "rainbow/oracle.hpp"
#include "rainbow/sequence.hpp"
#include "rainbow/split.hpp"
#include "rainbow/staged.hpp"

namespace rainbow {

enum class Strategy { Auto, Staged, Greedy, Mindeg3 };
const char* to_string(Strategy s);
Strategy parse_strategy(const std::string& s);

enum class ConstructStatus { Constructed, Infeasible, NotConstructed, GaveUp };
const char* to_string(ConstructStatus s);

struct ConstructOptions {
    StageConstants constants;
    std::uint64_t greedy_budget = kDefaultGreedyBudget;
    std::uint64_t search_budget = 50'000'000;  // rainbow searches on tree candidates
    int oracle_max_n = 7;                      // exhaustive fallback up to this n
    OracleOptions oracle;
};

struct ConstructionOutcome {
    ConstructStatus status = ConstructStatus::NotConstructed;
    std::optional<Colouring> colouring;
    std::optional<SplitCertificate> certificate;  // for standard colourings
    std::vector<Peel> peels;                      // for the min-degree-3 construction
    std::string method;
    std::vector<std::string> reasons;
    std::optional<InfeasibilityCertificate> infeasibility;
    std::optional<Embedding> witness;  // rainbow copy found in a rejected candidate
};

/// Chooses a construction by the degeneracy of H: min-degree-3 peeling for
/// degeneracy >= 3 (n >= 2k), standard colourings for degeneracy 2, and
/// checked candidates for forests. Lower-bound checks run first where they apply.
ConstructionOutcome construct(const TargetGraph& h, const DistributionSequence& seq, Strategy strategy = Strategy::Auto,
                              const ConstructOptions& options = {});

}  // namespace rainbow
