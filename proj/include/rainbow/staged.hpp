#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "rainbow/sequence.hpp"
#include "rainbow/split.hpp"

namespace rainbow {

/// Constants of the staged construction and of the hard triangle sequence.
/// Logarithms are natural everywhere.
struct StageConstants {
    std::int64_t alpha_num = 1;  // alpha = alpha_num / alpha_den
    std::int64_t alpha_den = 10;
    double beta = 5'000'000.0;
};

/// Concrete stage parameters for a given (n, k), after desk-scale clamping.
struct StagePlan {
    long double r_raw = 0;      // beta k^0.5 / (30 (log k)^0.5)
    int r = 1;                  // reservoir block size actually used
    long double c_raw = 0;      // k^0.75 / (log k)^0.75
    int c = 1;                  // fixed block size for the large-colour case
    int c_count = 0;            // ceil(k^0.75 (log k)^0.25)
    long double large_colour_threshold = 0;  // beta^2 k^2.25 / (log k)^1.25
    long double small_colour_threshold = 0;  // beta^2 k^2 / (30 log k)
    long double stop_threshold = 0;          // 2 sqrt(beta) k^1.25 / (log k)^0.25
    std::vector<std::string> clamps;
};

/// Requires k >= 2 (log k > 0) and n >= 1.
StagePlan plan_stages(int n, int k, const StageConstants& constants);

class StagedInfeasible : public std::runtime_error {
public:
    StagedInfeasible(int stage, const std::string& inequality)
        : std::runtime_error("stage " + std::to_string(stage) + ": " + inequality), stage_(stage), inequality_(inequality) {}
    int stage() const { return stage_; }
    const std::string& inequality() const { return inequality_; }

private:
    int stage_;
    std::string inequality_;
};

/// Three-stage standard colouring: a reservoir of k blocks of size r, a
/// cushion collection (fixed size-c steps when large colours carry a tenth
/// of the edges, otherwise greedy maximal steps after exhausting the large
/// and small colours), then reduce/drain of everything left.
/// Throws StagedInfeasible naming the stage and inequality that failed.
SplitCertificate construct_staged(const DistributionSequence& seq, const StageConstants& constants = {});

}  // namespace rainbow
