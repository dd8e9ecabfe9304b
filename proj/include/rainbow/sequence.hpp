#pragma once

#include <span>
#include <utility>
#include <vector>

#include "rainbow/types.hpp"

namespace rainbow {

/// Colour distribution sequence (e_1..e_k) for K_n.
///
/// The n-good condition (sum = C(n,2)) is not enforced here so that
/// candidate sequences can be represented and rejected by is_n_good.
class DistributionSequence {
public:
    DistributionSequence(int n, std::vector<Count> e);

    int n() const { return n_; }
    int k() const { return static_cast<int>(e_.size()); }
    /// 1-based colour access.
    Count operator[](Colour c) const { return e_[c - 1]; }
    std::span<const Count> counts() const { return e_; }
    Count total() const;

    friend bool operator==(const DistributionSequence&, const DistributionSequence&) = default;

private:
    int n_;
    std::vector<Count> e_;
};

bool is_n_good(const DistributionSequence& seq);

/// k - r entries equal to q followed by r entries equal to q + 1, where C(n,2) = qk + r.
DistributionSequence balanced_sequence(int n, int k);

/// Run-length view (value, multiplicity) of a sequence, usable when k is far
/// too large to materialise (tree thresholds need k around 10^13).
struct SequenceProfile {
    std::int64_t n = 0;
    std::vector<std::pair<Count, std::uint64_t>> runs;

    std::uint64_t k() const;
    Count total() const;
    Count max() const;
    bool n_good() const;
};

SequenceProfile profile_of(const DistributionSequence& seq);
SequenceProfile balanced_profile(std::int64_t n, std::uint64_t k);

}  // namespace rainbow
