#include "rainbow/sequence.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace rainbow {

DistributionSequence::DistributionSequence(int n, std::vector<Count> e) : n_(n), e_(std::move(e)) {
    if (n_ < 1) throw std::invalid_argument("sequence needs n >= 1");
    if (e_.empty()) throw std::invalid_argument("sequence needs k >= 1");
}

Count DistributionSequence::total() const { return std::accumulate(e_.begin(), e_.end(), Count{0}); }

bool is_n_good(const DistributionSequence& seq) {
    return seq.total() == choose2(static_cast<Count>(seq.n()));
}

DistributionSequence balanced_sequence(int n, int k) {
    if (n < 1 || k < 1) throw std::invalid_argument("balanced_sequence needs n >= 1 and k >= 1");
    const Count total = choose2(static_cast<Count>(n));
    const Count q = total / static_cast<Count>(k);
    const Count r = total % static_cast<Count>(k);
    std::vector<Count> e(k, q);
    for (Count i = static_cast<Count>(k) - r; i < static_cast<Count>(k); ++i) e[i] = q + 1;
    return DistributionSequence(n, std::move(e));
}

std::uint64_t SequenceProfile::k() const {
    std::uint64_t k = 0;
    for (const auto& [value, mult] : runs) k += mult;
    return k;
}

Count SequenceProfile::total() const {
    Count t = 0;
    for (const auto& [value, mult] : runs) t += value * mult;
    return t;
}

Count SequenceProfile::max() const {
    Count best = 0;
    for (const auto& [value, mult] : runs)
        if (mult > 0) best = std::max(best, value);
    return best;
}

bool SequenceProfile::n_good() const { return n >= 1 && total() == choose2(static_cast<Count>(n)); }

SequenceProfile profile_of(const DistributionSequence& seq) {
    SequenceProfile p;
    p.n = seq.n();
    for (Count v : seq.counts()) {
        if (!p.runs.empty() && p.runs.back().first == v)
            ++p.runs.back().second;
        else
            p.runs.emplace_back(v, 1);
    }
    return p;
}

SequenceProfile balanced_profile(std::int64_t n, std::uint64_t k) {
    if (n < 1 || k < 1) throw std::invalid_argument("balanced_profile needs n >= 1 and k >= 1");
    const Count total = choose2(static_cast<Count>(n));
    SequenceProfile p;
    p.n = n;
    const Count q = total / k;
    const Count r = total % k;
    if (k - r > 0) p.runs.emplace_back(q, k - r);
    if (r > 0) p.runs.emplace_back(q + 1, r);
    return p;
}

}  // namespace rainbow
