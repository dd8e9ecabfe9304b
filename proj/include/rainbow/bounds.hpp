#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rainbow/colouring.hpp"
#include "rainbow/graph.hpp"
#include "rainbow/sequence.hpp"
#include "rainbow/staged.hpp"

namespace rainbow {

using BigInt = boost::multiprecision::cpp_int;

class RangeError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

enum class CertificateKind { RainbowKmForced, TreeForced, TriangleHardSequence };
const char* to_string(CertificateKind kind);

/// Stored instance of a lower-bound inequality. The margin is a rational
/// margin_num / margin_den: right side minus left side for the clash and tree
/// bounds, and a rigorous lower bound on b^2/3 - 4(a+1) log(n/b) for the
/// triangle bound, where log_error bounds the error of the logarithm.
struct InfeasibilityCertificate {
    CertificateKind kind = CertificateKind::RainbowKmForced;
    std::int64_t k = 0;
    std::int64_t n = 0;
    std::int64_t m = 0;
    std::int64_t a = 0;
    std::int64_t b = 0;
    std::int64_t c = 0;
    BigInt margin_num = 0;
    BigInt margin_den = 1;
    double log_error = 0;
    std::vector<std::pair<Count, std::uint64_t>> runs;  // sequence, for clash and tree
    std::string comment;
};

/// Every colouring with this distribution contains a rainbow K_m when
/// sum C(e_i, 2) < n(n-1)(n-2) / (m(m-1)(m-2)). Requires n >= m >= 3.
std::optional<InfeasibilityCertificate> clash_bound_check(const SequenceProfile& seq, int m);
std::optional<InfeasibilityCertificate> clash_bound_check(const DistributionSequence& seq, int m);

/// Uniform m-subsets drawn from a seeded generator; the first rainbow K_m
/// found is returned as its sorted vertex list.
std::optional<Embedding> sample_rainbow_km(const Colouring& col, int m, std::uint64_t trials, std::uint64_t seed = 1);

struct HardSequence {
    DistributionSequence seq;
    std::int64_t n = 0;
    std::int64_t a = 0;
    std::int64_t b = 0;
    std::int64_t c = 0;
};

/// n = floor(alpha k^1.5 / sqrt(log k)), b = floor(k/2), a and c from the
/// division of C(n,2) - b floor(k/2) by ceil(k/2). Throws RangeError if a < 0.
HardSequence triangle_hard_sequence(int k, const StageConstants& constants = {});

/// Certificate when b^2/3 - 4(a+1) log(n/b) > 0 and the side conditions hold:
/// 5b^2 >= k^2, 4(a+1) <= 5a, a ceil(k/2) <= C(n,2), n <= bk, n >= b+1 and
/// 3(b+1)^2 <= 4b^2.
std::optional<InfeasibilityCertificate> triangle_infeasibility_check(int k, const StageConstants& constants = {});

/// Names of the side conditions that fail for k (empty when all hold).
std::vector<std::string> triangle_failing_conditions(int k, const StageConstants& constants = {});

/// (6m)^(6m). Requires m >= 2.
BigInt tree_threshold(int m);

/// Certificate when max e_i <= C(n,2) / D(m). Requires m >= 2.
std::optional<InfeasibilityCertificate> tree_forced_check(const SequenceProfile& seq, int m);
std::optional<InfeasibilityCertificate> tree_forced_check(const DistributionSequence& seq, int m);

struct GeneralLower {
    DistributionSequence seq;
    int m = 0;
    std::optional<InfeasibilityCertificate> certificate;
};

/// balanced_sequence(floor(k / m^3), k) for m = |V(H)|, with its clash check.
/// Throws RangeError when C(n,2) < k; requires m >= 3.
GeneralLower general_lower_sequence(const TargetGraph& h, int k);

class NotGallai : public std::runtime_error {
public:
    NotGallai(const Embedding& triangle, const std::string& what) : std::runtime_error(what), triangle_(triangle) {}
    const Embedding& triangle() const { return triangle_; }

private:
    Embedding triangle_;
};

class HeuristicFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct PeelRecord {
    int x = 0;  // block size before the peel
    int t = 0;  // size of the peeled part
    std::vector<Colour> base_colours;
    Count base_edges = 0;      // t (x - t)
    Count base_frequency = 0;  // edges of the block coloured with a base colour
};

struct PeelTrace {
    int n = 0;
    int stop = 1;
    std::vector<PeelRecord> records;
    Count total_base_edges = 0;
    int final_size = 0;
};

/// Repeatedly peels the smallest part of a Gallai partition of the current
/// block until at most `stop` vertices remain.
PeelTrace peel_splitting_process(const Colouring& col, int stop = 1);

/// For records whose base colours occupy at most 2(a+1) edges of the block,
/// t <= 4(a+1)/x must hold. Returns the index of the first violating record.
std::optional<std::size_t> peel_claim_violation(const PeelTrace& trace, std::int64_t a);

/// Recomputes the certificate from its own parameters.
bool reverify(const InfeasibilityCertificate& cert, const StageConstants& constants = {});

InfeasibilityCertificate read_bound_certificate(std::istream& in);
void write_bound_certificate(std::ostream& out, const InfeasibilityCertificate& cert);

}  // namespace rainbow
