#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "rainbow/colouring.hpp"
#include "rainbow/sequence.hpp"
#include "rainbow/split.hpp"

namespace rainbow {

/// Raised when certificate, colouring and sequence disagree on n or k.
class StructuralMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct CertificateReport {
    bool ok = false;
    std::optional<std::size_t> failing_step;  // 1-based step index
    std::optional<Edge> edge;                 // first mismatching edge, if any
    std::string reason;
};

/// Replays the certificate from S_0 = {[1..n]} and checks every standard-step
/// precondition, the budgets, the colouring edge for edge and the final counts.
CertificateReport verify_certificate(const SplitCertificate& cert, const Colouring& col, const DistributionSequence& seq);

}  // namespace rainbow
