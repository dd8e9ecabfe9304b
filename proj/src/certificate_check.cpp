#include "rainbow/certificate_check.hpp"

#include <map>

namespace rainbow {

namespace {

CertificateReport fail(std::size_t step, std::string reason, std::optional<Edge> edge = std::nullopt) {
    CertificateReport r;
    r.failing_step = step;
    r.reason = std::move(reason);
    r.edge = edge;
    return r;
}

}  // namespace

CertificateReport verify_certificate(const SplitCertificate& cert, const Colouring& col, const DistributionSequence& seq) {
    if (cert.n != col.n() || cert.n != seq.n())
        throw StructuralMismatch("vertex counts differ: certificate " + std::to_string(cert.n) + ", colouring " +
                                 std::to_string(col.n()) + ", sequence " + std::to_string(seq.n()));
    if (cert.k != col.k() || cert.k != seq.k())
        throw StructuralMismatch("colour counts differ: certificate " + std::to_string(cert.k) + ", colouring " +
                                 std::to_string(col.k()) + ", sequence " + std::to_string(seq.k()));

    std::vector<Count> budget(seq.counts().begin(), seq.counts().end());
    std::map<Vertex, Vertex> active{{1, cert.n}};
    Count coloured = 0;
    for (std::size_t i = 0; i < cert.steps.size(); ++i) {
        const Step& s = cert.steps[i];
        const std::size_t index = i + 1;
        auto it = active.find(s.lo);
        if (it == active.end() || it->second != s.hi)
            return fail(index, "block [" + std::to_string(s.lo) + ".." + std::to_string(s.hi) + "] is not active");
        const int m = s.hi - s.lo + 1;
        if (m < 2) return fail(index, "block of size " + std::to_string(m) + " cannot be split");
        if (s.t < 1 || s.t > m / 2)
            return fail(index, "t = " + std::to_string(s.t) + " outside [1..floor(" + std::to_string(m) + "/2)]");
        if (s.colour < 1 || s.colour > cert.k) return fail(index, "colour " + std::to_string(s.colour) + " outside [1..k]");
        const Count cost = static_cast<Count>(s.t) * static_cast<Count>(m - s.t);
        if (budget[s.colour - 1] < cost)
            return fail(index, "budget violation: colour " + std::to_string(s.colour) + " has " +
                                   std::to_string(budget[s.colour - 1]) + " < t(m-t) = " + std::to_string(cost));
        budget[s.colour - 1] -= cost;
        coloured += cost;
        for (Vertex u = s.lo; u <= s.hi - s.t; ++u)
            for (Vertex v = s.hi - s.t + 1; v <= s.hi; ++v)
                if (col.at(u, v) != s.colour)
                    return fail(index,
                                "edge (" + std::to_string(u) + "," + std::to_string(v) + ") has colour " +
                                    std::to_string(col.at(u, v)) + ", step assigns " + std::to_string(s.colour),
                                Edge{u, v});
        it->second = s.hi - s.t;
        active.emplace(s.hi - s.t + 1, s.hi);
    }
    const std::size_t after = cert.steps.size() + 1;
    if (coloured != choose2(static_cast<Count>(cert.n)))
        return fail(after, "steps colour " + std::to_string(coloured) + " edges, K_n has " +
                               std::to_string(choose2(static_cast<Count>(cert.n))));
    const auto counts = colour_counts(col);
    for (Colour c = 1; c <= cert.k; ++c)
        if (counts[c - 1] != seq[c])
            return fail(after, "colour " + std::to_string(c) + " used " + std::to_string(counts[c - 1]) +
                                   " times, sequence asks " + std::to_string(seq[c]));
    CertificateReport ok;
    ok.ok = true;
    return ok;
}

}  // namespace rainbow
