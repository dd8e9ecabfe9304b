#include "rainbow/bounds.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cstdio>
#include <istream>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>

#include "rainbow/gallai.hpp"
#include "rainbow/io.hpp"
#include "rainbow/search.hpp"

namespace rainbow {

namespace {

using Float = boost::multiprecision::cpp_bin_float_50;

constexpr double kLogError = 1e-40;
const BigInt kMarginScale = boost::multiprecision::pow(BigInt(10), 30);

BigInt big_choose2(std::int64_t n) { return n < 2 ? BigInt(0) : BigInt(n) * BigInt(n - 1) / 2; }

void require_good(const SequenceProfile& seq) {
    if (!seq.n_good()) throw std::invalid_argument("sequence is not n-good");
}

std::string to_str(const BigInt& x) { return x.str(); }

bool same_ratio(const BigInt& an, const BigInt& ad, const BigInt& bn, const BigInt& bd) { return an * bd == bn * ad; }

struct TriangleEval {
    HardSequence hard;
    std::vector<std::string> failing;
    BigInt margin_num;
    std::string comment;
};

TriangleEval evaluate_triangle(int k, const StageConstants& constants) {
    TriangleEval ev{triangle_hard_sequence(k, constants), {}, 0, {}};
    const auto& h = ev.hard;
    const BigInt K = k, n = h.n, a = h.a, b = h.b;
    const BigInt edges = big_choose2(h.n);
    const BigInt half_up = (k + 1) / 2;
    if (5 * b * b < K * K) ev.failing.push_back("5b^2 >= k^2");
    if (4 * (a + 1) > 5 * a) ev.failing.push_back("4(a+1) <= 5a");
    if (a * half_up > edges) ev.failing.push_back("a ceil(k/2) <= C(n,2)");
    if (n > b * K) ev.failing.push_back("n <= bk");
    if (n < b + 1) ev.failing.push_back("n >= b+1");
    if (3 * (b + 1) * (b + 1) > 4 * b * b) ev.failing.push_back("3(b+1)^2 <= 4b^2");

    // Lower bound on the margin: the logarithm is rounded up by kLogError.
    const Float log_ratio = boost::multiprecision::log(Float(h.n) / Float(h.b)) + Float(kLogError);
    const Float margin = Float(h.b) * Float(h.b) / 3 - 4 * Float(h.a + 1) * log_ratio;
    ev.margin_num = static_cast<BigInt>(boost::multiprecision::floor(margin * Float(kMarginScale)));
    if (ev.margin_num <= 0) ev.failing.push_back("b^2/3 - 4(a+1) log(n/b) > 0");
    std::ostringstream c;
    c << "b^2/3 - 4(a+1) log(n/b) >= " << margin.str(12) << " > 0 with n=" << h.n << " a=" << h.a << " b=" << h.b;
    ev.comment = c.str();
    return ev;
}

}  // namespace

const char* to_string(CertificateKind kind) {
    switch (kind) {
        case CertificateKind::RainbowKmForced: return "RainbowKmForced";
        case CertificateKind::TreeForced: return "TreeForced";
        case CertificateKind::TriangleHardSequence: return "TriangleHardSequence";
    }
    return "?";
}

std::optional<InfeasibilityCertificate> clash_bound_check(const SequenceProfile& seq, int m) {
    if (m < 3 || seq.n < m) throw std::invalid_argument("clash bound needs n >= m >= 3");
    require_good(seq);
    BigInt clashes = 0;
    for (const auto& [value, mult] : seq.runs) clashes += BigInt(choose2(value)) * mult;
    const BigInt n = seq.n;
    const BigInt den = BigInt(m) * (m - 1) * (m - 2);
    const BigInt num = n * (n - 1) * (n - 2) - den * clashes;
    if (num <= 0) return std::nullopt;
    InfeasibilityCertificate cert;
    cert.kind = CertificateKind::RainbowKmForced;
    cert.k = static_cast<std::int64_t>(seq.k());
    cert.n = seq.n;
    cert.m = m;
    cert.margin_num = num;
    cert.margin_den = den;
    cert.runs = seq.runs;
    cert.comment = "sum C(e_i,2) = " + to_str(clashes) + " < n(n-1)(n-2)/(m(m-1)(m-2)) = " +
                   to_str(n * (n - 1) * (n - 2)) + "/" + to_str(den);
    return cert;
}

std::optional<InfeasibilityCertificate> clash_bound_check(const DistributionSequence& seq, int m) {
    return clash_bound_check(profile_of(seq), m);
}

std::optional<Embedding> sample_rainbow_km(const Colouring& col, int m, std::uint64_t trials, std::uint64_t seed) {
    if (m < 1 || m > col.n()) throw std::invalid_argument("sample_rainbow_km needs 1 <= m <= n");
    std::mt19937_64 rng(seed);
    std::vector<Vertex> all(col.n());
    std::iota(all.begin(), all.end(), 1);
    std::vector<Vertex> pick;
    std::vector<char> seen(col.k() + 1);
    for (std::uint64_t trial = 0; trial < trials; ++trial) {
        pick.clear();
        std::sample(all.begin(), all.end(), std::back_inserter(pick), m, rng);
        std::fill(seen.begin(), seen.end(), 0);
        bool rainbow = true;
        for (int i = 0; i < m && rainbow; ++i)
            for (int j = i + 1; j < m && rainbow; ++j) {
                const Colour c = col.at(pick[i], pick[j]);
                if (c == kNoColour || seen[c]) rainbow = false;
                else seen[c] = 1;
            }
        if (rainbow) return Embedding{pick};
    }
    return std::nullopt;
}

HardSequence triangle_hard_sequence(int k, const StageConstants& constants) {
    if (k < 2) throw RangeError("k = " + std::to_string(k) + " < 2: log k must be positive");
    const Float kf = k;
    const Float alpha = Float(constants.alpha_num) / Float(constants.alpha_den);
    const Float nf = alpha * kf * boost::multiprecision::sqrt(kf) / boost::multiprecision::sqrt(boost::multiprecision::log(kf));
    const std::int64_t n = static_cast<std::int64_t>(boost::multiprecision::floor(nf));
    const std::int64_t half_down = k / 2;
    const std::int64_t half_up = (k + 1) / 2;
    const std::int64_t b = half_down;
    const std::int64_t rest = static_cast<std::int64_t>(choose2(static_cast<Count>(std::max<std::int64_t>(n, 0)))) - b * half_down;
    if (rest < 0)
        throw RangeError("a < 0 for k = " + std::to_string(k) + ": C(n,2) = " +
                         std::to_string(choose2(static_cast<Count>(std::max<std::int64_t>(n, 0)))) +
                         " < b floor(k/2) = " + std::to_string(b * half_down) + " (n = " + std::to_string(n) + ")");
    const std::int64_t a = rest / half_up;
    const std::int64_t c = rest - a * half_up;
    std::vector<Count> e;
    e.reserve(k);
    for (std::int64_t i = 0; i < half_up; ++i) e.push_back(static_cast<Count>(i < c ? a + 1 : a));
    for (std::int64_t i = 0; i < half_down; ++i) e.push_back(static_cast<Count>(b));
    DistributionSequence seq(static_cast<int>(n), std::move(e));
    if (!is_n_good(seq)) throw std::logic_error("hard sequence is not n-good");
    return {std::move(seq), n, a, b, c};
}

std::vector<std::string> triangle_failing_conditions(int k, const StageConstants& constants) {
    return evaluate_triangle(k, constants).failing;
}

std::optional<InfeasibilityCertificate> triangle_infeasibility_check(int k, const StageConstants& constants) {
    TriangleEval ev = evaluate_triangle(k, constants);
    if (!ev.failing.empty()) return std::nullopt;
    InfeasibilityCertificate cert;
    cert.kind = CertificateKind::TriangleHardSequence;
    cert.k = k;
    cert.n = ev.hard.n;
    cert.m = 3;
    cert.a = ev.hard.a;
    cert.b = ev.hard.b;
    cert.c = ev.hard.c;
    cert.margin_num = ev.margin_num;
    cert.margin_den = kMarginScale;
    cert.log_error = kLogError;
    cert.comment = ev.comment;
    return cert;
}

BigInt tree_threshold(int m) {
    if (m < 2) throw std::invalid_argument("tree threshold needs m >= 2");
    return boost::multiprecision::pow(BigInt(6 * m), static_cast<unsigned>(6 * m));
}

std::optional<InfeasibilityCertificate> tree_forced_check(const SequenceProfile& seq, int m) {
    require_good(seq);
    const BigInt d = tree_threshold(m);
    const BigInt edges = big_choose2(seq.n);
    const BigInt slack = edges - BigInt(seq.max()) * d;
    if (slack < 0) return std::nullopt;
    InfeasibilityCertificate cert;
    cert.kind = CertificateKind::TreeForced;
    cert.k = static_cast<std::int64_t>(seq.k());
    cert.n = seq.n;
    cert.m = m;
    cert.margin_num = slack;
    cert.margin_den = d;
    cert.runs = seq.runs;
    cert.comment = "max e_i = " + std::to_string(seq.max()) + " <= C(n,2)/(6m)^(6m) = " + to_str(edges) + "/" + to_str(d);
    return cert;
}

std::optional<InfeasibilityCertificate> tree_forced_check(const DistributionSequence& seq, int m) {
    return tree_forced_check(profile_of(seq), m);
}

GeneralLower general_lower_sequence(const TargetGraph& h, int k) {
    const int m = h.vertex_count();
    if (m < 3) throw std::invalid_argument("general lower bound needs m >= 3");
    const int n = k / (m * m * m);
    if (choose2(static_cast<Count>(n)) < static_cast<Count>(k))
        throw RangeError("C(n,2) = " + std::to_string(choose2(static_cast<Count>(n))) + " < k = " + std::to_string(k) +
                         " for n = floor(k/m^3) = " + std::to_string(n));
    DistributionSequence seq = balanced_sequence(n, k);
    auto cert = clash_bound_check(seq, m);
    return {std::move(seq), m, std::move(cert)};
}

PeelTrace peel_splitting_process(const Colouring& col, int stop) {
    if (stop < 1) throw std::invalid_argument("stop must be >= 1");
    if (auto tri = find_rainbow_triangle(col)) throw NotGallai(*tri, "rainbow triangle " + format_triangle(*tri));
    PeelTrace trace;
    trace.n = col.n();
    trace.stop = stop;
    std::vector<Vertex> current(col.n());
    std::iota(current.begin(), current.end(), 1);
    while (static_cast<int>(current.size()) > stop && current.size() >= 2) {
        const Colouring block = col.induced(current);
        const GallaiResult found = find_gallai_partition(block);
        if (found.status != GallaiStatus::Found)
            throw HeuristicFailure("no Gallai partition for a block of size " + std::to_string(current.size()));
        const GallaiPartition& p = *found.partition;
        const auto smallest = std::min_element(p.parts.begin(), p.parts.end(),
                                               [](const auto& x, const auto& y) { return x.size() < y.size(); });
        PeelRecord rec;
        rec.x = static_cast<int>(current.size());
        rec.t = static_cast<int>(smallest->size());
        rec.base_colours = p.base_colours;
        rec.base_edges = static_cast<Count>(rec.t) * static_cast<Count>(rec.x - rec.t);
        const auto counts = colour_counts(block);
        for (Colour c : p.base_colours) rec.base_frequency += counts[c - 1];

        std::vector<char> drop(current.size(), 0);
        for (Vertex v : *smallest) drop[v - 1] = 1;
        std::vector<Vertex> next;
        next.reserve(current.size() - smallest->size());
        for (std::size_t i = 0; i < current.size(); ++i)
            if (!drop[i]) next.push_back(current[i]);
        current = std::move(next);
        trace.total_base_edges += rec.base_edges;
        trace.records.push_back(std::move(rec));
    }
    trace.final_size = static_cast<int>(current.size());
    return trace;
}

std::optional<std::size_t> peel_claim_violation(const PeelTrace& trace, std::int64_t a) {
    const BigInt cap = 2 * BigInt(a + 1);
    for (std::size_t i = 0; i < trace.records.size(); ++i) {
        const PeelRecord& r = trace.records[i];
        if (BigInt(r.base_frequency) > cap) continue;
        if (BigInt(r.t) * r.x > 2 * cap) return i;
    }
    return std::nullopt;
}

bool reverify(const InfeasibilityCertificate& cert, const StageConstants& constants) {
    try {
        std::optional<InfeasibilityCertificate> fresh;
        switch (cert.kind) {
            case CertificateKind::TriangleHardSequence:
                if (cert.k > 1'000'000'000) return false;
                fresh = triangle_infeasibility_check(static_cast<int>(cert.k), constants);
                if (!fresh || fresh->n != cert.n || fresh->a != cert.a || fresh->b != cert.b || fresh->c != cert.c)
                    return false;
                break;
            case CertificateKind::RainbowKmForced:
            case CertificateKind::TreeForced: {
                SequenceProfile profile{cert.n, cert.runs};
                if (profile.k() != static_cast<std::uint64_t>(cert.k) || cert.m > 1'000'000) return false;
                const int m = static_cast<int>(cert.m);
                fresh = cert.kind == CertificateKind::TreeForced ? tree_forced_check(profile, m) : clash_bound_check(profile, m);
                if (!fresh) return false;
                break;
            }
        }
        return cert.margin_den > 0 && same_ratio(cert.margin_num, cert.margin_den, fresh->margin_num, fresh->margin_den);
    } catch (const std::exception&) {
        return false;
    }
}

void write_bound_certificate(std::ostream& out, const InfeasibilityCertificate& cert) {
    char err[32];
    std::snprintf(err, sizeof err, "%.17g", cert.log_error);
    out << to_string(cert.kind) << ' ' << cert.k << ' ' << cert.n << ' ' << cert.m << ' ' << cert.a << ' ' << cert.b << ' '
        << cert.c << ' ' << cert.margin_num << ' ' << cert.margin_den << ' ' << err << '\n';
    if (!cert.comment.empty()) out << "# " << cert.comment << '\n';
    if (!cert.runs.empty()) {
        out << "RUNS";
        for (const auto& [value, mult] : cert.runs) out << ' ' << value << ':' << mult;
        out << '\n';
    }
}

InfeasibilityCertificate read_bound_certificate(std::istream& in) {
    InfeasibilityCertificate cert;
    bool header = false;
    std::string line;
    while (std::getline(in, line)) {
        const auto start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos) continue;
        if (line[start] == '#') {
            const auto body = line.find_first_not_of(" \t", start + 1);
            if (header && cert.comment.empty() && body != std::string::npos) cert.comment = line.substr(body);
            continue;
        }
        std::istringstream ls(line);
        std::string kind;
        ls >> kind;
        if (!header) {
            if (kind == "RainbowKmForced") cert.kind = CertificateKind::RainbowKmForced;
            else if (kind == "TreeForced") cert.kind = CertificateKind::TreeForced;
            else if (kind == "TriangleHardSequence") cert.kind = CertificateKind::TriangleHardSequence;
            else throw ParseError("unknown certificate kind '" + kind + "'");
            std::string num, den;
            if (!(ls >> cert.k >> cert.n >> cert.m >> cert.a >> cert.b >> cert.c >> num >> den >> cert.log_error))
                throw ParseError("certificate line needs: KIND k n m a b c margin_num margin_den log_error");
            try {
                cert.margin_num = BigInt(num);
                cert.margin_den = BigInt(den);
            } catch (const std::exception&) {
                throw ParseError("bad margin '" + num + "/" + den + "'");
            }
            header = true;
        } else if (kind == "RUNS") {
            std::string run;
            while (ls >> run) {
                const auto colon = run.find(':');
                if (colon == std::string::npos) throw ParseError("bad run '" + run + "'");
                try {
                    cert.runs.emplace_back(std::stoull(run.substr(0, colon)), std::stoull(run.substr(colon + 1)));
                } catch (const std::exception&) {
                    throw ParseError("bad run '" + run + "'");
                }
            }
        } else {
            throw ParseError("unexpected line '" + line + "'");
        }
    }
    if (!header) throw ParseError("empty certificate");
    return cert;
}

}  // namespace rainbow
