// Command-line front end. Exit codes: 0 success, 1 usage or input error,
// 2 proven negative, 3 inconclusive.

#include <omp.h>

#include <CLI11.hpp>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "rainbow/bounds.hpp"
#include "rainbow/certificate_check.hpp"
#include "rainbow/construct.hpp"
#include "rainbow/io.hpp"
#include "rainbow/oracle.hpp"
#include "rainbow/search.hpp"

using namespace rainbow;

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kNegative = 2;
constexpr int kInconclusive = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

TargetGraph parse_target(const std::string& spec) {
    if (spec.rfind("builtin:", 0) == 0) return TargetGraph::builtin(spec.substr(8)).with_name(spec.substr(8));
    return load_target(spec).with_name(std::filesystem::path(spec).stem().string());
}

// "balanced", a sequence file, or the counts inline ("1 1 1").
DistributionSequence parse_sequence(const std::string& spec, int n, int k) {
    if (spec == "balanced") {
        if (n < 1) throw UsageError("--seq balanced needs --n");
        if (k < 1) throw UsageError("--seq balanced needs --k >= 1");
        return balanced_sequence(n, k);
    }
    if (std::filesystem::exists(spec)) {
        DistributionSequence seq = load_sequence(spec);
        if (n > 0 && seq.n() != n) throw UsageError("--n disagrees with the sequence file");
        return seq;
    }
    if (n < 1) throw UsageError("inline --seq needs --n");
    std::istringstream in(spec);
    std::vector<Count> e;
    std::string tok;
    while (in >> tok) {
        try {
            std::size_t used = 0;
            const unsigned long long v = std::stoull(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            e.push_back(v);
        } catch (const std::exception&) {
            throw UsageError("--seq: '" + spec + "' is neither a file, 'balanced', nor a list of counts");
        }
    }
    if (e.empty()) throw UsageError("--seq is empty");
    return DistributionSequence(n, std::move(e));
}

template <class Writer>
void write_file(const std::string& path, Writer&& write) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    write(out);
}

SplitCertificate metadata_certificate(const ConstructionOutcome& o, const DistributionSequence& seq) {
    SplitCertificate cert;
    cert.n = seq.n();
    cert.k = seq.k();
    cert.metadata.push_back("strategy " + o.method);
    for (const Peel& p : o.peels)
        cert.metadata.push_back("peel x=" + std::to_string(p.x) + " t=" + std::to_string(p.t) + " minor=" +
                                std::to_string(p.minor) + " major=" + std::to_string(p.major) +
                                " minor_edges=" + std::to_string(p.minor_edges));
    return cert;
}

// Peeled vertices of a min-degree-3 certificate must each see at most two colours.
std::optional<std::string> check_peels(const SplitCertificate& cert, const Colouring& col) {
    for (const auto& line : cert.metadata) {
        int x = 0, t = 0;
        if (std::sscanf(line.c_str(), "peel x=%d t=%d", &x, &t) != 2) continue;
        if (x > col.n() || t < 1 || t > x) return "peel record out of range: " + line;
        for (Vertex v = x - t + 1; v <= x; ++v) {
            int seen = 0;
            std::vector<char> mark(col.k() + 1, 0);
            for (Vertex u = 1; u <= x; ++u)
                if (u != v && !mark[col.at(u, v)]) {
                    mark[col.at(u, v)] = 1;
                    ++seen;
                }
            if (seen > 2) return "peeled vertex " + std::to_string(v) + " sees " + std::to_string(seen) + " colours";
        }
    }
    return std::nullopt;
}

bool is_standard(const SplitCertificate& cert) {
    for (const auto& line : cert.metadata)
        if (line == "strategy staged" || line == "strategy greedy") return true;
    return !cert.steps.empty();
}

int cmd_construct(const std::string& target, int n, int k, const std::string& seq_spec, const std::string& out_path,
                  const std::string& cert_path, const std::string& strategy, std::uint64_t budget) {
    const TargetGraph h = parse_target(target);
    const DistributionSequence seq = parse_sequence(seq_spec, n, k);
    if (!is_n_good(seq)) throw UsageError("sequence is not n-good: sum must be C(n,2) = " + std::to_string(choose2(seq.n())));
    ConstructOptions options;
    options.greedy_budget = budget;
    const ConstructionOutcome o = construct(h, seq, parse_strategy(strategy), options);
    for (const auto& r : o.reasons) std::cerr << r << '\n';
    std::cout << "STATUS " << to_string(o.status) << (o.method.empty() ? "" : " method=" + o.method) << '\n';
    switch (o.status) {
        case ConstructStatus::Constructed: {
            if (!out_path.empty()) write_file(out_path, [&](std::ostream& os) { write_colouring(os, *o.colouring); });
            else write_colouring(std::cout, *o.colouring);
            if (!cert_path.empty()) {
                const SplitCertificate cert = o.certificate ? *o.certificate : metadata_certificate(o, seq);
                write_file(cert_path, [&](std::ostream& os) { write_certificate(os, cert); });
            }
            return kOk;
        }
        case ConstructStatus::Infeasible:
            if (o.infeasibility) {
                std::cerr << "infeasible: " << to_string(o.infeasibility->kind) << '\n';
                if (!cert_path.empty())
                    write_file(cert_path, [&](std::ostream& os) { write_bound_certificate(os, *o.infeasibility); });
            } else {
                std::cerr << "infeasible: " << o.method << '\n';
            }
            return kNegative;
        case ConstructStatus::NotConstructed:
            if (o.witness) std::cout << format_embedding(*o.witness) << '\n';
            return kInconclusive;
        case ConstructStatus::GaveUp:
            return kInconclusive;
    }
    return kInconclusive;
}

int cmd_verify(const std::string& col_path, const std::string& target, const std::string& cert_path,
               const std::string& seq_spec, std::uint64_t budget, std::uint64_t trials, std::uint64_t seed) {
    const Colouring col = load_colouring(col_path);
    const TargetGraph h = parse_target(target);
    if (!col.complete()) {
        std::cout << "INCOMPLETE colouring has uncoloured edges\n";
        return kNegative;
    }
    bool ok = true;
    std::optional<DistributionSequence> seq;
    if (!seq_spec.empty()) {
        seq = parse_sequence(seq_spec, col.n(), col.k());
        const auto counts = colour_counts(col);
        if (seq->n() != col.n() || seq->k() != col.k() ||
            !std::equal(counts.begin(), counts.end(), seq->counts().begin())) {
            std::cout << "COUNTS mismatch with the sequence\n";
            ok = false;
        } else {
            std::cout << "COUNTS ok\n";
        }
    }
    if (!cert_path.empty()) {
        const SplitCertificate cert = load_certificate(cert_path);
        if (is_standard(cert)) {
            const DistributionSequence against =
                seq ? *seq : DistributionSequence(col.n(), colour_counts(col));
            const CertificateReport rep = verify_certificate(cert, col, against);
            if (rep.ok) {
                std::cout << "CERTIFICATE ok\n";
            } else {
                std::cout << "CERTIFICATE FAIL step " << rep.failing_step.value_or(0) << ": " << rep.reason << '\n';
                if (rep.edge) std::cout << "EDGE " << rep.edge->u << ' ' << rep.edge->v << '\n';
                ok = false;
            }
        } else if (auto bad = check_peels(cert, col)) {
            std::cout << "CERTIFICATE FAIL " << *bad << '\n';
            ok = false;
        } else {
            std::cout << "CERTIFICATE ok (metadata only)\n";
        }
    }
    const bool triangle = h.vertex_count() == 3 && h.edge_count() == 3;
    if (trials > 0 && h.edge_count() == choose2(h.vertex_count()) && h.vertex_count() <= col.n()) {
        if (auto hit = sample_rainbow_km(col, h.vertex_count(), trials, seed)) {
            std::cout << format_embedding(*hit) << '\n';
            return kNegative;
        }
    }
    if (triangle) {
        if (auto tri = find_rainbow_triangle(col)) {
            std::cout << format_triangle(*tri) << '\n';
            return kNegative;
        }
        std::cout << "RAINBOW none\n";
    } else {
        const SearchResult r = find_rainbow_subgraph(col, h, budget);
        if (r.status == SearchStatus::Found) {
            std::cout << format_embedding(*r.witness) << '\n';
            return kNegative;
        }
        if (r.status == SearchStatus::Inconclusive) {
            std::cout << "RAINBOW inconclusive after " << r.nodes << " nodes\n";
            return ok ? kInconclusive : kNegative;
        }
        std::cout << "RAINBOW none\n";
    }
    return ok ? kOk : kNegative;
}

int cmd_certify(const std::string& kind, int k, int m, int n, const std::string& seq_spec, const std::string& target,
                const std::string& col_path, int stop, const std::string& out_path, const std::string& check_path) {
    if (!check_path.empty()) {
        std::ifstream in(check_path);
        if (!in) throw std::runtime_error("cannot read " + check_path);
        const InfeasibilityCertificate cert = read_bound_certificate(in);
        const bool good = reverify(cert);
        std::cout << (good ? "REVERIFIED " : "REJECTED ") << to_string(cert.kind) << '\n';
        return good ? kOk : kNegative;
    }
    std::optional<InfeasibilityCertificate> cert;
    try {
        if (kind == "triangle") {
            if (k < 1) throw UsageError("--kind triangle needs --k");
            cert = triangle_infeasibility_check(k);
            if (!cert)
                for (const auto& f : triangle_failing_conditions(k)) std::cerr << "fails: " << f << '\n';
        } else if (kind == "clash" || kind == "tree") {
            if (seq_spec.empty()) throw UsageError("--kind " + kind + " needs --seq");
            const DistributionSequence seq = parse_sequence(seq_spec, n, k);
            if (!is_n_good(seq)) throw UsageError("sequence is not n-good");
            cert = kind == "clash" ? clash_bound_check(seq, m < 0 ? 3 : m) : tree_forced_check(seq, m < 0 ? 2 : m);
        } else if (kind == "general") {
            if (k < 1) throw UsageError("--kind general needs --k");
            const GeneralLower g = general_lower_sequence(parse_target(target), k);
            std::cerr << "n = " << g.seq.n() << " for m = " << g.m << '\n';
            cert = g.certificate;
        } else if (kind == "peel") {
            if (col_path.empty()) throw UsageError("--kind peel needs --colouring");
            const PeelTrace trace = peel_splitting_process(load_colouring(col_path), stop);
            for (const PeelRecord& r : trace.records) {
                std::cout << "PEEL x=" << r.x << " t=" << r.t << " base=";
                for (std::size_t i = 0; i < r.base_colours.size(); ++i) std::cout << (i ? "," : "") << r.base_colours[i];
                std::cout << " edges=" << r.base_edges << " frequency=" << r.base_frequency << '\n';
            }
            std::cout << "TOTAL " << trace.total_base_edges << " final=" << trace.final_size << '\n';
            return kOk;
        } else {
            throw UsageError("unknown --kind '" + kind + "'");
        }
    } catch (const RangeError& e) {
        std::cerr << "range error: " << e.what() << '\n';
        return kNegative;
    } catch (const NotGallai& e) {
        std::cout << format_triangle(e.triangle()) << '\n';
        return kNegative;
    } catch (const HeuristicFailure& e) {
        std::cerr << e.what() << '\n';
        return kInconclusive;
    }
    if (!cert) {
        std::cerr << "no certificate follows from the check\n";
        return kNegative;
    }
    if (!out_path.empty()) write_file(out_path, [&](std::ostream& os) { write_bound_certificate(os, *cert); });
    else write_bound_certificate(std::cout, *cert);
    return kOk;
}

int cmd_oracle(const std::string& target, int n, int k, const std::string& seq_spec, const std::string& out_path,
               std::uint64_t budget) {
    const TargetGraph h = parse_target(target);
    const DistributionSequence seq = parse_sequence(seq_spec, n, k);
    if (!is_n_good(seq)) throw UsageError("sequence is not n-good");
    OracleOptions opts;
    opts.node_budget = budget;
    const OracleResult r = is_realizable(seq, h, opts);
    std::cout << to_string(r.verdict) << " nodes=" << r.nodes << '\n';
    if (r.witness) {
        if (!out_path.empty()) write_file(out_path, [&](std::ostream& os) { write_colouring(os, *r.witness); });
        else write_colouring(std::cout, *r.witness);
    }
    switch (r.verdict) {
        case Verdict::Realizable: return kOk;
        case Verdict::Unrealizable: return kNegative;
        case Verdict::Inconclusive: return kInconclusive;
    }
    return kInconclusive;
}

int cmd_sweep(const std::string& target, int k, int n_max, std::uint64_t budget, const std::string& out_path,
              const std::string& report_path) {
    if (k < 1 || n_max < 2) throw UsageError("sweep needs --k >= 1 and --n-max >= 2");
    const TargetGraph h = parse_target(target);
    ExactGOptions opts;
    opts.total_budget = budget;
    opts.oracle.node_budget = budget;
    const GReport report = exact_g(h, k, n_max, opts);
    if (!out_path.empty()) write_file(out_path, [&](std::ostream& os) { write_table(os, report); });
    else write_table(std::cout, report);

    std::size_t conflicts = 0;
    std::ostringstream agreement;
    for (const TableSection& s : report.sections)
        for (const TableRow& row : s.rows) {
            if (row.verdict == Verdict::Inconclusive) continue;
            const DistributionSequence seq(s.n, row.e);
            std::string note;
            if (h.degeneracy() >= 2 && construct_greedy(seq).status == GreedyStatus::Certificate &&
                row.verdict != Verdict::Realizable)
                note = "greedy certificate but oracle says unrealizable";
            const int m = h.vertex_count();
            if (m >= 3 && m <= s.n && h.edge_count() == choose2(m) && clash_bound_check(seq, m) &&
                row.verdict != Verdict::Unrealizable)
                note = "clash bound but oracle says realizable";
            agreement << "n=" << s.n << " e=";
            for (std::size_t i = 0; i < row.e.size(); ++i) agreement << (i ? "," : "") << row.e[i];
            agreement << ' ' << to_string(row.verdict) << ' ' << (note.empty() ? "AGREE" : "CONFLICT " + note) << '\n';
            if (!note.empty()) ++conflicts;
        }
    if (!report_path.empty()) write_file(report_path, [&](std::ostream& os) { os << agreement.str(); });
    if (report.partial) std::cout << "PARTIAL\n";
    if (report.least_all_realizable)
        std::cout << "all sequences realizable for n in [" << *report.least_all_realizable << ", " << n_max << "]\n";
    else if (!report.partial)
        std::cout << "some sequence at n = " << n_max << " is not realizable\n";
    std::cout << "conflicts " << conflicts << '\n';
    if (conflicts > 0) return kNegative;
    return report.partial ? kInconclusive : kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Rainbow-H-free colourings of complete graphs"};
    app.require_subcommand(1);
    std::uint64_t seed = 1;
    int jobs = 0;
    app.add_option("--seed", seed, "Seed for randomized sampling");
    app.add_option("--jobs", jobs, "OpenMP threads (0 = runtime default)");

    std::string target = "builtin:K3", seq_spec, out_path, cert_path, strategy = "auto", col_path, kind, check_path,
                report_path;
    int n = 0, k = 0, m = -1, n_max = 0, stop = 1;
    std::uint64_t budget = 50'000'000, trials = 0;

    auto* construct_cmd = app.add_subcommand("construct", "Build a rainbow-H-free colouring");
    construct_cmd->add_option("--target", target, "Graph file or builtin:NAME");
    construct_cmd->add_option("--n", n, "Number of vertices")->required();
    construct_cmd->add_option("--k", k, "Number of colours for --seq balanced")->default_val(3);
    construct_cmd->add_option("--seq", seq_spec, "Sequence file, 'balanced', or inline counts")->required();
    construct_cmd->add_option("--out", out_path, "Colouring output file");
    construct_cmd->add_option("--cert", cert_path, "Certificate output file");
    construct_cmd->add_option("--strategy", strategy, "auto|staged|greedy|mindeg3")
        ->check(CLI::IsMember({"auto", "staged", "greedy", "mindeg3"}));
    construct_cmd->add_option("--budget", budget, "Greedy node budget")->default_val(kDefaultGreedyBudget);

    auto* verify_cmd = app.add_subcommand("verify", "Check a colouring");
    verify_cmd->add_option("--colouring", col_path, "Colouring file")->required();
    verify_cmd->add_option("--target", target, "Graph file or builtin:NAME");
    verify_cmd->add_option("--cert", cert_path, "Certificate file");
    verify_cmd->add_option("--seq", seq_spec, "Expected sequence");
    verify_cmd->add_option("--budget", budget, "Rainbow search node budget");
    verify_cmd->add_option("--sample-trials", trials, "Random K_m samples before the exhaustive search");

    auto* certify_cmd = app.add_subcommand("certify", "Produce or check a lower-bound certificate");
    certify_cmd->add_option("--kind", kind, "triangle|clash|tree|general|peel");
    certify_cmd->add_option("--k", k, "Number of colours");
    certify_cmd->add_option("--m", m, "Clique or tree size");
    certify_cmd->add_option("--n", n, "Number of vertices for an inline --seq");
    certify_cmd->add_option("--seq", seq_spec, "Sequence file or inline counts");
    certify_cmd->add_option("--target", target, "Target for --kind general");
    certify_cmd->add_option("--colouring", col_path, "Colouring for --kind peel");
    certify_cmd->add_option("--stop", stop, "Stop size for --kind peel");
    certify_cmd->add_option("--out", out_path, "Certificate output file");
    certify_cmd->add_option("--check", check_path, "Reload a certificate and re-verify it");

    auto* oracle_cmd = app.add_subcommand("oracle", "Exhaustive realizability of one sequence");
    oracle_cmd->add_option("--target", target, "Graph file or builtin:NAME");
    oracle_cmd->add_option("--n", n, "Number of vertices");
    oracle_cmd->add_option("--k", k, "Number of colours for --seq balanced")->default_val(3);
    oracle_cmd->add_option("--seq", seq_spec, "Sequence file, 'balanced', or inline counts")->required();
    oracle_cmd->add_option("--out", out_path, "Witness colouring output file");
    oracle_cmd->add_option("--budget", budget, "Node budget");

    auto* sweep_cmd = app.add_subcommand("sweep", "Realizability table for every sequence up to n-max");
    sweep_cmd->add_option("--target", target, "Graph file or builtin:NAME");
    sweep_cmd->add_option("--k", k, "Number of colours")->required();
    sweep_cmd->add_option("--n-max", n_max, "Largest n")->required();
    sweep_cmd->add_option("--budget", budget, "Total oracle nodes")->default_val(100'000'000);
    sweep_cmd->add_option("--out", out_path, "Table output file");
    sweep_cmd->add_option("--report", report_path, "Agreement report output file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }
    if (jobs > 0) omp_set_num_threads(jobs);

    try {
        if (*construct_cmd) return cmd_construct(target, n, k, seq_spec, out_path, cert_path, strategy, budget);
        if (*verify_cmd) return cmd_verify(col_path, target, cert_path, seq_spec, budget, trials, seed);
        if (*certify_cmd)
            return cmd_certify(kind, k, m, n, seq_spec, target, col_path, stop, out_path, check_path);
        if (*oracle_cmd) return cmd_oracle(target, n, k, seq_spec, out_path, budget);
        if (*sweep_cmd) return cmd_sweep(target, k, n_max, budget, out_path, report_path);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
