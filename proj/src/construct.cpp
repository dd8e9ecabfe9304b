#include "rainbow/construct.hpp"

#include "rainbow/search.hpp"

namespace rainbow {

namespace {

struct Attempt {
    const TargetGraph& h;
    const DistributionSequence& seq;
    const ConstructOptions& options;
    ConstructionOutcome out;
    bool gave_up = false;

    void accept_standard(const SplitCertificate& cert, const std::string& method) {
        out.status = ConstructStatus::Constructed;
        out.colouring = realize(cert);
        out.certificate = cert;
        out.method = method;
    }

    // Rainbow search on a candidate colouring; true when it is H-free.
    bool candidate_ok(const Colouring& col, const std::string& label) {
        SearchResult r;
        if (h.is_tree() && h.edge_count() > 0) {
            const TreeSearchResult t = find_rainbow_tree(col, h, options.search_budget);
            r.status = t.status;
            r.witness = t.witness;
        } else {
            r = find_rainbow_subgraph(col, h, options.search_budget);
        }
        if (r.status == SearchStatus::None) return true;
        if (r.status == SearchStatus::Found) {
            out.witness = r.witness;
            out.reasons.push_back(label + ": rainbow copy " + format_embedding(*r.witness));
        } else {
            gave_up = true;
            out.reasons.push_back(label + ": rainbow search inconclusive");
        }
        return false;
    }

    bool staged(bool verify) {
        if (seq.k() < 2 || seq.n() < 2 * seq.k()) {
            out.reasons.push_back("staged: needs k >= 2 and n >= 2k");
            return false;
        }
        try {
            const SplitCertificate cert = construct_staged(seq, options.constants);
            if (verify && !candidate_ok(realize(cert), "staged")) return false;
            accept_standard(cert, "staged");
            return true;
        } catch (const StagedInfeasible& e) {
            out.reasons.push_back(std::string("staged: ") + e.what());
            return false;
        }
    }

    bool greedy(bool verify) {
        const GreedyResult g = construct_greedy(seq, options.greedy_budget);
        if (g.status == GreedyStatus::Certificate) {
            if (verify && !candidate_ok(realize(*g.certificate), "greedy")) return false;
            accept_standard(*g.certificate, "greedy");
            return true;
        }
        if (g.status == GreedyStatus::GiveUp) {
            gave_up = true;
            out.reasons.push_back("greedy: node budget exhausted after " + std::to_string(g.nodes) + " nodes");
        } else {
            out.reasons.push_back("greedy: no standard colouring exists");
        }
        return false;
    }

    bool mindeg3(bool verify) {
        try {
            Mindeg3Result r = construct_mindeg3(seq);
            if (verify && !candidate_ok(r.colouring, "mindeg3")) return false;
            out.status = ConstructStatus::Constructed;
            out.colouring = std::move(r.colouring);
            out.peels = std::move(r.peels);
            out.method = "mindeg3";
            return true;
        } catch (const PreconditionViolation& e) {
            out.reasons.push_back(std::string("mindeg3: ") + e.what());
            return false;
        }
    }

    bool fill(bool verify) {
        Colouring col(seq.n(), seq.k());
        Colour c = 1;
        Count used = 0;
        for (Vertex u = 1; u <= seq.n(); ++u)
            for (Vertex v = u + 1; v <= seq.n(); ++v) {
                while (used == seq[c]) {
                    ++c;
                    used = 0;
                }
                col.set(u, v, c);
                ++used;
            }
        if (verify && !candidate_ok(col, "fill")) return false;
        out.status = ConstructStatus::Constructed;
        out.colouring = std::move(col);
        out.method = "fill";
        return true;
    }

    bool exhaustive() {
        if (seq.n() > options.oracle_max_n) return false;
        const OracleResult r = is_realizable(seq, h, options.oracle);
        switch (r.verdict) {
            case Verdict::Realizable:
                out.status = ConstructStatus::Constructed;
                out.colouring = r.witness;
                out.method = "exhaustive";
                return true;
            case Verdict::Unrealizable:
                out.status = ConstructStatus::Infeasible;
                out.method = "exhaustive";
                out.reasons.push_back("exhaustive search: no rainbow-" + h.name() + "-free colouring has this distribution");
                return true;
            case Verdict::Inconclusive:
                gave_up = true;
                out.reasons.push_back("exhaustive search: node budget exhausted");
                return false;
        }
        return false;
    }

    bool bound(std::optional<InfeasibilityCertificate> cert, const std::string& method) {
        if (!cert) return false;
        out.status = ConstructStatus::Infeasible;
        out.infeasibility = std::move(cert);
        out.method = method;
        out.reasons.push_back(method + ": " + out.infeasibility->comment);
        return true;
    }

    void finish() {
        if (out.status == ConstructStatus::Constructed || out.status == ConstructStatus::Infeasible) return;
        out.status = gave_up && !out.witness ? ConstructStatus::GaveUp : ConstructStatus::NotConstructed;
    }
};

}  // namespace

const char* to_string(Strategy s) {
    switch (s) {
        case Strategy::Auto: return "auto";
        case Strategy::Staged: return "staged";
        case Strategy::Greedy: return "greedy";
        case Strategy::Mindeg3: return "mindeg3";
    }
    return "?";
}

Strategy parse_strategy(const std::string& s) {
    if (s == "auto") return Strategy::Auto;
    if (s == "staged") return Strategy::Staged;
    if (s == "greedy") return Strategy::Greedy;
    if (s == "mindeg3") return Strategy::Mindeg3;
    throw std::invalid_argument("unknown strategy '" + s + "'");
}

const char* to_string(ConstructStatus s) {
    switch (s) {
        case ConstructStatus::Constructed: return "constructed";
        case ConstructStatus::Infeasible: return "infeasible";
        case ConstructStatus::NotConstructed: return "not-constructed";
        case ConstructStatus::GaveUp: return "gave-up";
    }
    return "?";
}

ConstructionOutcome construct(const TargetGraph& h, const DistributionSequence& seq, Strategy strategy,
                              const ConstructOptions& options) {
    if (!is_n_good(seq)) throw std::invalid_argument("construct needs an n-good sequence");
    Attempt at{h, seq, options, {}};
    const int d = h.degeneracy();
    const int m = h.vertex_count();

    if (strategy != Strategy::Auto) {
        // Standard colourings are safe for any target with a cycle, the
        // min-degree-3 peeling only for degeneracy >= 3; otherwise verify.
        switch (strategy) {
            case Strategy::Staged: at.staged(d < 2); break;
            case Strategy::Greedy: at.greedy(d < 2); break;
            case Strategy::Mindeg3: at.mindeg3(d < 3); break;
            case Strategy::Auto: break;
        }
        at.finish();
        return at.out;
    }

    if (h.edge_count() == 0) {
        if (m > seq.n()) {
            at.fill(false);
        } else {
            Embedding any;
            for (Vertex v = 1; v <= m; ++v) any.image.push_back(v);
            at.out.witness = any;
            at.out.reasons.push_back("edgeless target: every colouring contains it");
        }
        at.finish();
        return at.out;
    }

    if (d >= 2) {
        if (m >= 3 && m <= seq.n() && at.bound(clash_bound_check(seq, m), "clash-bound")) return at.out;
        if (d >= 3 && seq.n() >= 2 * seq.k() && at.mindeg3(false)) return at.out;
        if (!at.staged(false) && !at.greedy(false)) at.exhaustive();
        at.finish();
        return at.out;
    }

    // Forests.
    if (at.bound(tree_forced_check(seq, m), "tree-threshold")) return at.out;
    if (!at.greedy(true) && !at.fill(true) && m >= 3 && m <= seq.n())
        if (auto clash = clash_bound_check(seq, m)) at.out.reasons.push_back("clash-bound: " + clash->comment);
    at.finish();
    return at.out;
}

}  // namespace rainbow
