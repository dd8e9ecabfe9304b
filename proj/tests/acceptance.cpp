// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "rainbow/bounds.hpp"
#include "rainbow/certificate_check.hpp"
#include "rainbow/construct.hpp"
#include "rainbow/gallai.hpp"
#include "rainbow/greedy.hpp"
#include "rainbow/mindeg3.hpp"
#include "rainbow/oracle.hpp"
#include "rainbow/search.hpp"
#include "rainbow/split.hpp"

using namespace rainbow;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
    bool pass = true;
    std::string detail;
};

// Counts of a random standard colouring: a sequence known to be realizable.
DistributionSequence hidden_standard_sequence(int n, int k, std::mt19937_64& rng) {
    std::vector<Count> e(k, 0);
    std::vector<int> sizes{n};
    std::uniform_int_distribution<int> colour(0, k - 1);
    while (!sizes.empty()) {
        const int m = sizes.back();
        sizes.pop_back();
        if (m < 2) continue;
        const int t = std::uniform_int_distribution<int>(1, m / 2)(rng);
        e[colour(rng)] += static_cast<Count>(t) * (m - t);
        sizes.push_back(t);
        sizes.push_back(m - t);
    }
    return DistributionSequence(n, e);
}

DistributionSequence random_sequence(int n, int k, std::mt19937_64& rng) {
    std::vector<Count> e(k, 0);
    std::uniform_int_distribution<int> pick(0, k - 1);
    for (Count i = 0; i < choose2(n); ++i) ++e[pick(rng)];
    return DistributionSequence(n, e);
}

bool counts_match(const Colouring& col, const DistributionSequence& seq) {
    const auto counts = colour_counts(col);
    return std::equal(counts.begin(), counts.end(), seq.counts().begin(), seq.counts().end());
}

bool conserved(const SplitState& s) {
    Count blocks = 0, budgets = 0;
    for (const Block& b : s.blocks()) blocks += choose2(b.size());
    for (Count c : s.budgets()) budgets += c;
    return blocks == budgets && s.conservation_holds();
}

// Random legal standard steps until the colouring completes or no step fits.
std::optional<SplitCertificate> random_walk(const DistributionSequence& seq, std::mt19937_64& rng, bool& conservation) {
    SplitState s(seq);
    conservation = conserved(s);
    while (!s.finished()) {
        std::vector<Step> moves;
        for (const Block& b : s.blocks()) {
            for (int t = 1; 2 * t <= b.size(); ++t) {
                const Count need = static_cast<Count>(t) * (b.size() - t);
                for (Colour c = 1; c <= s.k(); ++c)
                    if (s.budget(c) >= need) moves.push_back({b.lo, b.hi, t, c});
            }
        }
        if (moves.empty()) return std::nullopt;
        const Step& st = moves[std::uniform_int_distribution<std::size_t>(0, moves.size() - 1)(rng)];
        s.standard_step({st.lo, st.hi}, st.t, st.colour);
        conservation = conservation && conserved(s);
        if (!conservation) return std::nullopt;
    }
    return s.certificate();
}

std::uint64_t distribution_failures = 0;
std::uint64_t distribution_checked = 0;

void note_distribution(const Colouring& col, const DistributionSequence& seq) {
    ++distribution_checked;
    if (!counts_match(col, seq)) ++distribution_failures;
}

Outcome conservation() {
    const auto start = Clock::now();
    std::mt19937_64 rng(101);
    std::uint64_t violations = 0, completed = 0;
    for (int trial = 0; trial < 100'000; ++trial) {
        const int n = std::uniform_int_distribution<int>(2, 40)(rng);
        const int k = std::uniform_int_distribution<int>(1, 8)(rng);
        const DistributionSequence seq =
            trial % 2 ? hidden_standard_sequence(n, k, rng) : random_sequence(n, k, rng);
        bool ok = true;
        const auto cert = random_walk(seq, rng, ok);
        if (!ok) ++violations;
        if (cert) {
            ++completed;
            note_distribution(realize(*cert), seq);
        }
    }
    const double secs = seconds_since(start);
    std::ostringstream d;
    d << "100000 walks, " << completed << " complete, " << violations << " violations, " << secs << " s";
    return {violations == 0 && secs < 60, d.str()};
}

std::optional<Colouring> greedy_colouring(const DistributionSequence& seq) {
    const GreedyResult g = construct_greedy(seq);
    if (g.status != GreedyStatus::Certificate) return std::nullopt;
    Colouring col = realize(*g.certificate);
    note_distribution(col, seq);
    return col;
}

Outcome cycle_free() {
    std::mt19937_64 rng(202);
    int realized = 0, bad = 0;
    for (int trial = 0; trial < 2000 && realized < 600; ++trial) {
        const int n = std::uniform_int_distribution<int>(3, 10)(rng);
        const int k = std::uniform_int_distribution<int>(2, 8)(rng);
        const auto col = greedy_colouring(hidden_standard_sequence(n, k, rng));
        if (!col) continue;
        ++realized;
        if (find_rainbow_cycle(*col, n)) ++bad;
    }
    std::ostringstream d;
    d << realized << " colourings, " << bad << " with a rainbow cycle";
    return {realized >= 500 && bad == 0, d.str()};
}

// Each peeled vertex sees only the peel's minor and major colours towards [1..x].
bool peels_use_two_colours(const Mindeg3Result& r) {
    for (const Peel& p : r.peels)
        for (Vertex v = p.x - p.t + 1; v <= p.x; ++v)
            for (Vertex u = 1; u <= p.x; ++u) {
                if (u == v) continue;
                const Colour c = r.colouring.at(u, v);
                if (c != p.minor && c != p.major) return false;
            }
    return true;
}

Outcome mindeg3() {
    const auto start = Clock::now();
    std::mt19937_64 rng(404);
    const TargetGraph k4 = TargetGraph::complete(4);
    int runs = 0, bad = 0, errors = 0;
    for (int k = 1; k <= 4; ++k)
        for (int n = 2 * k; n <= 2 * k + 4; ++n)
            for (int i = 0; i < 100; ++i) {
                const DistributionSequence seq = random_sequence(n, k, rng);
                ++runs;
                try {
                    const Mindeg3Result r = construct_mindeg3(seq);
                    note_distribution(r.colouring, seq);
                    if (!counts_match(r.colouring, seq) || !peels_use_two_colours(r) ||
                        find_rainbow_subgraph(r.colouring, k4).status != SearchStatus::None)
                        ++bad;
                } catch (const std::exception&) {
                    ++errors;
                }
            }
    const double secs = seconds_since(start);
    std::ostringstream d;
    d << runs << " sequences, " << bad << " failures, " << errors << " errors, " << secs << " s";
    return {bad == 0 && errors == 0 && secs < 300, d.str()};
}

Outcome oracle_agreement() {
    const auto start = Clock::now();
    const TargetGraph k3 = TargetGraph::complete(3);
    int compared = 0, conflicts = 0;
    bool mandatory = false;
    std::string first_conflict;
    for (int k = 1; k <= 3; ++k) {
        const GReport report = exact_g(k3, k, 6);
        if (report.partial) return {false, "oracle table partial"};
        std::map<std::pair<int, std::vector<Count>>, Verdict> table;
        for (const TableSection& s : report.sections)
            for (const TableRow& row : s.rows) table[{s.n, row.e}] = row.verdict;
        for (int n = 2; n <= 6; ++n) {
            // every ordered n-good sequence
            std::vector<Count> e(k, 0);
            const Count total = choose2(n);
            std::function<void(int, Count)> rec = [&](int i, Count left) {
                if (i == k - 1) {
                    e[i] = left;
                    std::vector<Count> sorted = e;
                    std::sort(sorted.rbegin(), sorted.rend());
                    const Verdict v = table.at({n, sorted});
                    const GreedyResult g = construct_greedy(DistributionSequence(n, e));
                    ++compared;
                    const bool ok = (v == Verdict::Realizable && g.status == GreedyStatus::Certificate) ||
                                    (v == Verdict::Unrealizable && g.status == GreedyStatus::Infeasible);
                    if (!ok && conflicts++ == 0) {
                        std::ostringstream c;
                        c << "n=" << n << " e=";
                        for (Count x : e) c << x << ',';
                        first_conflict = c.str();
                    }
                    if (g.certificate) note_distribution(realize(*g.certificate), DistributionSequence(n, e));
                    return;
                }
                for (Count x = 0; x <= left; ++x) {
                    e[i] = x;
                    rec(i + 1, left - x);
                }
            };
            rec(0, total);
        }
        if (k == 3) mandatory = table.at({3, {1, 1, 1}}) == Verdict::Unrealizable;
    }
    const double secs = seconds_since(start);
    std::ostringstream d;
    d << compared << " sequences, " << conflicts << " conflicts";
    if (conflicts) d << " (first " << first_conflict << ")";
    d << ", (1,1,1) unrealizable: " << (mandatory ? "yes" : "no") << ", " << secs << " s";
    return {conflicts == 0 && mandatory && secs < 600, d.str()};
}

Outcome clash() {
    std::mt19937_64 rng(606);
    const TargetGraph k3 = TargetGraph::complete(3);
    std::set<std::pair<int, std::vector<Count>>> seen;
    int contradictions = 0, inconclusive = 0;
    for (int trial = 0; trial < 200'000 && seen.size() < 200; ++trial) {
        const int n = std::uniform_int_distribution<int>(3, 7)(rng);
        const int k = std::uniform_int_distribution<int>(3, static_cast<int>(choose2(n)))(rng);
        const DistributionSequence seq = random_sequence(n, k, rng);
        std::vector<Count> sorted(seq.counts().begin(), seq.counts().end());
        std::sort(sorted.rbegin(), sorted.rend());
        while (!sorted.empty() && sorted.back() == 0) sorted.pop_back();
        if (sorted.size() < 3 || !clash_bound_check(seq, 3)) continue;
        if (!seen.insert({n, sorted}).second) continue;
        const Verdict v = is_realizable(seq, k3).verdict;
        if (v == Verdict::Realizable) ++contradictions;
        if (v == Verdict::Inconclusive) ++inconclusive;
    }
    std::ostringstream d;
    d << seen.size() << " sequences, " << contradictions << " contradictions, " << inconclusive << " inconclusive";
    return {seen.size() >= 200 && contradictions == 0 && inconclusive == 0, d.str()};
}

Outcome triangle() {
    const auto start = Clock::now();
    const HardSequence h = triangle_hard_sequence(1000);
    const auto cert = triangle_infeasibility_check(1000);
    bool reloaded = false;
    if (cert) {
        std::stringstream io;
        write_bound_certificate(io, *cert);
        reloaded = reverify(read_bound_certificate(io));
    }
    const double secs = seconds_since(start);
    const bool values = h.n == 1203 && h.b == 500 && h.a == 946 && h.c == 3 && is_n_good(h.seq);
    std::ostringstream d;
    d << "n=" << h.n << " a=" << h.a << " b=" << h.b << " c=" << h.c;
    if (cert) d << " margin=" << static_cast<double>(cert->margin_num) / static_cast<double>(cert->margin_den);
    d << " reload " << (reloaded ? "ok" : "FAIL") << ", " << secs << " s";
    return {values && cert && cert->margin_num > 0 && reloaded && secs < 1, d.str()};
}

Outcome tree() {
    const auto start = Clock::now();
    BigInt by_power = boost::multiprecision::pow(BigInt(12), 12);
    BigInt by_product = 1;
    for (int i = 0; i < 12; ++i) by_product *= 12;
    const BigInt d2 = tree_threshold(2);
    // C(n,2) >= k >= 2 D(2) makes 1 + C(n,2)/k <= C(n,2)/D(2) hold.
    const std::int64_t n = 6'000'000;
    const std::uint64_t k = 2 * static_cast<std::uint64_t>(by_product);
    const auto cert = tree_forced_check(balanced_profile(n, k), 2);
    const double secs = seconds_since(start);
    std::ostringstream d;
    d << "D(2)=" << d2 << ", n=" << n << " k=" << k << " forced " << (cert ? "yes" : "no") << ", " << secs << " s";
    return {d2 == by_power && d2 == by_product && cert && reverify(*cert) && secs < 1, d.str()};
}

// Independent re-check: every inter-part pair monochromatic in a base colour.
bool partition_holds(const Colouring& col, const GallaiPartition& p) {
    std::vector<int> part(col.n() + 1, -1);
    for (std::size_t i = 0; i < p.parts.size(); ++i)
        for (Vertex v : p.parts[i]) {
            if (part[v] != -1) return false;
            part[v] = static_cast<int>(i);
        }
    for (Vertex v = 1; v <= col.n(); ++v)
        if (part[v] == -1) return false;
    if (p.parts.size() < 2 || p.base_colours.empty() || p.base_colours.size() > 2) return false;
    std::map<std::pair<int, int>, Colour> seen;
    for (Vertex u = 1; u <= col.n(); ++u)
        for (Vertex v = u + 1; v <= col.n(); ++v) {
            if (part[u] == part[v]) continue;
            const Colour c = col.at(u, v);
            if (std::find(p.base_colours.begin(), p.base_colours.end(), c) == p.base_colours.end()) return false;
            const auto key = std::minmax(part[u], part[v]);
            const auto [it, fresh] = seen.emplace(key, c);
            if (!fresh && it->second != c) return false;
        }
    return true;
}

Outcome gallai() {
    std::mt19937_64 rng(909);
    int colourings = 0, bad_partitions = 0, bad_traces = 0, heuristic = 0;
    for (int trial = 0; trial < 2000 && colourings < 200; ++trial) {
        const int n = std::uniform_int_distribution<int>(2, 12)(rng);
        const int k = std::uniform_int_distribution<int>(1, 8)(rng);
        const auto col = greedy_colouring(hidden_standard_sequence(n, k, rng));
        if (!col) continue;
        ++colourings;
        const GallaiResult r = find_gallai_partition(*col);
        if (r.status != GallaiStatus::Found || !partition_holds(*col, *r.partition)) ++bad_partitions;
        try {
            const PeelTrace t = peel_splitting_process(*col, 1);
            int x = n;
            bool ok = true;
            for (const PeelRecord& rec : t.records) {
                ok = ok && rec.x == x && rec.t >= 1;
                x -= rec.t;
            }
            if (!ok || x != t.final_size || t.final_size > 1) ++bad_traces;
        } catch (const HeuristicFailure&) {
            ++heuristic;
        }
    }
    std::ostringstream d;
    d << colourings << " colourings, " << bad_partitions << " bad partitions, " << bad_traces << " bad traces, "
      << heuristic << " heuristic failures";
    return {colourings >= 200 && bad_partitions == 0 && bad_traces == 0 && heuristic == 0, d.str()};
}

Outcome scale() {
    const DistributionSequence seq = balanced_sequence(2000, 50);
    auto start = Clock::now();
    const ConstructionOutcome out = construct(TargetGraph::complete(3), seq);
    const double construct_secs = seconds_since(start);
    bool replay = false;
    if (out.status == ConstructStatus::Constructed && out.certificate && out.colouring) {
        replay = verify_certificate(*out.certificate, *out.colouring, seq).ok;
        note_distribution(*out.colouring, seq);
    }

    std::mt19937_64 rng(1010);
    Colouring col(300, 2);
    std::uniform_int_distribution<int> pick(1, 2);
    for (Vertex u = 1; u <= 300; ++u)
        for (Vertex v = u + 1; v <= 300; ++v) col.set(u, v, pick(rng));
    start = Clock::now();
    const auto tri = find_rainbow_triangle(col);
    const double triangle_secs = seconds_since(start);

    std::ostringstream d;
    d << "construct " << to_string(out.status) << " via " << out.method << " in " << construct_secs
      << " s, replay " << (replay ? "ok" : "FAIL") << "; triangle scan " << triangle_secs << " s";
    return {replay && construct_secs < 10 && !tri && triangle_secs < 5, d.str()};
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        Outcome (*run)();
    };
    const Criterion criteria[] = {
        {"conservation after every step", conservation},
        {"certificate colourings are rainbow-cycle-free", cycle_free},
        {"distribution exactness", nullptr},
        {"min-degree-3 construction has no rainbow K4", mindeg3},
        {"oracle table agrees with greedy", oracle_agreement},
        {"clash bound confirmed by oracle", clash},
        {"triangle hard sequence k=1000", triangle},
        {"tree threshold", tree},
        {"Gallai partitions and peel traces", gallai},
        {"scale smoke test", scale},
    };
    // Distribution exactness is tallied across every other criterion, so it reports last.
    int failures = 0;
    for (int i = 0; i < 10; ++i) {
        if (!criteria[i].run) continue;
        Outcome o;
        try {
            o = criteria[i].run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        std::printf("%s criterion %d: %s (%s)\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].name, o.detail.c_str());
        std::fflush(stdout);
        failures += !o.pass;
    }
    const bool exact = distribution_failures == 0 && distribution_checked > 0;
    std::printf("%s criterion 3: %s (%llu colourings, %llu mismatches)\n", exact ? "PASS" : "FAIL", criteria[2].name,
                static_cast<unsigned long long>(distribution_checked),
                static_cast<unsigned long long>(distribution_failures));
    failures += !exact;
    return failures == 0 ? 0 : 1;
}
