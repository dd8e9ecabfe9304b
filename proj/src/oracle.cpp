#include "rainbow/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <ostream>

namespace rainbow {

namespace {

class Realizer {
public:
    Realizer(const DistributionSequence& seq, const TargetGraph& h, const OracleOptions& options)
        : n_(seq.n()),
          k_(seq.k()),
          h_(h),
          options_(options),
          col_(seq.n(), seq.k()),
          budget_(seq.counts().begin(), seq.counts().end()),
          initial_(budget_),
          uses_(seq.k() + 1, 0),
          seen_(seq.k() + 1, 0),
          image_(h.vertex_count() + 1, 0),
          taken_(seq.n() + 1, 0) {
        for (Vertex u = 1; u <= n_; ++u)
            for (Vertex v = u + 1; v <= n_; ++v) order_.push_back({u, v});
    }

    OracleResult run() {
        OracleResult r;
        const bool found = dfs(0);
        r.nodes = nodes_;
        if (found) {
            r.verdict = Verdict::Realizable;
            r.witness = col_;
        } else {
            r.verdict = out_of_budget_ ? Verdict::Inconclusive : Verdict::Unrealizable;
        }
        return r;
    }

private:
    bool dfs(std::size_t idx) {
        if (idx == order_.size()) return true;
        if (++nodes_ > options_.node_budget) {
            out_of_budget_ = true;
            return false;
        }
        const auto [u, v] = order_[idx];
        std::vector<Count> fresh_tried;
        for (Colour c = 1; c <= k_; ++c) {
            if (budget_[c - 1] == 0) continue;
            if (options_.colour_symmetry && uses_[c] == 0) {
                if (std::find(fresh_tried.begin(), fresh_tried.end(), initial_[c - 1]) != fresh_tried.end()) continue;
                fresh_tried.push_back(initial_[c - 1]);
            }
            col_.set(u, v, c);
            --budget_[c - 1];
            ++uses_[c];
            const bool ok = !closes_copy(u, v, c) && dfs(idx + 1);
            if (ok) return true;
            ++budget_[c - 1];
            --uses_[c];
            col_.set(u, v, kNoColour);
            if (out_of_budget_) return false;
        }
        return false;
    }

    // Does some rainbow copy of H use edge (u, v) with every other edge coloured?
    bool closes_copy(Vertex u, Vertex v, Colour c) {
        if (h_.edge_count() == 3 && h_.vertex_count() == 3) {
            for (Vertex w = 1; w <= n_; ++w) {
                if (w == u || w == v) continue;
                const Colour a = col_.at(u, w);
                const Colour b = col_.at(v, w);
                if (a != kNoColour && b != kNoColour && a != b && a != c && b != c) return true;
            }
            return false;
        }
        for (const Edge& e : h_.edges())
            for (int flip = 0; flip < 2; ++flip) {
                const Vertex a = flip ? e.v : e.u;
                const Vertex b = flip ? e.u : e.v;
                image_[a] = u;
                image_[b] = v;
                taken_[u] = taken_[v] = 1;
                seen_[c] = 1;
                const bool hit = extend(1, a, b);
                seen_[c] = 0;
                taken_[u] = taken_[v] = 0;
                image_[a] = image_[b] = 0;
                if (hit) return true;
            }
        return false;
    }

    bool extend(Vertex x, Vertex a, Vertex b) {
        while (x <= h_.vertex_count() && (x == a || x == b)) ++x;
        if (x > h_.vertex_count()) return true;
        for (Vertex y = 1; y <= n_; ++y) {
            if (taken_[y]) continue;
            std::vector<Colour> added;
            bool ok = true;
            for (Vertex z : h_.neighbours(x)) {
                if (image_[z] == 0) continue;
                const Colour cz = col_.at(y, image_[z]);
                if (cz == kNoColour || seen_[cz]) {
                    ok = false;
                    break;
                }
                seen_[cz] = 1;
                added.push_back(cz);
            }
            if (ok) {
                image_[x] = y;
                taken_[y] = 1;
                ok = extend(x + 1, a, b);
                taken_[y] = 0;
                image_[x] = 0;
            }
            for (Colour cz : added) seen_[cz] = 0;
            if (ok) return true;
        }
        return false;
    }

    int n_;
    int k_;
    const TargetGraph& h_;
    OracleOptions options_;
    Colouring col_;
    std::vector<Count> budget_;
    std::vector<Count> initial_;
    std::vector<int> uses_;
    std::vector<char> seen_;
    std::vector<Vertex> image_;
    std::vector<char> taken_;
    std::vector<std::pair<Vertex, Vertex>> order_;
    std::uint64_t nodes_ = 0;
    bool out_of_budget_ = false;
};

class StandardOracle {
public:
    bool solve(std::vector<int> sizes, std::vector<Count> budgets) {
        std::sort(sizes.begin(), sizes.end(), std::greater<>());
        std::sort(budgets.begin(), budgets.end(), std::greater<>());
        if (sizes.empty()) return true;
        std::vector<Count> key(budgets);
        key.push_back(0);
        key.insert(key.end(), sizes.begin(), sizes.end());
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        bool result = false;
        for (std::size_t i = 0; i < sizes.size() && !result; ++i) {
            if (i > 0 && sizes[i] == sizes[i - 1]) continue;
            const int m = sizes[i];
            for (int t = 1; t <= m / 2 && !result; ++t) {
                const Count cost = static_cast<Count>(t) * static_cast<Count>(m - t);
                for (std::size_t j = 0; j < budgets.size() && !result; ++j) {
                    if (budgets[j] < cost) break;
                    if (j > 0 && budgets[j] == budgets[j - 1]) continue;
                    std::vector<int> next_sizes = sizes;
                    next_sizes.erase(next_sizes.begin() + static_cast<std::ptrdiff_t>(i));
                    if (t >= 2) next_sizes.push_back(t);
                    if (m - t >= 2) next_sizes.push_back(m - t);
                    std::vector<Count> next_budgets = budgets;
                    next_budgets[j] -= cost;
                    result = solve(std::move(next_sizes), std::move(next_budgets));
                }
            }
        }
        memo_.emplace(std::move(key), result);
        return result;
    }

private:
    std::map<std::vector<Count>, bool> memo_;
};

void enumerate(int k, int pos, Count remaining, Count cap, std::vector<Count>& cur, std::vector<std::vector<Count>>& out) {
    const int left = k - pos;
    if (left == 0) {
        if (remaining == 0) out.push_back(cur);
        return;
    }
    const Count low = (remaining + static_cast<Count>(left) - 1) / static_cast<Count>(left);
    for (Count v = std::min(cap, remaining) + 1; v-- > low;) {
        cur[pos] = v;
        enumerate(k, pos + 1, remaining - v, v, cur, out);
    }
}

}  // namespace

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Realizable: return "REALIZABLE";
        case Verdict::Unrealizable: return "UNREALIZABLE";
        case Verdict::Inconclusive: return "INCONCLUSIVE";
    }
    return "?";
}

OracleResult is_realizable(const DistributionSequence& seq, const TargetGraph& h, const OracleOptions& options) {
    if (!is_n_good(seq)) throw std::invalid_argument("is_realizable needs an n-good sequence");
    if (h.edge_count() == 0 && h.vertex_count() <= seq.n()) return {Verdict::Unrealizable, std::nullopt, 0};
    return Realizer(seq, h, options).run();
}

bool is_realizable_standard(const DistributionSequence& seq) {
    if (!is_n_good(seq)) throw std::invalid_argument("is_realizable_standard needs an n-good sequence");
    std::vector<int> sizes;
    if (seq.n() >= 2) sizes.push_back(seq.n());
    StandardOracle oracle;
    return oracle.solve(sizes, {seq.counts().begin(), seq.counts().end()});
}

std::vector<std::vector<Count>> nonincreasing_sequences(int n, int k) {
    std::vector<std::vector<Count>> out;
    if (k < 1) return out;
    std::vector<Count> cur(k, 0);
    const Count total = choose2(static_cast<Count>(n));
    enumerate(k, 0, total, total, cur, out);
    return out;
}

GReport exact_g(const TargetGraph& h, int k, int n_max, const ExactGOptions& options) {
    GReport report;
    report.k = k;
    report.n_max = n_max;
    std::atomic<std::uint64_t> spent{0};
    std::uint64_t sequences = 0;
    for (int n = 2; n <= n_max; ++n) {
        auto seqs = nonincreasing_sequences(n, k);
        sequences += seqs.size();
        if (sequences > options.max_sequences) {
            report.partial = true;
            break;
        }
        TableSection section;
        section.n = n;
        section.rows.resize(seqs.size());
        const auto count = static_cast<std::ptrdiff_t>(seqs.size());
#pragma omp parallel for schedule(dynamic)
        for (std::ptrdiff_t i = 0; i < count; ++i) {
            TableRow& row = section.rows[i];
            row.e = seqs[i];
            if (spent.load() >= options.total_budget) continue;
            OracleOptions opts = options.oracle;
            opts.node_budget = std::min(opts.node_budget, options.total_budget - std::min(options.total_budget, spent.load()));
            const OracleResult r = is_realizable(DistributionSequence(n, seqs[i]), h, opts);
            spent += r.nodes;
            row.verdict = r.verdict;
        }
        for (const TableRow& row : section.rows) {
            if (row.verdict == Verdict::Inconclusive) section.complete = false;
            if (row.verdict != Verdict::Realizable) section.all_realizable = false;
        }
        report.sections.push_back(std::move(section));
        if (!report.sections.back().complete) {
            report.partial = true;
            break;
        }
    }
    if (!report.partial && !report.sections.empty()) {
        for (auto it = report.sections.rbegin(); it != report.sections.rend(); ++it) {
            if (!it->all_realizable) break;
            report.least_all_realizable = it->n;
        }
    }
    return report;
}

void write_table(std::ostream& out, const GReport& report) {
    for (const TableSection& s : report.sections) {
        out << "# n=" << s.n << '\n';
        for (const TableRow& row : s.rows) {
            for (Count e : row.e) out << e << ' ';
            out << to_string(row.verdict) << '\n';
        }
    }
    if (report.partial) out << "# PARTIAL\n";
}

}  // namespace rainbow
