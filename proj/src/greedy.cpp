#include "rainbow/greedy.hpp"

#include <algorithm>
#include <cstring>
#include <string>
#include <tuple>
#include <unordered_set>

namespace rainbow {

namespace {

struct Move {
    int m;
    int t;
    Colour colour;
};

class GreedySearch {
public:
    GreedySearch(const DistributionSequence& seq, std::uint64_t budget)
        : budgets_(seq.counts().begin(), seq.counts().end()), budget_(budget) {
        if (seq.n() >= 2) sizes_.push_back(seq.n());
    }

    bool run() { return dfs(); }
    bool exhausted() const { return exhausted_; }
    std::uint64_t nodes() const { return nodes_; }
    const std::vector<Move>& path() const { return path_; }

private:
    std::string key() const {
        std::vector<Count> sorted = budgets_;
        std::sort(sorted.begin(), sorted.end());
        std::string out(sizeof(Count) * sorted.size() + sizeof(int) * sizes_.size(), '\0');
        std::memcpy(out.data(), sorted.data(), sizeof(Count) * sorted.size());
        std::memcpy(out.data() + sizeof(Count) * sorted.size(), sizes_.data(), sizeof(int) * sizes_.size());
        return out;
    }

    void insert_size(int s) {
        if (s < 2) return;
        sizes_.insert(std::upper_bound(sizes_.begin(), sizes_.end(), s, std::greater<int>()), s);
    }

    bool dfs() {
        if (sizes_.empty()) return true;
        if (++nodes_ > budget_) {
            exhausted_ = true;
            return false;
        }
        const int m = sizes_.front();
        const Count top = *std::max_element(budgets_.begin(), budgets_.end());
        // Every split of the largest block costs at least m - 1 edges of one colour.
        if (top < static_cast<Count>(m - 1)) return false;
        std::string memo = key();
        if (dead_.contains(memo)) return false;

        std::vector<Colour> order(budgets_.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<Colour>(i + 1);
        std::stable_sort(order.begin(), order.end(),
                         [&](Colour a, Colour b) { return budgets_[a - 1] > budgets_[b - 1]; });

        const std::vector<int> saved = sizes_;
        for (int t = 1; t <= m / 2; ++t) {
            const Count cost = static_cast<Count>(t) * static_cast<Count>(m - t);
            Count previous = 0;
            bool first = true;
            for (Colour c : order) {
                const Count have = budgets_[c - 1];
                if (have < cost) break;
                if (!first && have == previous) continue;  // same budget, same subtree
                first = false;
                previous = have;
                budgets_[c - 1] -= cost;
                sizes_.erase(sizes_.begin());
                insert_size(t);
                insert_size(m - t);
                path_.push_back({m, t, c});
                if (dfs()) return true;
                path_.pop_back();
                sizes_ = saved;
                budgets_[c - 1] += cost;
                if (exhausted_) return false;
            }
        }
        dead_.insert(std::move(memo));
        return false;
    }

    std::vector<int> sizes_;  // blocks of size >= 2, descending
    std::vector<Count> budgets_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    bool exhausted_ = false;
    std::vector<Move> path_;
    std::unordered_set<std::string> dead_;
};

}  // namespace

GreedyResult construct_greedy(const DistributionSequence& seq, std::uint64_t node_budget) {
    if (!is_n_good(seq)) throw std::invalid_argument("construct_greedy needs an n-good sequence");
    GreedySearch search(seq, node_budget);
    GreedyResult result;
    const bool found = search.run();
    result.nodes = search.nodes();
    if (!found) {
        result.status = search.exhausted() ? GreedyStatus::GiveUp : GreedyStatus::Infeasible;
        return result;
    }
    SplitState state(seq);
    state.add_metadata("strategy greedy");
    state.add_metadata("search nodes " + std::to_string(search.nodes()));
    for (const Move& mv : search.path()) {
        Block target{0, 0};
        for (const Block& b : state.blocks())
            if (b.size() == mv.m) {
                target = b;
                break;
            }
        state.standard_step(target, mv.t, mv.colour);
    }
    if (!state.finished()) throw std::logic_error("greedy path did not colour every edge");
    result.status = GreedyStatus::Certificate;
    result.certificate = state.certificate();
    return result;
}

}  // namespace rainbow
