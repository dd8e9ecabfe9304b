#include "rainbow/split.hpp"

#include <algorithm>
#include <numeric>

namespace rainbow {

const char* to_string(SplitErrorKind kind) {
    switch (kind) {
        case SplitErrorKind::UnknownBlock: return "UnknownBlock";
        case SplitErrorKind::BadSize: return "BadSize";
        case SplitErrorKind::TooLargeT: return "TooLargeT";
        case SplitErrorKind::BudgetExceeded: return "BudgetExceeded";
        case SplitErrorKind::BadColour: return "BadColour";
        case SplitErrorKind::CushionTooSmall: return "CushionTooSmall";
        case SplitErrorKind::BatchInfeasible: return "BatchInfeasible";
    }
    return "?";
}

namespace {

std::string show(Block b) { return "[" + std::to_string(b.lo) + ".." + std::to_string(b.hi) + "]"; }

}  // namespace

SplitState::SplitState(const DistributionSequence& seq)
    : n_(seq.n()), budgets_(seq.counts().begin(), seq.counts().end()) {
    if (!is_n_good(seq)) throw std::invalid_argument("split state needs an n-good sequence");
    blocks_.emplace(1, n_);
    uncoloured_ = choose2(static_cast<Count>(n_));
    budget_total_ = seq.total();
    log_.n = n_;
    log_.k = seq.k();
}

bool SplitState::is_active(Block b) const {
    auto it = blocks_.find(b.lo);
    return it != blocks_.end() && it->second == b.hi;
}

std::vector<Block> SplitState::blocks() const {
    std::vector<Block> out;
    out.reserve(blocks_.size());
    for (const auto& [lo, hi] : blocks_) out.push_back({lo, hi});
    return out;
}

bool SplitState::conservation_holds() const {
    Count sizes = 0;
    for (const auto& [lo, hi] : blocks_) sizes += choose2(static_cast<Count>(hi - lo + 1));
    const Count budgets = std::accumulate(budgets_.begin(), budgets_.end(), Count{0});
    return sizes == budgets && sizes == uncoloured_ && budgets == budget_total_;
}

void SplitState::standard_step(Block b, int t, Colour c) {
    if (!is_active(b)) throw SplitError(SplitErrorKind::UnknownBlock, "block " + show(b) + " is not active");
    const int m = b.size();
    if (m < 2) throw SplitError(SplitErrorKind::BadSize, "block " + show(b) + " has size " + std::to_string(m) + " < 2");
    if (t < 1 || t > m / 2)
        throw SplitError(SplitErrorKind::TooLargeT, "t = " + std::to_string(t) + " violates 1 <= t <= floor(" +
                                                        std::to_string(m) + "/2)");
    if (c < 1 || c > k()) throw SplitError(SplitErrorKind::BadColour, "colour " + std::to_string(c) + " outside [1..k]");
    const Count cost = static_cast<Count>(t) * static_cast<Count>(m - t);
    if (budgets_[c - 1] < cost)
        throw SplitError(SplitErrorKind::BudgetExceeded, "budget of colour " + std::to_string(c) + " is " +
                                                             std::to_string(budgets_[c - 1]) + " < t(m-t) = " +
                                                             std::to_string(cost));
    budgets_[c - 1] -= cost;
    budget_total_ -= cost;
    blocks_[b.lo] = b.hi - t;
    blocks_.emplace(b.hi - t + 1, b.hi);
    uncoloured_ = uncoloured_ - choose2(m) + choose2(m - t) + choose2(t);
    log_.steps.push_back({b.lo, b.hi, t, c});
    if (uncoloured_ != budget_total_) throw std::logic_error("conservation broken after step on " + show(b));
}

Count SplitState::cushion(Block b) const {
    if (!is_active(b)) throw SplitError(SplitErrorKind::UnknownBlock, "block " + show(b) + " is not active");
    const Count own = choose2(static_cast<Count>(b.size()));
    Count others = 0;
    for (const auto& [lo, hi] : blocks_)
        if (lo != b.lo) others += choose2(static_cast<Count>(hi - lo + 1));
    if (budget_total_ < own || budget_total_ - own != others)
        throw std::logic_error("cushion formulas disagree for block " + show(b));
    return others;
}

Colour SplitState::best_colour(Count need, std::span<const Colour> allowed) const {
    Colour best = kNoColour;
    auto consider = [&](Colour c) {
        const Count have = budgets_[c - 1];
        if (have < need) return;
        if (best == kNoColour || have > budgets_[best - 1] || (have == budgets_[best - 1] && c < best)) best = c;
    };
    if (allowed.empty()) {
        for (Colour c = 1; c <= k(); ++c) consider(c);
    } else {
        for (Colour c : allowed) consider(c);
    }
    return best;
}

Block reduce_large(SplitState& state, Block b) {
    const int limit = 2 * state.k();
    while (b.size() >= limit && b.size() >= 2) {
        const Colour c = state.best_colour(static_cast<Count>(b.size() - 1));
        if (c == kNoColour)
            throw std::logic_error("no colour with budget >= size-1 on a block of size >= 2k (block " + show(b) + ")");
        state.simple_step(b, c);
        b.hi -= 1;
    }
    return b;
}

void drain_with_cushion(SplitState& state, Block b) {
    const Count k = static_cast<Count>(state.k());
    const Count m = static_cast<Count>(b.size());
    const Count need = std::min((k * k - k) / 2, k * m);
    const Count have = state.cushion(b);
    if (have < need)
        throw SplitError(SplitErrorKind::CushionTooSmall, "cushion " + std::to_string(have) + " for block " + show(b) +
                                                              " is below min{(k^2-k)/2, k*m} = " + std::to_string(need));
    while (b.size() >= 2) {
        const Colour c = state.best_colour(static_cast<Count>(b.size() - 1));
        if (c == kNoColour) throw std::logic_error("drain ran out of budget on block " + show(b) + " despite cushion");
        state.simple_step(b, c);
        b.hi -= 1;
    }
}

Block batch_steps(SplitState& state, Block b, int t, int count, std::span<const Colour> allowed,
                  std::vector<Block>* split_off) {
    if (count <= 0) return b;
    if (t < 1) throw SplitError(SplitErrorKind::BatchInfeasible, "batch step size must be >= 1");
    const auto size = static_cast<unsigned __int128>(b.size());
    if (size <= static_cast<unsigned __int128>(t) * static_cast<unsigned __int128>(count))
        throw SplitError(SplitErrorKind::BatchInfeasible, "block " + show(b) + " is not larger than t*count = " +
                                                              std::to_string(static_cast<long long>(t) * count));
    unsigned __int128 pool = 0;
    std::size_t colours = allowed.empty() ? static_cast<std::size_t>(state.k()) : allowed.size();
    if (allowed.empty()) {
        for (Count e : state.budgets()) pool += e;
    } else {
        for (Colour c : allowed) pool += state.budget(c);
    }
    const unsigned __int128 threshold = static_cast<unsigned __int128>(t) * size *
                                        (static_cast<unsigned __int128>(count) + colours);
    if (pool <= threshold)
        throw SplitError(SplitErrorKind::BatchInfeasible,
                         "allowed budgets " + std::to_string(static_cast<unsigned long long>(pool)) +
                             " do not exceed t*n'*(count+|allowed|) = " +
                             std::to_string(static_cast<unsigned long long>(threshold)));
    if (!state.is_active(b)) throw SplitError(SplitErrorKind::UnknownBlock, "block " + show(b) + " is not active");
    for (int step = 0; step < count; ++step) {
        const int cur = b.size();
        const Count cost = static_cast<Count>(t) * static_cast<Count>(cur - t);
        const Colour c = state.best_colour(cost, allowed);
        if (c == kNoColour) throw std::logic_error("batch capacity argument failed on block " + show(b));
        if (t <= cur / 2) {
            state.standard_step(b, t, c);
            if (split_off) split_off->push_back({b.hi - t + 1, b.hi});
            b.hi -= t;
        } else {
            // Same crossing edges, addressed from the other side: the top
            // cur - t vertices continue and the bottom t are split off.
            const int other = cur - t;
            state.standard_step(b, other, c);
            if (split_off) split_off->push_back({b.lo, b.hi - other});
            b.lo = b.hi - other + 1;
        }
    }
    return b;
}

Colouring realize(const SplitCertificate& cert) {
    Colouring col(cert.n, cert.k);
    std::map<Vertex, Vertex> active{{1, cert.n}};
    for (std::size_t i = 0; i < cert.steps.size(); ++i) {
        const Step& s = cert.steps[i];
        auto it = active.find(s.lo);
        if (it == active.end() || it->second != s.hi || s.t < 1 || s.t > (s.hi - s.lo + 1) / 2)
            throw std::invalid_argument("certificate step " + std::to_string(i + 1) + " is not a valid split");
        it->second = s.hi - s.t;
        active.emplace(s.hi - s.t + 1, s.hi);
        for (Vertex u = s.lo; u <= s.hi - s.t; ++u)
            for (Vertex v = s.hi - s.t + 1; v <= s.hi; ++v) col.set(u, v, s.colour);
    }
    return col;
}

}  // namespace rainbow
