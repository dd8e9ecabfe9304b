#include "rainbow/staged.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace rainbow {

namespace {

int clamp_to_int(long double x) {
    if (!(x > 0)) return 0;
    if (x > 1e9L) return 1'000'000'000;
    return static_cast<int>(std::floor(x));
}

std::string fmt(long double x) {
    std::ostringstream ss;
    ss.precision(6);
    ss << static_cast<double>(x);
    return ss.str();
}

std::string range(std::size_t first, std::size_t last) {
    if (last < first) return "none";
    return std::to_string(first) + ".." + std::to_string(last);
}

// Largest c <= floor((x-1)/2) with c(x-c) <= budget; 0 if none.
int max_step_size(int x, Count budget) {
    int lo = 0, hi = (x - 1) / 2;
    while (lo < hi) {
        const int mid = lo + (hi - lo + 1) / 2;
        if (static_cast<Count>(mid) * static_cast<Count>(x - mid) <= budget)
            lo = mid;
        else
            hi = mid - 1;
    }
    return lo;
}

}  // namespace

StagePlan plan_stages(int n, int k, const StageConstants& constants) {
    if (k < 2) throw std::invalid_argument("staged plan needs k >= 2");
    StagePlan plan;
    const long double kd = k;
    const long double lk = std::log(kd);
    const long double beta = constants.beta;
    plan.r_raw = beta * std::sqrt(kd) / (30.0L * std::sqrt(lk));
    plan.c_raw = std::pow(kd, 0.75L) / std::pow(lk, 0.75L);
    plan.c_count = static_cast<int>(std::ceil(std::pow(kd, 0.75L) * std::pow(lk, 0.25L)));
    plan.large_colour_threshold = beta * beta * std::pow(kd, 2.25L) / std::pow(lk, 1.25L);
    plan.small_colour_threshold = beta * beta * kd * kd / (30.0L * lk);
    plan.stop_threshold = 2.0L * std::sqrt(beta) * std::pow(kd, 1.25L) / std::pow(lk, 0.25L);

    const Count edges = choose2(static_cast<Count>(n));
    const int third = n / (3 * k);
    // Largest r with 2k * r * n < C(n,2), so that the reservoir batch is feasible.
    const Count batch_cap = edges == 0 ? 0 : (edges - 1) / (2 * static_cast<Count>(k) * static_cast<Count>(n));
    const int r_cap = static_cast<int>(std::min<Count>(static_cast<Count>(std::max(third, 0)), batch_cap));

    const int r_floor = clamp_to_int(plan.r_raw);
    plan.r = std::max(1, std::min(r_floor, r_cap));
    if (plan.r != r_floor)
        plan.clamps.push_back("r " + std::to_string(r_floor) + " -> " + std::to_string(plan.r) +
                              " (bounds [1, min(floor(n/3k)=" + std::to_string(third) +
                              ", reservoir batch cap=" + std::to_string(batch_cap) + ")])");

    const int c_floor = clamp_to_int(plan.c_raw);
    plan.c = std::max(1, std::min(c_floor, third));
    if (plan.c != c_floor)
        plan.clamps.push_back("c " + std::to_string(c_floor) + " -> " + std::to_string(plan.c) + " (bounds [1, floor(n/3k)=" +
                              std::to_string(third) + "])");
    return plan;
}

SplitCertificate construct_staged(const DistributionSequence& seq, const StageConstants& constants) {
    if (!is_n_good(seq)) throw std::invalid_argument("construct_staged needs an n-good sequence");
    const int n = seq.n();
    const int k = seq.k();
    if (k < 2) throw StagedInfeasible(1, "k >= 2 required (log k must be positive)");
    if (n < 2 * k) throw StagedInfeasible(3, "n = " + std::to_string(n) + " < 2k = " + std::to_string(2 * k));

    const StagePlan plan = plan_stages(n, k, constants);
    SplitState state(seq);
    state.add_metadata("strategy staged");
    state.add_metadata("constants alpha=" + std::to_string(constants.alpha_num) + "/" +
                       std::to_string(constants.alpha_den) + " beta=" + fmt(constants.beta) + " log=natural");
    state.add_metadata("r raw=" + fmt(plan.r_raw) + " used=" + std::to_string(plan.r));
    state.add_metadata("c raw=" + fmt(plan.c_raw) + " used=" + std::to_string(plan.c) +
                       " count=" + std::to_string(plan.c_count));
    for (const auto& clamp : plan.clamps) state.add_metadata("clamp " + clamp);

    Block main{1, n};
    std::vector<Block> reservoir;
    std::vector<Block> cushion_blocks;

    // Stage 1: k steps of size r build the reservoir.
    try {
        main = batch_steps(state, main, plan.r, k, {}, &reservoir);
    } catch (const SplitError& e) {
        throw StagedInfeasible(1, e.what());
    }
    state.add_metadata("stage 1 steps " + range(1, state.step_count()));
    const std::size_t stage2_first = state.step_count() + 1;

    // Stage 2: build the cushion collection.
    const Count total_edges = choose2(static_cast<Count>(n));
    std::vector<Colour> large, small, middle;
    Count large_sum = 0;
    for (Colour j = 1; j <= k; ++j) {
        const long double e = static_cast<long double>(state.budget(j));
        if (e >= plan.large_colour_threshold) {
            large.push_back(j);
            large_sum += state.budget(j);
        } else if (e <= plan.small_colour_threshold) {
            small.push_back(j);
        } else {
            middle.push_back(j);
        }
    }
    if (!large.empty() && 10 * large_sum >= total_edges) {
        try {
            main = batch_steps(state, main, plan.c, plan.c_count, large, &cushion_blocks);
        } catch (const SplitError& e) {
            throw StagedInfeasible(2, std::string("case 1: ") + e.what());
        }
        state.add_metadata("stage 2 case 1 steps " + range(stage2_first, state.step_count()));
    } else {
        std::vector<Colour> exhaust = large;
        exhaust.insert(exhaust.end(), small.begin(), small.end());
        std::stable_sort(exhaust.begin(), exhaust.end(), [&](Colour a, Colour b) {
            return state.budget(a) != state.budget(b) ? state.budget(a) < state.budget(b) : a < b;
        });
        for (Colour j : exhaust) {
            while (main.size() >= 2 && state.budget(j) >= static_cast<Count>(main.size() - 1)) {
                state.simple_step(main, j);
                main.hi -= 1;
            }
        }
        const std::size_t process_first = state.step_count() + 1;
        for (Colour j : middle) {
            const int x = main.size();
            if (static_cast<long double>(x) < plan.stop_threshold) break;
            const int step = max_step_size(x, state.budget(j));
            if (step == 0) continue;
            state.standard_step(main, step, j);
            cushion_blocks.push_back({main.hi - step + 1, main.hi});
            main.hi -= step;
        }
        state.add_metadata("stage 2 case 2 simple steps " + range(stage2_first, process_first - 1) +
                           " maximal steps " + range(process_first, state.step_count()));
    }
    const std::size_t stage3_first = state.step_count() + 1;

    // Stage 3: reduce and drain the large block, then the cushion blocks,
    // then the reservoir by pigeonhole on its largest block.
    try {
        main = reduce_large(state, main);
        if (main.size() >= 2) drain_with_cushion(state, main);
        for (Block b : cushion_blocks)
            if (b.size() >= 2) drain_with_cushion(state, b);
    } catch (const SplitError& e) {
        throw StagedInfeasible(3, e.what());
    }
    while (true) {
        auto largest = std::max_element(reservoir.begin(), reservoir.end(),
                                         [](const Block& a, const Block& b) { return a.size() < b.size(); });
        if (largest == reservoir.end() || largest->size() < 2) break;
        const Colour c = state.best_colour(static_cast<Count>(largest->size() - 1));
        if (c == kNoColour)
            throw StagedInfeasible(3, "no colour with budget >= " + std::to_string(largest->size() - 1) +
                                          " for reservoir block of size " + std::to_string(largest->size()));
        state.simple_step(*largest, c);
        largest->hi -= 1;
    }
    state.add_metadata("stage 3 steps " + range(stage3_first, state.step_count()));
    if (!state.finished()) throw std::logic_error("staged construction left uncoloured edges");
    return state.certificate();
}

}  // namespace rainbow
