#include <gtest/gtest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "rainbow/oracle.hpp"
#include "rainbow/search.hpp"

using namespace rainbow;

namespace {

void expect_witness(const OracleResult& r, const DistributionSequence& seq, const TargetGraph& h) {
    ASSERT_TRUE(r.witness);
    const auto counts = colour_counts(*r.witness);
    EXPECT_TRUE(std::equal(counts.begin(), counts.end(), seq.counts().begin()));
    EXPECT_EQ(find_rainbow_subgraph(*r.witness, h).status, SearchStatus::None);
}

}  // namespace

TEST(Realizable, Examples) {
    const TargetGraph k3 = TargetGraph::complete(3);
    EXPECT_EQ(is_realizable(DistributionSequence(3, {1, 1, 1}), k3).verdict, Verdict::Unrealizable);
    const DistributionSequence two(4, {3, 3});
    const OracleResult r = is_realizable(two, k3);
    ASSERT_EQ(r.verdict, Verdict::Realizable);
    expect_witness(r, two, k3);
    const DistributionSequence mid(5, {4, 3, 3});
    const OracleResult m = is_realizable(mid, k3);
    ASSERT_NE(m.verdict, Verdict::Inconclusive);
    if (m.verdict == Verdict::Realizable) {
        expect_witness(m, mid, k3);
        EXPECT_FALSE(find_rainbow_triangle(*m.witness));
    }
}

TEST(Realizable, BudgetIsInconclusiveNotFalse) {
    OracleOptions tiny;
    tiny.node_budget = 3;
    EXPECT_EQ(is_realizable(DistributionSequence(6, {5, 5, 5}), TargetGraph::complete(3), tiny).verdict,
              Verdict::Inconclusive);
}

TEST(Realizable, SingleEdgeTargetIsAlwaysRainbow) {
    const TargetGraph k2 = TargetGraph::complete(2);
    EXPECT_EQ(is_realizable(DistributionSequence(4, {6}), k2).verdict, Verdict::Unrealizable);
    EXPECT_EQ(is_realizable(DistributionSequence(4, {3, 3}), k2).verdict, Verdict::Unrealizable);
}

TEST(Realizable, GenericTargetsAgreeWithWitnessSearch) {
    std::mt19937_64 rng(13);
    for (const TargetGraph& h : {TargetGraph::cycle(4), TargetGraph::complete(4), TargetGraph::path(3)}) {
        for (int trial = 0; trial < 15; ++trial) {
            const int n = 4 + trial % 2;
            const int k = 2 + trial % 3;
            std::vector<Count> e(k, 0);
            std::uniform_int_distribution<int> pick(0, k - 1);
            for (Count i = 0; i < choose2(n); ++i) ++e[pick(rng)];
            const DistributionSequence seq(n, e);
            const OracleResult r = is_realizable(seq, h);
            ASSERT_NE(r.verdict, Verdict::Inconclusive);
            if (r.verdict == Verdict::Realizable) expect_witness(r, seq, h);
        }
    }
}

TEST(Realizable, SymmetryPruningDoesNotChangeDecisions) {
    std::mt19937_64 rng(17);
    OracleOptions plain;
    plain.colour_symmetry = false;
    const TargetGraph k3 = TargetGraph::complete(3);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 3 + trial % 3;
        const int k = 2 + trial % 4;
        std::vector<Count> e(k, 0);
        std::uniform_int_distribution<int> pick(0, k - 1);
        for (Count i = 0; i < choose2(n); ++i) ++e[pick(rng)];
        const DistributionSequence seq(n, e);
        EXPECT_EQ(is_realizable(seq, k3).verdict, is_realizable(seq, k3, plain).verdict);
    }
}

TEST(Standard, Examples) {
    EXPECT_FALSE(is_realizable_standard(DistributionSequence(3, {1, 1, 1})));
    EXPECT_FALSE(is_realizable_standard(DistributionSequence(4, {2, 2, 2})));
    EXPECT_TRUE(is_realizable_standard(DistributionSequence(9, {36})));
    EXPECT_TRUE(is_realizable_standard(DistributionSequence(4, {3, 3})));
}

TEST(Standard, ImpliesGallai) {
    const TargetGraph k3 = TargetGraph::complete(3);
    for (int n = 2; n <= 6; ++n)
        for (const auto& e : nonincreasing_sequences(n, 3)) {
            const DistributionSequence seq(n, e);
            if (is_realizable_standard(seq)) EXPECT_EQ(is_realizable(seq, k3).verdict, Verdict::Realizable);
        }
}

TEST(Enumeration, ReverseLexNonIncreasing) {
    const auto seqs = nonincreasing_sequences(3, 3);
    const std::vector<std::vector<Count>> expect{{3, 0, 0}, {2, 1, 0}, {1, 1, 1}};
    EXPECT_EQ(seqs, expect);
}

TEST(ExactG, TwoColoursAreAlwaysRealizable) {
    const GReport r = exact_g(TargetGraph::complete(3), 2, 6);
    EXPECT_FALSE(r.partial);
    ASSERT_TRUE(r.least_all_realizable);
    EXPECT_EQ(*r.least_all_realizable, 2);
}

TEST(ExactG, ThreeColoursMatchTheFixture) {
    const GReport r = exact_g(TargetGraph::complete(3), 3, 6);
    EXPECT_FALSE(r.partial);
    std::ostringstream table;
    write_table(table, r);
    std::ifstream in(std::string(RAINBOW_FIXTURES) + "/k3_k3_table.txt");
    ASSERT_TRUE(in);
    std::stringstream fixture;
    fixture << in.rdbuf();
    EXPECT_EQ(table.str(), fixture.str());
    ASSERT_TRUE(r.least_all_realizable);
    EXPECT_EQ(*r.least_all_realizable, 5);
}

TEST(ExactG, BudgetMakesThePartialFlag) {
    ExactGOptions opts;
    opts.total_budget = 1000;
    const GReport r = exact_g(TargetGraph::complete(3), 3, 20, opts);
    EXPECT_TRUE(r.partial);
    EXPECT_FALSE(r.least_all_realizable);
    std::ostringstream table;
    write_table(table, r);
    EXPECT_NE(table.str().find("# PARTIAL"), std::string::npos);
}
