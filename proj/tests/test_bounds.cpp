#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "rainbow/bounds.hpp"
#include "rainbow/greedy.hpp"
#include "rainbow/oracle.hpp"
#include "rainbow/search.hpp"
#include "rainbow/split.hpp"

using namespace rainbow;

namespace {

Colouring uniform(int n, int k, Colour c) {
    Colouring col(n, k);
    for (Vertex u = 1; u <= n; ++u)
        for (Vertex v = u + 1; v <= n; ++v) col.set(u, v, c);
    return col;
}

BigInt repeated_product(int base, int times) {
    BigInt x = 1;
    for (int i = 0; i < times; ++i) x *= base;
    return x;
}

}  // namespace

TEST(Clash, Examples) {
    const auto distinct = clash_bound_check(DistributionSequence(5, std::vector<Count>(10, 1)), 3);
    ASSERT_TRUE(distinct);
    EXPECT_EQ(distinct->kind, CertificateKind::RainbowKmForced);
    EXPECT_EQ(distinct->margin_num, 60);
    EXPECT_EQ(distinct->margin_den, 6);

    EXPECT_TRUE(clash_bound_check(DistributionSequence(6, {3, 3, 3, 3, 3}), 3));
    EXPECT_FALSE(clash_bound_check(DistributionSequence(6, {15}), 3));
    EXPECT_THROW(clash_bound_check(DistributionSequence(4, {6}), 5), std::invalid_argument);
}

TEST(Clash, FiveThreesIsUnrealizable) {
    const OracleResult r = is_realizable(DistributionSequence(6, {3, 3, 3, 3, 3}), TargetGraph::complete(3));
    EXPECT_EQ(r.verdict, Verdict::Unrealizable);
}

TEST(Sampling, Examples) {
    Colouring distinct(6, 15);
    Colour c = 1;
    for (Vertex u = 1; u <= 6; ++u)
        for (Vertex v = u + 1; v <= 6; ++v) distinct.set(u, v, c++);
    EXPECT_TRUE(sample_rainbow_km(distinct, 3, 1));
    EXPECT_FALSE(sample_rainbow_km(uniform(6, 1, 1), 3, 1000));
}

TEST(Sampling, SeedIsReproducible) {
    std::mt19937_64 rng(4);
    Colouring col(12, 5);
    std::uniform_int_distribution<int> pick(1, 5);
    for (Vertex u = 1; u <= 12; ++u)
        for (Vertex v = u + 1; v <= 12; ++v) col.set(u, v, pick(rng));
    EXPECT_EQ(sample_rainbow_km(col, 3, 50, 9), sample_rainbow_km(col, 3, 50, 9));
}

TEST(Sampling, FindsTrianglesInColouringsPassingTheClashBound) {
    std::mt19937_64 rng(8);
    int hits = 0, eligible = 0;
    for (int trial = 0; trial < 100; ++trial) {
        // Random colouring of K_12 with 12 colours: far below the clash bound.
        Colouring col(12, 12);
        std::uniform_int_distribution<int> pick(1, 12);
        for (Vertex u = 1; u <= 12; ++u)
            for (Vertex v = u + 1; v <= 12; ++v) col.set(u, v, pick(rng));
        const DistributionSequence seq(12, colour_counts(col));
        if (!clash_bound_check(seq, 3)) continue;
        ++eligible;
        if (sample_rainbow_km(col, 3, 200, trial + 1)) ++hits;
    }
    EXPECT_GE(eligible, 50);
    EXPECT_GE(hits * 100, eligible * 95);
}

TEST(HardSequence, KOneThousand) {
    const HardSequence h = triangle_hard_sequence(1000);
    EXPECT_EQ(h.n, 1203);
    EXPECT_EQ(h.b, 500);
    EXPECT_EQ(h.a, 946);
    EXPECT_EQ(h.c, 3);
    EXPECT_TRUE(is_n_good(h.seq));
    EXPECT_EQ(h.seq.k(), 1000);
    EXPECT_EQ(h.seq[1], 947u);
    EXPECT_EQ(h.seq[4], 946u);
    EXPECT_EQ(h.seq[1000], 500u);
}

TEST(HardSequence, RangeErrorBelowValidity) {
    EXPECT_THROW(triangle_hard_sequence(100), RangeError);
    EXPECT_THROW(triangle_hard_sequence(284), RangeError);
    EXPECT_EQ(triangle_hard_sequence(283).a, 0);
}

TEST(TriangleCheck, KOneThousandHasPositiveMargin) {
    const auto cert = triangle_infeasibility_check(1000);
    ASSERT_TRUE(cert);
    EXPECT_GT(cert->margin_num, 0);
    // b^2/3 - 4 * 947 * log(1203/500) = 80007.5996...
    const BigInt whole = cert->margin_num / cert->margin_den;
    EXPECT_EQ(whole, 80007);
    EXPECT_TRUE(reverify(*cert));
}

TEST(TriangleCheck, FirstCertifyingK) {
    EXPECT_FALSE(triangle_infeasibility_check(283));
    EXPECT_FALSE(triangle_infeasibility_check(290));
    EXPECT_TRUE(triangle_infeasibility_check(293));
    EXPECT_FALSE(triangle_infeasibility_check(294));
    for (int k = 295; k <= 400; ++k) EXPECT_TRUE(triangle_infeasibility_check(k)) << k;
    const auto cert = triangle_infeasibility_check(300);
    ASSERT_TRUE(cert);
    EXPECT_EQ(cert->n, 217);
    EXPECT_EQ(cert->a, 6);
    EXPECT_EQ(cert->c, 36);
}

TEST(TriangleCheck, FailingConditionsAreNamed) {
    const auto failing = triangle_failing_conditions(283);
    ASSERT_FALSE(failing.empty());
    EXPECT_EQ(failing.front(), "4(a+1) <= 5a");
}

TEST(TreeThreshold, TwoPaths) {
    EXPECT_EQ(tree_threshold(2), BigInt("8916100448256"));
    EXPECT_EQ(tree_threshold(2), repeated_product(12, 12));
    EXPECT_EQ(tree_threshold(3), repeated_product(18, 18));
    for (int m = 2; m < 8; ++m) EXPECT_LT(tree_threshold(m), tree_threshold(m + 1));
}

TEST(TreeForced, Examples) {
    EXPECT_FALSE(tree_forced_check(DistributionSequence(5, {10}), 2));
    // k >= 2 D(2) and C(n,2) >= 2 D(2): balanced entries are at most 2.
    const std::uint64_t k = 2 * 8916100448256ull;
    const SequenceProfile p = balanced_profile(6'000'000, k);
    const auto cert = tree_forced_check(p, 2);
    ASSERT_TRUE(cert);
    EXPECT_TRUE(reverify(*cert));
    // 1 + C(n,2)/k <= C(n,2)/D holds as an exact rational inequality.
    const BigInt edges = BigInt(6'000'000) * 5'999'999 / 2;
    EXPECT_LE((k + edges) * tree_threshold(2), edges * k);
}

TEST(GeneralLower, KTwoThousand) {
    const GeneralLower g = general_lower_sequence(TargetGraph::complete(3), 2000);
    EXPECT_EQ(g.seq.n(), 74);
    EXPECT_EQ(g.m, 3);
    ASSERT_TRUE(g.certificate);
    // sum C(e_i,2) = 701 against 74*73*72/6 = 64824.
    EXPECT_EQ(g.certificate->margin_num, BigInt(74 * 73 * 72) - 6 * 701);
    EXPECT_TRUE(clash_bound_check(g.seq, 3));
    EXPECT_THROW(general_lower_sequence(TargetGraph::complete(3), 27), RangeError);
}

TEST(Peel, MonochromaticAndRainbow) {
    const PeelTrace t = peel_splitting_process(uniform(5, 1, 1), 1);
    EXPECT_EQ(t.final_size, 1);
    for (const PeelRecord& r : t.records) EXPECT_EQ(r.base_colours, (std::vector<Colour>{1}));
    Colouring tri(3, 3);
    tri.set(1, 2, 1);
    tri.set(1, 3, 2);
    tri.set(2, 3, 3);
    EXPECT_THROW(peel_splitting_process(tri, 1), NotGallai);
}

TEST(Peel, TraceOnSimpleStepColourings) {
    // Peeled edges telescope: sum of t(x-t) + C(t,2) is C(n,2) - C(final,2).
    for (int n = 3; n <= 12; ++n) {
        // Simple steps cycle through three colours; the sequence is read off the plan.
        std::vector<Count> e(3, 0);
        for (int hi = n; hi >= 2; --hi) e[hi % 3] += hi - 1;
        SplitState s(DistributionSequence(n, e));
        for (int hi = n; hi >= 2; --hi) s.simple_step({1, hi}, hi % 3 + 1);
        const Colouring col = realize(s.certificate());
        for (int stop : {1, 2, 3}) {
            const PeelTrace t = peel_splitting_process(col, stop);
            int x = n;
            for (const PeelRecord& r : t.records) {
                EXPECT_EQ(r.x, x);
                EXPECT_LE(2 * r.t, r.x);
                x -= r.t;
            }
            EXPECT_EQ(x, t.final_size);
            EXPECT_LE(t.final_size, stop);
            Count base = 0, inside = 0;
            for (const PeelRecord& r : t.records) {
                base += r.base_edges;
                inside += choose2(r.t);
            }
            EXPECT_EQ(base, t.total_base_edges);
            EXPECT_EQ(base + inside, choose2(n) - choose2(t.final_size));
        }
    }
}

TEST(Peel, ClaimHoldsWhenFrequencyHypothesisApplies) {
    const GreedyResult g = construct_greedy(DistributionSequence(8, {10, 9, 9}));
    ASSERT_EQ(g.status, GreedyStatus::Certificate);
    const PeelTrace t = peel_splitting_process(realize(*g.certificate), 1);
    EXPECT_FALSE(peel_claim_violation(t, 9));
    EXPECT_FALSE(peel_claim_violation(t, 0));
}

TEST(BoundCertificate, RoundTrip) {
    for (const auto& cert : {*triangle_infeasibility_check(1000),
                             *clash_bound_check(DistributionSequence(5, std::vector<Count>(10, 1)), 3),
                             *tree_forced_check(balanced_profile(6'000'000, 2 * 8916100448256ull), 2)}) {
        std::stringstream io;
        write_bound_certificate(io, cert);
        const InfeasibilityCertificate back = read_bound_certificate(io);
        EXPECT_EQ(back.kind, cert.kind);
        EXPECT_EQ(back.margin_num, cert.margin_num);
        EXPECT_EQ(back.runs, cert.runs);
        EXPECT_TRUE(reverify(back));
    }
}

TEST(BoundCertificate, TamperingIsDetected) {
    InfeasibilityCertificate cert = *triangle_infeasibility_check(1000);
    cert.a += 1;
    EXPECT_FALSE(reverify(cert));
    InfeasibilityCertificate clash = *clash_bound_check(DistributionSequence(5, std::vector<Count>(10, 1)), 3);
    clash.margin_num += 1;
    EXPECT_FALSE(reverify(clash));
    std::istringstream junk("Bogus 1 2 3\n");
    EXPECT_THROW(read_bound_certificate(junk), std::runtime_error);
}
