#include "cfspec/sums.hpp"

#include <gtest/gtest.h>

using namespace cfspec;

namespace {
QuadIrr cf(const std::string& s) { return parse_cf(s).value(); }
}  // namespace

TEST(Unions, TildeKStructure) {
    UnionSet tk = UnionSet::tilde_k(Word{1, 4});
    ASSERT_EQ(tk.pieces.size(), 5u);
    UnionStructure s = analyze(tk);
    EXPECT_TRUE(s.certified);
    // hull: [0;1,4,4,(1 3)~] .. [0;1,4,1,2,(1 3)~]
    EXPECT_EQ(s.min, cf("[0; 1 4 4 (1 3)~]"));
    EXPECT_EQ(s.max, cf("[0; 1 4 1 2 (1 3)~]"));
    // the tilde union itself is not thick (its 1-branch pieces are small
    // next to the O^1 gap); the sum engine decomposes it instead
    EXPECT_GT(s.tau_floor, Rat(0));
}

TEST(Unions, TildeCStructure) {
    UnionSet tc = UnionSet::tilde_c(Word{1, 5}, 5);
    ASSERT_EQ(tc.pieces.size(), 6u);  // j = 2..4 and 1r for r = 1..3
    UnionStructure s = analyze(tc);
    EXPECT_TRUE(s.certified);
    EXPECT_EQ(s.min, cf("[0; 1 5 (4 1)~]"));
    EXPECT_EQ(s.max, cf("[0; 1 5 1 3 (1 4)~]"));
    EXPECT_GT(s.tau_floor, Rat(1));
}

TEST(Newhouse, AppliesToThickPairs) {
    UnionSet a = UnionSet::single(CantorSpec::k4(Word{1, 4}));
    UnionSet b = UnionSet::single(CantorSpec::k4(Word{1, 3}));
    NewhouseCertificate c = newhouse_applicable(a, b);
    EXPECT_TRUE(c.applicable);
    EXPECT_GE(c.tau_product_lower, Rat(1));
}

TEST(Newhouse, RejectsSparsePairs) {
    // two far-apart thin pieces: the internal gap dwarfs the other's hull
    UnionSet sparse = UnionSet::of(
        {CantorSpec::k4(Word{1, 1, 1, 1, 1, 1}), CantorSpec::k4(Word{4, 4, 4, 4, 4, 4})});
    UnionSet other = UnionSet::single(CantorSpec::k4(Word{1, 3}));
    NewhouseCertificate c = newhouse_applicable(other, sparse);
    EXPECT_FALSE(c.applicable);
    EXPECT_FALSE(c.hull_a_exceeds_gap_b);
}

TEST(SumInterval, HeadlineProposition) {
    // K(1,3) + tilde K(1,4) = [1.57041..., 1.61695...]
    SumInterval s = sum_interval(UnionSet::single(CantorSpec::k4(Word{1, 3})),
                                 UnionSet::tilde_k(Word{1, 4}));
    EXPECT_EQ(s.lo, cf("[0; 1 3 4 (1 3)~]") + cf("[0; 1 4 4 (1 3)~]"));
    EXPECT_EQ(s.hi, cf("[0; (1 3)~]") + cf("[0; 1 4 1 2 (1 3)~]"));
    EXPECT_EQ(decimal_string(s.lo, 5), "1.57041");
    EXPECT_EQ(decimal_string(s.hi, 5), "1.61696");  // 1.616958... rounded at 5 places
    // the printed truncations agree within 1e-5
    EXPECT_LT(rat_abs(enclose(s.lo, 64).mid() - rat_from_decimal("1.57041")),
              rat_from_decimal("0.00001"));
    EXPECT_LT(rat_abs(enclose(s.hi, 64).mid() - rat_from_decimal("1.61695")),
              rat_from_decimal("0.00001"));
}

TEST(SumInterval, CatalogClaimsStage1And2) {
    for (int s = 1; s <= 2; ++s) {
        for (const auto& claim : sum_claim_catalog(s)) {
            SumInterval got = sum_interval(claim.lhs, claim.rhs);
            EXPECT_EQ(got.lo, claim.claimed_lo) << claim.id << " s=" << s;
            EXPECT_EQ(got.hi, claim.claimed_hi) << claim.id << " s=" << s;
        }
    }
}

TEST(SumInterval, SingletonTranslation) {
    UnionSet a = UnionSet::single(CantorSpec::c(Word{}, 4));
    SumInterval s = sum_interval(a, a);
    EXPECT_EQ(s.lo, QuadIrr(2) * tail_value(TailSpec(Word{}, Word{4, 1})));
    EXPECT_EQ(s.hi, QuadIrr(2) * tail_value(TailSpec(Word{}, Word{1, 4})));
}

TEST(BruteForceSum, HeadlineClaimHasNoWideGaps) {
    // depth 6 suffices for the unit suite; acceptance reruns at depth 10
    BruteSumReport r = brute_force_sum(UnionSet::single(CantorSpec::k4(Word{1, 3})),
                                       UnionSet::tilde_k(Word{1, 4}), 6, rat_from_decimal("0.001"));
    EXPECT_EQ(r.max_gap, Rat(0));
    ASSERT_EQ(r.cover.size(), 1u);
    QuadIrr lo = cf("[0; 1 3 4 (1 3)~]") + cf("[0; 1 4 4 (1 3)~]");
    QuadIrr hi = cf("[0; (1 3)~]") + cf("[0; 1 4 1 2 (1 3)~]");
    EXPECT_LE(r.cover.front().first, enclose(lo, 96).lo);
    EXPECT_GE(r.cover.front().second, enclose(hi, 96).hi);
}

TEST(BruteForceSum, SyntheticSparsePairKeepsPersistentGap) {
    UnionSet sparse = UnionSet::of(
        {CantorSpec::k4(Word{1, 1, 1, 1, 1, 1}), CantorSpec::k4(Word{4, 4, 4, 4, 4, 4})});
    BruteSumReport r = brute_force_sum(sparse, sparse, 4, rat_from_decimal("0.0001"));
    EXPECT_GT(r.max_gap, rat_from_decimal("0.01"));
}

TEST(BruteForceSum, DepthCap) {
    EXPECT_THROW(brute_force_sum(UnionSet::single(CantorSpec::k4(Word{1, 3})),
                                 UnionSet::single(CantorSpec::k4(Word{1, 3})), 15, Rat(1, 1000)),
                 CapExceeded);
}

TEST(Gluing, ChainK4) {
    GluingReport r = gluing_chain(4, 3);
    ASSERT_EQ(r.stages.size(), 3u);
    // s = 1 overlap pair: tilde_hi = [0;1 4 1 2 (1 3)~] + [0;(1 3)~] > 2 [0;1 4 4 (1 3)~]
    EXPECT_EQ(r.stages[0].tilde_hi, cf("[0; 1 4 1 2 (1 3)~]") + cf("[0; (1 3)~]"));
    EXPECT_EQ(r.stages[0].square_lo, QuadIrr(2) * cf("[0; 1 4 4 (1 3)~]"));
    EXPECT_GT(r.stages[0].tilde_hi, r.stages[0].square_lo);
    EXPECT_EQ(decimal_string(r.stages[0].tilde_hi, 4), "1.6170");  // 1.61695...
    EXPECT_EQ(decimal_string(r.stages[0].square_lo, 4), "1.6160");  // 1.61602...
    // left end of the whole chain sits below sqrt(21) - 3 = 2 [0;(1 3)~]
    EXPECT_LT(r.covered_lo, QuadIrr(-3, 1, 1, 21));
    // the right end climbs toward sqrt(32) - 4
    EXPECT_LT(r.covered_hi, QuadIrr(-4, 1, 1, 32));
    GluingReport longer = gluing_chain(4, 6);
    EXPECT_GT(longer.covered_hi, r.covered_hi);  // monotone approach
    EXPECT_LT(longer.distance_to_top.hi, r.distance_to_top.hi);
}

TEST(Gluing, ChainK5) {
    GluingReport r = gluing_chain(5, 2);
    ASSERT_EQ(r.stages.size(), 2u);
    // in the fractional frame: k + covered_lo <= 1 + sqrt(k^2+2k-3)
    EXPECT_LT(QuadIrr(5) + r.covered_lo, QuadIrr(1) + QuadIrr::sqrt_of(32));
    // the (1,k)-prefixed square piece folds into the periodic tail, so the
    // chain reaches the top of the spectrum exactly
    EXPECT_EQ(r.covered_hi, QuadIrr(-5, 1, 1, 45));
}

TEST(K3Gap, ObstructionInterval) {
    K3GapReport r = k3_gap_check(6);
    EXPECT_TRUE(r.a_lt_b);
    EXPECT_TRUE(r.disjoint);
    EXPECT_TRUE(r.endpoint_in_cover);
    // closed forms: a = (44 sqrt(21) - 61)/89, b = (1217 + sqrt(21))/773
    EXPECT_EQ(r.a, QuadIrr(-61, 44, 89, 21));
    EXPECT_EQ(r.b, QuadIrr(1217, 1, 773, 21));
    EXPECT_EQ(decimal_string(r.a, 7), "1.5801498");
    EXPECT_EQ(decimal_string(r.b, 7), "1.5803138");
}
