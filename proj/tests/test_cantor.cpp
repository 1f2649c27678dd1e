#include "cfspec/cantor.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace cfspec;

namespace {

QuadIrr cf(const std::string& s) { return parse_cf(s).value(); }

std::vector<CantorSpec> sample_specs() {
    return {
        CantorSpec::k4(Word{1, 4}), CantorSpec::k4(Word{1, 3}), CantorSpec::k4(Word{2}),
        CantorSpec::k4(Word{4, 1}), CantorSpec::k4(Word{3, 2, 1}), CantorSpec::c(Word{}, 4),
        CantorSpec::c(Word{1, 4}, 4), CantorSpec::c(Word{2, 5}, 5), CantorSpec::c(Word{}, 3),
    };
}

}  // namespace

TEST(RootInterval, TypeSelectionByLastLetter) {
    // prefix (1,3): last letter 3 -> first type
    StageNode n13 = root_interval(CantorSpec::k4(Word{1, 3}));
    EXPECT_TRUE(n13.first_type);
    EXPECT_EQ(n13.lo(), cf("[0; 1 3 4 (1 3)~]"));
    EXPECT_EQ(n13.hi(), cf("[0; 1 3 (1 3)~]"));
    // prefix (1,4): first type as well
    StageNode n14 = root_interval(CantorSpec::k4(Word{1, 4}));
    EXPECT_TRUE(n14.first_type);
    EXPECT_EQ(n14.lo(), cf("[0; 1 4 4 (1 3)~]"));
    // prefix (2): second type, odd length mirrors the endpoint tails
    StageNode n2 = root_interval(CantorSpec::k4(Word{2}));
    EXPECT_FALSE(n2.first_type);
    EXPECT_EQ(n2.lo(), cf("[0; 2 (1 3)~]"));
    EXPECT_EQ(n2.hi(), cf("[0; 2 (3 1)~]"));
    // C variant, prefix (1,4), k = 4
    StageNode c14 = root_interval(CantorSpec::c(Word{1, 4}, 4));
    EXPECT_EQ(c14.lo(), cf("[0; 1 4 (4 1)~]"));
    EXPECT_EQ(c14.hi(), cf("[0; 1 4 (1 4)~]"));
}

TEST(Subdivide, ChildAndGapCountsAndOrder) {
    Subdivision f = subdivide(root_interval(CantorSpec::k4(Word{1, 4})));  // even, first type
    ASSERT_EQ(f.children.size(), 4u);
    ASSERT_EQ(f.gaps.size(), 3u);
    // left to right: I4 O3 I3 O2 I2 O1 I1
    EXPECT_EQ(f.children[0].last_letter(), 4);
    EXPECT_EQ(f.children[3].last_letter(), 1);
    EXPECT_EQ(f.gaps[0].label, 3);
    EXPECT_EQ(f.gaps[2].label, 1);
    EXPECT_EQ(f.gaps[2].lo, cf("[0; 1 4 2 (3 1)~]"));
    EXPECT_EQ(f.gaps[2].hi, cf("[0; 1 4 1 (1 3)~]"));

    Subdivision s = subdivide(root_interval(CantorSpec::k4(Word{4, 1})));  // even, second type
    ASSERT_EQ(s.children.size(), 3u);
    ASSERT_EQ(s.gaps.size(), 2u);
    EXPECT_EQ(s.children[0].last_letter(), 3);

    Subdivision odd = subdivide(root_interval(CantorSpec::k4(Word{2})));  // odd, second type
    ASSERT_EQ(odd.children.size(), 3u);
    EXPECT_EQ(odd.children[0].last_letter(), 1);  // ascending for odd parity
    EXPECT_EQ(odd.gaps[0].label, 1);

    Subdivision c5 = subdivide(root_interval(CantorSpec::c(Word{1}, 5)));
    ASSERT_EQ(c5.children.size(), 5u);
    ASSERT_EQ(c5.gaps.size(), 4u);
}

TEST(Subdivide, PartitionInvariantEverywhere) {
    int nodes = 0;
    for (const auto& spec : sample_specs()) {
        int depth = spec.variant == Variant::K4 ? 5 : 4;
        explore(spec, depth, [&](const Subdivision& s) {
            ++nodes;
            ASSERT_TRUE(partition_check(s)) << s.parent.word.str();
        });
    }
    EXPECT_GT(nodes, 1000);
}

TEST(Subdivide, OrientationMatchesParityRule) {
    CantorSpec spec = CantorSpec::k4(Word{1, 4});
    explore(spec, 3, [&](const Subdivision& s) {
        for (const auto& c : s.children) {
            ASSERT_EQ(quad_compare(c.lo(), c.hi()), Ordering::LT);
        }
    });
}

TEST(Subdivide, BetaRangeForWordsEndingInFour) {
    for (const auto& spec : sample_specs()) {
        if (spec.variant != Variant::K4) continue;
        explore(spec, 4, [&](const Subdivision& s) {
            if (s.parent.last_letter() == 4) {
                Rat b = s.parent.beta();
                EXPECT_GE(b, Rat(1, 5)) << s.parent.word.str();
                EXPECT_LE(b, Rat(1, 4)) << s.parent.word.str();
            }
        });
    }
}

TEST(GapMonotonicity, HoldsAtExploredNodes) {
    for (const auto& spec : sample_specs()) {
        explore(spec, 3, [&](const Subdivision& parent) {
            for (const auto& c : parent.children) {
                Subdivision child = subdivide(c);
                EXPECT_TRUE(gap_monotonicity_check(child, parent)) << c.word.str();
            }
        });
    }
}

TEST(GapMonotonicity, AdjacencyIsTheRightComparison) {
    // At word (4) with child letter 1, the child's largest gap exceeds the
    // parent's smallest gap O^3 but stays below the adjacent gap O^1; the
    // bridge identification only needs the adjacent comparison.
    Subdivision parent = subdivide(root_interval(CantorSpec::k4(Word{4})));
    const StageNode* child1 = nullptr;
    for (const auto& c : parent.children)
        if (c.last_letter() == 1) child1 = &c;
    ASSERT_NE(child1, nullptr);
    Subdivision child = subdivide(*child1);
    QuadIrr child_o1(0);
    for (const auto& g : child.gaps)
        if (child_o1 < g.length()) child_o1 = g.length();
    QuadIrr parent_o3(0), parent_o1(0);
    for (const auto& g : parent.gaps) {
        if (g.label == 3) parent_o3 = g.length();
        if (g.label == 1) parent_o1 = g.length();
    }
    EXPECT_GT(child_o1, parent_o3);  // the "smallest parent gap" bound fails here
    EXPECT_LT(child_o1, parent_o1);  // the adjacent-gap bound holds
    EXPECT_TRUE(gap_monotonicity_check(child, parent));
}

TEST(ClosedForm, FloorsAndDominanceCertify) {
    ClosedFormFloor k4 = closed_form_thickness_floor(Variant::K4, 4, rat_from_decimal("1.03"));
    EXPECT_TRUE(k4.holds);
    EXPECT_GT(k4.floor, rat_from_decimal("1.03"));
    for (int k = 4; k <= 8; ++k) {
        ClosedFormFloor c = closed_form_thickness_floor(Variant::C, k, Rat(1));
        EXPECT_TRUE(c.holds) << k;
        EXPECT_GT(c.floor, Rat(1)) << k;
    }
    EXPECT_TRUE(closed_form_gap_dominance(Variant::K4, 4));
    EXPECT_TRUE(closed_form_gap_dominance(Variant::C, 4));
    EXPECT_TRUE(closed_form_gap_dominance(Variant::C, 7));
}

TEST(Thickness, K4AboveTheoremBound) {
    ThicknessBound t = thickness_lower_bound(CantorSpec::k4(Word{1, 4}), 6, rat_from_decimal("1.03"));
    EXPECT_GT(t.tau_lower, rat_from_decimal("1.03"));
    EXPECT_TRUE(t.closed_form_ok);
    ClosedFormFloor floor = closed_form_thickness_floor(Variant::K4, 4, rat_from_decimal("1.03"));
    EXPECT_GE(t.explored_inf, floor.floor);
}

TEST(Thickness, CVariantAboveOne) {
    for (int k = 4; k <= 6; ++k) {
        ThicknessBound t = thickness_lower_bound(CantorSpec::c(Word{1}, k), 4, Rat(1));
        EXPECT_GT(t.tau_lower, Rat(1)) << k;
    }
}

TEST(HullAndExtremes, KnownEndpoints) {
    // C(4) with empty prefix: max = B_4, min = A_4
    Extremes c4 = hull_and_extremes(CantorSpec::c(Word{}, 4));
    EXPECT_EQ(c4.max, QuadIrr(-2, 2, 1, 2));
    EXPECT_EQ(c4.min, tail_value(TailSpec(Word{}, Word{4, 1})));
    // K(1,3): largest gap is the root O^1 with the known endpoint templates
    Extremes k13 = hull_and_extremes(CantorSpec::k4(Word{1, 3}));
    EXPECT_EQ(k13.largest_gap.label, 1);
    EXPECT_EQ(k13.largest_gap.lo, cf("[0; 1 3 2 (3 1)~]"));
    EXPECT_EQ(k13.largest_gap.hi, cf("[0; 1 3 1 (1 3)~]"));
    EXPECT_EQ(k13.max, cf("[0; (1 3)~]"));  // preperiod folds into the period
}

TEST(BruteForceCover, ConsistencyNestingComplement) {
    CantorSpec spec = CantorSpec::k4(Word{1, 4});
    auto depth1 = brute_force_cover(spec, 1);
    Subdivision s = subdivide(root_interval(spec));
    ASSERT_EQ(depth1.size(), s.children.size());
    for (std::size_t i = 0; i < depth1.size(); ++i) {
        EXPECT_TRUE(depth1[i].contains(enclose(s.children[i].lo(), 128)));
        EXPECT_TRUE(depth1[i].contains(enclose(s.children[i].hi(), 128)));
    }
    // nesting: every depth-3 interval lies inside some depth-2 interval
    auto d2 = brute_force_cover(spec, 2), d3 = brute_force_cover(spec, 3);
    for (const auto& fine : d3) {
        bool inside = false;
        for (const auto& coarse : d2)
            if (coarse.contains(fine)) inside = true;
        EXPECT_TRUE(inside);
    }
    // gap midpoints fall in the complement of the deeper cover
    for (const auto& g : s.gaps) {
        Rat mid = (enclose(g.lo, 128).hi + enclose(g.hi, 128).lo) / 2;
        for (const auto& iv : d3) EXPECT_FALSE(iv.contains(mid));
    }
    EXPECT_THROW(brute_force_cover(spec, 15), CapExceeded);
}

TEST(BruteForceCover, NodeCounts) {
    // root (1,4): 4 children; letters 3,4 give 4 grandchildren, letters 1,2 give 3
    EXPECT_EQ(brute_force_cover(CantorSpec::k4(Word{1, 4}), 2).size(), 14u);
    EXPECT_EQ(brute_force_cover(CantorSpec::c(Word{}, 5), 2).size(), 25u);
}
