#include "cfspec/expr.hpp"
#include "cfspec/interval.hpp"
#include "cfspec/quadirr.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace cfspec;

namespace {

QuadIrr random_quad(std::mt19937_64& rng, Int d) {
    std::uniform_int_distribution<int> small(-30, 30), pos(1, 20);
    return QuadIrr(small(rng), small(rng), pos(rng), d);
}

}  // namespace

TEST(QuadIrr, NormalizationExtractsSquares) {
    QuadIrr x(0, 1, 1, 32);  // sqrt(32)
    EXPECT_EQ(x.q(), 4);
    EXPECT_EQ(x.d(), 2);
    // normalizing twice equals normalizing once
    QuadIrr y(x.p(), x.q(), x.r(), x.d());
    EXPECT_EQ(x, y);
    // B_4 = (-4 + sqrt(32))/2 = -2 + 2 sqrt(2)
    QuadIrr b4(-4, 1, 2, 32);
    EXPECT_EQ(b4, QuadIrr(-2, 2, 1, 2));
}

TEST(QuadIrr, CompareAcrossFields) {
    EXPECT_EQ(quad_compare(QuadIrr::sqrt_of(2), QuadIrr(Rat(3, 2))), Ordering::LT);
    QuadIrr x(5, -3, 7, 13);
    EXPECT_EQ(quad_compare(x, x), Ordering::EQ);
    QuadIrr b4(-4, 1, 2, 32);
    EXPECT_EQ(quad_compare(b4, QuadIrr(0)), Ordering::GT);
    // sqrt(2)+... style two-radical comparisons
    EXPECT_EQ(quad_compare(QuadIrr::sqrt_of(2) + QuadIrr(1), QuadIrr::sqrt_of(5)), Ordering::GT);
    EXPECT_EQ(quad_compare(QuadIrr::sqrt_of(2) + QuadIrr(Rat(4, 5)), QuadIrr::sqrt_of(5)), Ordering::LT);
    EXPECT_EQ(quad_compare(QuadIrr::sqrt_of(8), QuadIrr(2) * QuadIrr::sqrt_of(2)), Ordering::EQ);
}

TEST(QuadIrr, SameFieldArithmetic) {
    QuadIrr a(-1, 1, 2, 5), b(1, 1, 2, 5);  // (sqrt5 -+ 1)/2
    EXPECT_EQ(a + b, QuadIrr::sqrt_of(5));
    QuadIrr c = QuadIrr::sqrt_of(2) - QuadIrr(1), d = QuadIrr::sqrt_of(2) + QuadIrr(1);
    EXPECT_EQ(c * d, QuadIrr(1));
    QuadIrr b4(-2, 2, 1, 2);
    EXPECT_EQ(b4 + b4 + QuadIrr(4), QuadIrr::sqrt_of(32));
    EXPECT_THROW(quad_arith(QuadIrr::sqrt_of(2), QuadIrr::sqrt_of(3), ArithOp::Add), FieldMismatch);
    EXPECT_THROW(QuadIrr(1) / QuadIrr(0), DivisionByZero);
    // division via conjugates
    EXPECT_EQ(QuadIrr(1) / d, c);
}

TEST(QuadIrr, FloorAndDecimal) {
    EXPECT_EQ(quad_floor(QuadIrr::sqrt_of(2)), 1);
    EXPECT_EQ(quad_floor(-QuadIrr::sqrt_of(2)), -2);
    EXPECT_EQ(quad_floor(QuadIrr(Rat(7, 3))), 2);
    EXPECT_EQ(decimal_string(QuadIrr::sqrt_of(2), 8), "1.41421356");
    EXPECT_EQ(decimal_string(QuadIrr(Rat(2, 3)), 6), "0.666667");
    QuadIrr b4(-2, 2, 1, 2);
    EXPECT_EQ(decimal_string(b4, 7), "0.8284271");
}

TEST(CertInterval, EncloseWidthAndNesting) {
    QuadIrr r2 = QuadIrr::sqrt_of(2);
    CertInterval i20 = enclose(r2, 20);
    EXPECT_LE(i20.width(), pow2(-20));
    EXPECT_TRUE(i20.contains(rat_from_decimal("1.41421356") ));
    CertInterval i40 = enclose(r2, 40), i80 = enclose(r2, 80);
    EXPECT_TRUE(i20.contains(i40));
    EXPECT_TRUE(i40.contains(i80));
    // exact rationals enclose to a point at any precision
    CertInterval e = enclose(QuadIrr(Rat(2, 3)), 5);
    EXPECT_EQ(e.lo, Rat(2, 3));
    EXPECT_EQ(e.hi, Rat(2, 3));
    QuadIrr b4(-2, 2, 1, 2);
    EXPECT_TRUE(enclose(b4, 30).contains(rat_from_decimal("0.82842712474619")));
    EXPECT_LE(enclose(b4, 30).width(), pow2(-30));
}

TEST(CertInterval, Arithmetic) {
    CertInterval a(Rat(1), Rat(2)), b(Rat(-1), Rat(3));
    EXPECT_EQ((a + b).lo, 0);
    EXPECT_EQ((a + b).hi, 5);
    EXPECT_EQ((a * b).lo, -2);
    EXPECT_EQ((a * b).hi, 6);
    EXPECT_THROW(a / b, DivisionByZero);
    EXPECT_EQ((a / CertInterval(Rat(2), Rat(4))).lo, Rat(1, 4));
}

TEST(CertifiedSign, ExactAndAdaptive) {
    Expr x = Expr::constant(QuadIrr::sqrt_of(2));
    EXPECT_EQ(certified_sign(x - x), Sign::ZERO);
    EXPECT_EQ(certified_sign(x - Expr::constant(QuadIrr(Rat(3, 2)))), Sign::NEG);
    // cross-field positive: sqrt(2) + sqrt(3) - 3 < 0, + irrational margin
    Expr y = x + Expr::constant(QuadIrr::sqrt_of(3)) - Expr::constant(QuadIrr(3));
    EXPECT_EQ(certified_sign(y), Sign::POS);
    EXPECT_THROW(certified_sign(x / (x - x)), DivisionByZero);
}

TEST(CertifiedSign, MixedRadicalZeroIsUndecidedNotRounded) {
    // (sqrt2 + sqrt3)^2 - 5 - 2 sqrt6 == 0, but no single-field fold exists
    Expr r2 = Expr::constant(QuadIrr::sqrt_of(2));
    Expr r3 = Expr::constant(QuadIrr::sqrt_of(3));
    Expr e = (r2 + r3) * (r2 + r3) - Expr::constant(QuadIrr(5)) -
             Expr::constant(QuadIrr(2)) * Expr::constant(QuadIrr::sqrt_of(6));
    EXPECT_THROW(certified_sign(e, 1024), Undecided);
}

TEST(CertifiedSign, AgreesWithQuadCompare) {
    std::mt19937_64 rng(20240817);
    const Int fields[] = {Int(2), Int(3), Int(5), Int(21)};
    int zeros = 0;
    for (int k = 0; k < 10000; ++k) {
        Int d = fields[k % 4];
        QuadIrr a = random_quad(rng, d), b = random_quad(rng, d);
        Ordering ord = quad_compare(a, b);
        Sign s = certified_sign(Expr::constant(a) - Expr::constant(b));
        EXPECT_EQ(static_cast<int>(ord) * 1, static_cast<int>(s));
        if (s == Sign::ZERO) ++zeros;
    }
    EXPECT_LT(zeros, 200);
}

TEST(BoxCheck, UnivariateAndBivariate) {
    // (x+1)/(x+2) > 0.33 for x in [0, 1]
    Expr x = Expr::var(0);
    Expr one = Expr::constant(QuadIrr(1)), two = Expr::constant(QuadIrr(2));
    auto chk = certified_gt_on_box((x + one) / (x + two), {CertInterval(Rat(0), Rat(1))}, Rat(33, 100));
    EXPECT_TRUE(chk.holds);
    EXPECT_GT(chk.bound, Rat(33, 100));
    // fails: (x+1)/(x+2) > 0.5 is violated at x = 0 (equality)
    auto bad = certified_gt_on_box((x + one) / (x + two), {CertInterval(Rat(0), Rat(1))}, Rat(1, 2),
                                   192, 12);
    EXPECT_FALSE(bad.holds);
    // x*y < 1.01 on [0,1]^2
    Expr y = Expr::var(1);
    auto lt = certified_lt_on_box(x * y, {CertInterval(Rat(0), Rat(1)), CertInterval(Rat(0), Rat(1))},
                                  rat_from_decimal("1.01"));
    EXPECT_TRUE(lt.holds);
}

TEST(Numeric, DecimalHelpers) {
    EXPECT_EQ(decimal_string(Rat(1, 3), 5), "0.33333");
    EXPECT_EQ(decimal_string(Rat(-1, 3), 5), "-0.33333");
    EXPECT_EQ(decimal_string(Rat(1, 2), 0), "1");
    EXPECT_EQ(rat_from_decimal("5.3416407865"), Rat(Int("53416407865"), Int("10000000000")));
    EXPECT_EQ(rat_floor(Rat(-7, 2)), -4);
    EXPECT_EQ(rat_ceil(Rat(-7, 2)), -3);
}
