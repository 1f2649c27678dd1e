#pragma once

// Certified interval arithmetic with exact rational endpoints.  Since the
// endpoints are rationals, the ring operations need no outward rounding;
// enclosures of quadratic irrationals come from integer square-root bounds
// and are nested under precision refinement.

#include "numeric.hpp"
#include "quadirr.hpp"

#include <algorithm>
#include <string>

namespace cfspec {

struct CertInterval {
    Rat lo, hi;

    CertInterval() : lo(0), hi(0) {}
    CertInterval(Rat point) : lo(point), hi(point) {}
    CertInterval(Rat l, Rat h) : lo(std::move(l)), hi(std::move(h)) {
        if (lo > hi) throw std::invalid_argument("CertInterval with lo > hi");
    }

    Rat width() const { return hi - lo; }
    Rat mid() const { return (lo + hi) / 2; }
    bool contains(const Rat& x) const { return lo <= x && x <= hi; }
    bool contains(const CertInterval& o) const { return lo <= o.lo && o.hi <= hi; }
    bool contains_zero() const { return lo <= 0 && 0 <= hi; }

    /// Sign if decided: -1, 0 (exactly zero), +1, or nullopt if straddling.
    std::optional<int> sign() const {
        if (lo > 0) return 1;
        if (hi < 0) return -1;
        if (lo == 0 && hi == 0) return 0;
        return std::nullopt;
    }

    friend CertInterval operator+(const CertInterval& a, const CertInterval& b) {
        return CertInterval(a.lo + b.lo, a.hi + b.hi);
    }
    friend CertInterval operator-(const CertInterval& a, const CertInterval& b) {
        return CertInterval(a.lo - b.hi, a.hi - b.lo);
    }
    friend CertInterval operator-(const CertInterval& a) { return CertInterval(-a.hi, -a.lo); }
    friend CertInterval operator*(const CertInterval& a, const CertInterval& b) {
        Rat c1 = a.lo * b.lo, c2 = a.lo * b.hi, c3 = a.hi * b.lo, c4 = a.hi * b.hi;
        return CertInterval(std::min(std::min(c1, c2), std::min(c3, c4)),
                            std::max(std::max(c1, c2), std::max(c3, c4)));
    }
    friend CertInterval operator/(const CertInterval& a, const CertInterval& b) {
        if (b.contains_zero()) throw DivisionByZero("interval division by interval containing zero");
        return a * CertInterval(Rat(1) / b.hi, Rat(1) / b.lo);
    }

    friend CertInterval hull(const CertInterval& a, const CertInterval& b) {
        return CertInterval(std::min(a.lo, b.lo), std::max(a.hi, b.hi));
    }

    std::string str(unsigned digits = 12) const {
        return "[" + decimal_string(lo, digits) + ", " + decimal_string(hi, digits) + "]";
    }
};

/// Enclose x with width <= 2^-precision_bits.  For a fixed x, higher
/// precision yields nested intervals (the isqrt bounds refine monotonically).
inline CertInterval enclose(const QuadIrr& x, unsigned precision_bits) {
    if (x.is_rational()) {
        Rat v = x.as_rational();
        return CertInterval(v, v);
    }
    // sqrt(d) in [s, s+1] / 2^m with s = isqrt(d * 4^m); choose m so that
    // |q| * 2^-m / r <= 2^-bits.
    unsigned m = precision_bits + 2;
    Int aq = boost::multiprecision::abs(x.q());
    while ((aq >> m) > 0) ++m;  // add bits to absorb |q|
    m += 1;
    Int s = isqrt(x.d() << (2 * m));
    Int twoM = Int(1) << m;
    Rat rt_lo(s, twoM), rt_hi(s + 1, twoM);
    Rat q(x.q()), p(x.p()), r(x.r());
    Rat lo, hi;
    if (x.q() >= 0) {
        lo = (p + q * rt_lo) / r;
        hi = (p + q * rt_hi) / r;
    } else {
        lo = (p + q * rt_hi) / r;
        hi = (p + q * rt_lo) / r;
    }
    return CertInterval(lo, hi);
}

/// Convenience: certified decimal of any QuadIrr via an enclosure tight
/// enough for the requested digits (exact rounding is in quadirr.hpp).
inline CertInterval enclose_for_digits(const QuadIrr& x, unsigned digits) {
    return enclose(x, static_cast<unsigned>(digits * 3.4) + 8);
}

}  // namespace cfspec
