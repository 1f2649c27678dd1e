#pragma once

// Exact arithmetic on real quadratic irrationals (p + q*sqrt(d))/r.
//
// Values are kept normalized: r > 0, gcd(p, q, r) = 1, d >= 0 with square
// factors extracted (sqrt(32) becomes 2*sqrt(2)), and q = 0 whenever the
// value is rational (then d = 0).  Same-field arithmetic is exact; ordering
// works across different radicands by radical isolation and integer sign
// tests.  No floating point anywhere.

#include "numeric.hpp"

#include <array>
#include <compare>
#include <optional>
#include <ostream>
#include <string>

namespace cfspec {

enum class Ordering { LT = -1, EQ = 0, GT = 1 };

inline int sign_of(const Int& v) { return v.sign(); }
inline int sign_of(const Rat& v) { return v.sign(); }

/// Extract the largest square factor: n = s^2 * m with m squarefree as far
/// as trial division by small primes can tell (then a perfect-square check
/// on the remainder).  Radicands in this library are small, so this is
/// effectively a full squarefree decomposition.
inline void extract_square_part(Int n, Int& square_root_part, Int& rest) {
    square_root_part = 1;
    rest = 1;
    if (n == 0) {
        rest = 0;
        return;
    }
    for (Int p : {Int(2), Int(3), Int(5), Int(7), Int(11), Int(13)}) {
        while (n % (p * p) == 0) {
            n /= p * p;
            square_root_part *= p;
        }
    }
    // trial divide remaining odd factors up to a modest bound
    for (Int p = 17; p * p <= n && p < 20000; p += 2) {
        while (n % (p * p) == 0) {
            n /= p * p;
            square_root_part *= p;
        }
    }
    Int r;
    if (is_square(n, &r)) {
        square_root_part *= r;
        n = 1;
    }
    rest = n;
}

class QuadIrr {
  public:
    QuadIrr() : p_(0), q_(0), r_(1), d_(0) {}
    QuadIrr(const Int& integer_value) : p_(integer_value), q_(0), r_(1), d_(0) {}
    QuadIrr(long v) : p_(v), q_(0), r_(1), d_(0) {}
    QuadIrr(const Rat& v) : p_(numerator(v)), q_(0), r_(denominator(v)), d_(0) {}

    /// (p + q*sqrt(d))/r, normalized.
    QuadIrr(Int p, Int q, Int r, Int d) : p_(std::move(p)), q_(std::move(q)), r_(std::move(r)), d_(std::move(d)) {
        normalize();
    }

    static QuadIrr sqrt_of(const Int& n) { return QuadIrr(0, 1, 1, n); }

    const Int& p() const { return p_; }
    const Int& q() const { return q_; }
    const Int& r() const { return r_; }
    const Int& d() const { return d_; }

    bool is_rational() const { return q_ == 0; }
    Rat as_rational() const {
        if (!is_rational()) throw FieldMismatch("value is irrational");
        return Rat(p_, r_);
    }

    bool same_field(const QuadIrr& o) const {
        return is_rational() || o.is_rational() || d_ == o.d_;
    }

    /// Exact sign by integer tests.
    int sign() const {
        if (q_ == 0 || d_ == 0) return sign_of(p_);
        if (p_ == 0) return sign_of(q_);
        int sp = sign_of(p_), sq = sign_of(q_);
        if (sp == sq) return sp;
        // |p| vs |q|sqrt(d): compare p^2 with q^2 d
        Int lhs = p_ * p_, rhs = q_ * q_ * d_;
        if (lhs == rhs) return 0;
        return lhs > rhs ? sp : sq;
    }

    QuadIrr operator-() const { return QuadIrr(raw{}, -p_, -q_, r_, d_); }

    QuadIrr conjugate() const { return QuadIrr(raw{}, p_, -q_, r_, d_); }

    friend QuadIrr operator+(const QuadIrr& a, const QuadIrr& b) {
        Int d = common_field(a, b, "add");
        return QuadIrr(a.p_ * b.r_ + b.p_ * a.r_, a.q_ * b.r_ + b.q_ * a.r_, a.r_ * b.r_, d);
    }
    friend QuadIrr operator-(const QuadIrr& a, const QuadIrr& b) { return a + (-b); }

    friend QuadIrr operator*(const QuadIrr& a, const QuadIrr& b) {
        Int d = common_field(a, b, "mul");
        // (p1 + q1 s)(p2 + q2 s) = p1 p2 + q1 q2 d + (p1 q2 + p2 q1) s
        return QuadIrr(a.p_ * b.p_ + a.q_ * b.q_ * d, a.p_ * b.q_ + b.p_ * a.q_, a.r_ * b.r_, d);
    }

    friend QuadIrr operator/(const QuadIrr& a, const QuadIrr& b) {
        if (b.sign() == 0) throw DivisionByZero("QuadIrr division by zero");
        Int d = common_field(a, b, "div");
        // multiply by the conjugate of b
        Int norm = b.p_ * b.p_ - b.q_ * b.q_ * d;  // r^2 * (value * conj) has sign of norm
        return QuadIrr((a.p_ * b.p_ - a.q_ * b.q_ * d) * b.r_, (a.q_ * b.p_ - a.p_ * b.q_) * b.r_,
                       a.r_ * norm, d);
    }

    friend bool operator==(const QuadIrr& a, const QuadIrr& b) {
        if (a.same_field(b)) return a.p_ == b.p_ && a.q_ == b.q_ && a.r_ == b.r_ && a.d_ == b.d_;
        return compare(a, b) == Ordering::EQ;
    }
    friend bool operator!=(const QuadIrr& a, const QuadIrr& b) { return !(a == b); }
    friend bool operator<(const QuadIrr& a, const QuadIrr& b) { return compare(a, b) == Ordering::LT; }
    friend bool operator>(const QuadIrr& a, const QuadIrr& b) { return compare(a, b) == Ordering::GT; }
    friend bool operator<=(const QuadIrr& a, const QuadIrr& b) { return compare(a, b) != Ordering::GT; }
    friend bool operator>=(const QuadIrr& a, const QuadIrr& b) { return compare(a, b) != Ordering::LT; }

    /// Total order across arbitrary radicands; exact.
    static Ordering compare(const QuadIrr& a, const QuadIrr& b) {
        if (a.same_field(b)) {
            Int d = a.is_rational() ? b.d_ : a.d_;
            // sign of a - b without renormalizing
            QuadIrr diff(raw{}, a.p_ * b.r_ - b.p_ * a.r_, a.q_ * b.r_ - b.q_ * a.r_, a.r_ * b.r_, d);
            return from_sign(diff.sign());
        }
        // sign of A + B sqrt(d1) + C sqrt(d2), all integer coefficients
        Int A = a.p_ * b.r_ - b.p_ * a.r_;
        Int B = a.q_ * b.r_;
        Int C = -b.q_ * a.r_;
        return from_sign(sign_two_radicals(A, B, a.d_, C, b.d_));
    }

    friend Ordering compare(const QuadIrr& a, const QuadIrr& b) { return QuadIrr::compare(a, b); }

    /// Canonical text form, e.g. "(-3+1*sqrt(21))/2" or "2/3".
    std::string str() const {
        if (is_rational()) {
            std::string s = p_.str();
            if (r_ != 1) s += "/" + r_.str();
            return s;
        }
        std::string s = "(" + p_.str();
        Int aq = boost::multiprecision::abs(q_);
        s += (q_ < 0 ? "-" : "+") + aq.str() + "*sqrt(" + d_.str() + ")";
        s += ")";
        if (r_ != 1) s += "/" + r_.str();
        return s;
    }

  private:
    struct raw {};  // bypass normalization for internal temporaries
    QuadIrr(raw, Int p, Int q, Int r, Int d)
        : p_(std::move(p)), q_(std::move(q)), r_(std::move(r)), d_(std::move(d)) {}

    static Ordering from_sign(int s) {
        return s < 0 ? Ordering::LT : (s > 0 ? Ordering::GT : Ordering::EQ);
    }

    static Int common_field(const QuadIrr& a, const QuadIrr& b, const char* op) {
        if (a.is_rational()) return b.d_;
        if (b.is_rational()) return a.d_;
        if (a.d_ != b.d_)
            throw FieldMismatch(std::string("QuadIrr ") + op + ": distinct radicands " + a.d_.str() +
                                " vs " + b.d_.str());
        return a.d_;
    }

    /// sign of A + B*sqrt(d1) + C*sqrt(d2) with d1 != d2 (exact, integer-only).
    static int sign_two_radicals(const Int& A, const Int& B, const Int& d1, const Int& C, const Int& d2) {
        auto sign_one = [](const Int& a, const Int& b, const Int& d) -> int {
            // sign of a + b sqrt(d)
            if (b == 0 || d == 0) return sign_of(a);
            if (a == 0) return sign_of(b);
            int sa = sign_of(a), sb = sign_of(b);
            if (sa == sb) return sa;
            Int lhs = a * a, rhs = b * b * d;
            if (lhs == rhs) return 0;
            return lhs > rhs ? sa : sb;
        };
        if (B == 0 || d1 == 0) return sign_one(A, C, d2);
        if (C == 0 || d2 == 0) return sign_one(A, B, d1);
        // X = A + B sqrt(d1) versus Y = -C sqrt(d2)
        int s1 = sign_one(A, B, d1);
        int s2 = sign_of(Int(-C));
        if (s1 != s2) {
            if (s1 > s2) return 1;
            return -1;
        }
        if (s1 == 0) return 0;
        // both sides share a strict sign; compare squares in Q(sqrt(d1))
        // X^2 - Y^2 = A^2 + B^2 d1 - C^2 d2 + 2AB sqrt(d1)
        int s3 = sign_one(A * A + B * B * d1 - C * C * d2, 2 * A * B, d1);
        return s1 > 0 ? s3 : -s3;
    }

    void normalize() {
        if (r_ == 0) throw DivisionByZero("QuadIrr with zero denominator");
        if (d_ < 0) throw std::domain_error("QuadIrr with negative radicand");
        if (r_ < 0) {
            r_ = -r_;
            p_ = -p_;
            q_ = -q_;
        }
        if (q_ != 0 && d_ > 1) {
            Int s, m;
            extract_square_part(d_, s, m);
            if (s != 1) {
                q_ *= s;
                d_ = m;
            }
        }
        if (d_ == 1) {
            p_ += q_;
            q_ = 0;
            d_ = 0;
        }
        if (d_ == 0 || q_ == 0) {
            q_ = 0;
            d_ = 0;
        }
        Int g = boost::multiprecision::gcd(boost::multiprecision::gcd(boost::multiprecision::abs(p_), boost::multiprecision::abs(q_)), r_);
        if (g > 1) {
            p_ /= g;
            q_ /= g;
            r_ /= g;
        }
    }

    Int p_, q_, r_, d_;
};

inline std::ostream& operator<<(std::ostream& os, const QuadIrr& x) { return os << x.str(); }

enum class ArithOp { Add, Sub, Mul, Div };

/// Same-field arithmetic entry point; throws FieldMismatch when both operands
/// carry distinct non-trivial radicands.
inline QuadIrr quad_arith(const QuadIrr& a, const QuadIrr& b, ArithOp op) {
    switch (op) {
        case ArithOp::Add: return a + b;
        case ArithOp::Sub: return a - b;
        case ArithOp::Mul: return a * b;
        case ArithOp::Div: return a / b;
    }
    throw std::logic_error("unreachable");
}

inline QuadIrr quad_abs(const QuadIrr& x) { return x.sign() < 0 ? -x : x; }

inline Ordering quad_compare(const QuadIrr& a, const QuadIrr& b) { return QuadIrr::compare(a, b); }

/// floor(x), exact.
inline Int quad_floor(const QuadIrr& x) {
    if (x.is_rational()) return rat_floor(x.as_rational());
    // floor((p + q sqrt(d))/r): bound q*sqrt(d) by integer isqrt
    Int t2 = x.q() * x.q() * x.d();
    Int s = isqrt(t2);  // s <= |q| sqrt(d) < s+1
    Int lo_num;
    if (x.q() > 0)
        lo_num = x.p() + s;
    else
        lo_num = x.p() - s - 1;
    Int n;
    if (lo_num >= 0)
        n = lo_num / x.r();
    else
        n = (lo_num - x.r() + 1) / x.r();
    // candidate n: check n <= x < n+1, adjusting at most a couple of steps
    auto geq = [&x](const Int& m) { return quad_compare(x, QuadIrr(m)) != Ordering::LT; };
    while (!geq(n)) --n;
    while (geq(n + 1)) ++n;
    return n;
}

/// Exact decimal rendering of a QuadIrr rounded to `digits` places.
inline std::string decimal_string(const QuadIrr& x, unsigned digits) {
    if (x.is_rational()) return decimal_string(x.as_rational(), digits);
    bool neg = x.sign() < 0;
    QuadIrr a = neg ? -x : x;
    Int scale = ipow10(digits);
    // n = floor(a*scale + 1/2)
    QuadIrr scaled = a * QuadIrr(scale) + QuadIrr(Rat(1, 2));
    Int n = quad_floor(scaled);
    Int ip = n / scale, fp = n % scale;
    std::string out = ip.str();
    if (digits > 0) {
        std::string f = fp.str();
        out += "." + std::string(digits - f.size(), '0') + f;
    }
    return neg ? "-" + out : out;
}

}  // namespace cfspec
