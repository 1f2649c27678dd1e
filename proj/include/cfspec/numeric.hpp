#pragma once

// Exact integer/rational layer shared by the whole library, plus the small
// error taxonomy used across modules.  Everything here is backed by
// boost::multiprecision; no floating point is involved.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cfspec {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// ---------------------------------------------------------------------------
// Errors

struct FieldMismatch : std::runtime_error {
    FieldMismatch(const std::string& what) : std::runtime_error(what) {}
};
struct DivisionByZero : std::runtime_error {
    DivisionByZero(const std::string& what) : std::runtime_error(what) {}
};
struct Undecided : std::runtime_error {
    Undecided(const std::string& what) : std::runtime_error(what) {}
};
struct CapExceeded : std::runtime_error {
    CapExceeded(const std::string& what) : std::runtime_error(what) {}
};
struct ConstraintViolation : std::runtime_error {
    ConstraintViolation(const std::string& what) : std::runtime_error(what) {}
};
struct DominanceFailure : std::runtime_error {
    int index;
    DominanceFailure(int i, const std::string& what) : std::runtime_error(what), index(i) {}
};
struct GlueFailure : std::runtime_error {
    int stage;
    GlueFailure(int s, const std::string& what) : std::runtime_error(what), stage(s) {}
};
struct NoRootInUnitInterval : std::runtime_error {
    NoRootInUnitInterval(const std::string& what) : std::runtime_error(what) {}
};
struct DomainViolation : std::runtime_error {
    DomainViolation(const std::string& what) : std::runtime_error(what) {}
};
struct ParseError : std::runtime_error {
    std::size_t position;
    ParseError(std::size_t pos, const std::string& what)
        : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};
struct ThicknessUndecided : std::runtime_error {
    ThicknessUndecided(const std::string& what) : std::runtime_error(what) {}
};

// ---------------------------------------------------------------------------
// Integer helpers

/// Floor of sqrt(n); n must be >= 0.
inline Int isqrt(const Int& n) {
    if (n < 0) throw std::domain_error("isqrt of negative integer");
    return boost::multiprecision::sqrt(n);
}

inline bool is_square(const Int& n, Int* root = nullptr) {
    if (n < 0) return false;
    Int r = isqrt(n);
    if (r * r == n) {
        if (root) *root = r;
        return true;
    }
    return false;
}

/// 2^k as a rational (k may be negative).
inline Rat pow2(long k) {
    Rat r(1);
    Int p = Int(1) << static_cast<unsigned>(k < 0 ? -k : k);
    return k >= 0 ? Rat(p) : Rat(1, p);
}

inline Int ipow10(unsigned k) {
    Int p = 1;
    for (unsigned i = 0; i < k; ++i) p *= 10;
    return p;
}

inline Int rat_floor(const Rat& q) {
    Int n = numerator(q), d = denominator(q);
    Int quo = n / d;
    if (n < 0 && quo * d != n) --quo;
    return quo;
}

inline Int rat_ceil(const Rat& q) { return -rat_floor(-q); }

inline Rat rat_abs(const Rat& q) { return q < 0 ? Rat(-q) : q; }

/// Parse a plain decimal literal ("1.038", "-0.5", "21") into an exact rational.
inline Rat rat_from_decimal(const std::string& s) {
    std::size_t i = 0;
    bool neg = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) neg = s[i++] == '-';
    std::string intpart, fracpart;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) intpart += s[i++];
    if (i < s.size() && s[i] == '.') {
        ++i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) fracpart += s[i++];
    }
    if (i != s.size() || (intpart.empty() && fracpart.empty()))
        throw ParseError(i, "bad decimal literal '" + s + "'");
    Int num = intpart.empty() ? Int(0) : Int(intpart);
    Int den = 1;
    for (char c : fracpart) {
        num = num * 10 + (c - '0');
        den *= 10;
    }
    Rat r(num, den);
    return neg ? Rat(-r) : r;
}

/// Exact decimal rendering of a rational, rounded to `digits` places
/// (round half away from zero).  Deterministic; used by all reports.
inline std::string decimal_string(const Rat& x, unsigned digits) {
    bool neg = x < 0;
    Rat a = neg ? Rat(-x) : x;
    Int scale = ipow10(digits);
    // round(a * scale)
    Rat scaled = a * Rat(scale);
    Int n = rat_floor(scaled + Rat(1, 2));
    Int ip = n / scale, fp = n % scale;
    std::string out = ip.str();
    if (digits > 0) {
        std::string f = fp.str();
        out += "." + std::string(digits - f.size(), '0') + f;
    }
    if (neg && n != 0) out = "-" + out;
    return out;
}

}  // namespace cfspec
