#pragma once

// Eventually periodic continued-fraction tails and their exact values.
//
// TailSpec holds [0; preperiod, (period)~] in a canonical form: the period
// is primitive and the preperiod is as short as possible (trailing letters
// equal to the period's last letter are folded into a rotation), so equal
// tails are syntactically equal.  Values are quadratic irrationals in (0,1).

#include "quadirr.hpp"
#include "word.hpp"

#include <numeric>
#include <optional>
#include <string>

namespace cfspec {

struct TailSpec {
    Word pre;     // preperiod, may be empty
    Word period;  // nonempty

    TailSpec() = default;
    TailSpec(Word preperiod, Word per) : pre(std::move(preperiod)), period(std::move(per)) {
        if (period.empty()) throw ConstraintViolation("TailSpec with empty period");
        canonicalize();
    }

    int letter(std::size_t i) const {  // 0-based
        if (i < pre.size()) return pre[i];
        return period[(i - pre.size()) % period.size()];
    }

    /// Tail starting at letter index n (0-based).
    TailSpec shifted(std::size_t n) const {
        if (n <= pre.size()) {
            Word p;
            p.letters.assign(pre.letters.begin() + static_cast<long>(n), pre.letters.end());
            return TailSpec(p, period);
        }
        std::size_t k = (n - pre.size()) % period.size();
        Word rot;
        rot.letters.assign(period.letters.begin() + static_cast<long>(k), period.letters.end());
        rot.letters.insert(rot.letters.end(), period.letters.begin(),
                           period.letters.begin() + static_cast<long>(k));
        return TailSpec(Word{}, rot);
    }

    friend bool operator==(const TailSpec& a, const TailSpec& b) {
        return a.pre == b.pre && a.period == b.period;
    }

    std::string str() const {
        std::string s = pre.str();
        if (!s.empty()) s += ' ';
        s += "(" + period.str() + ")~";
        return s;
    }

  private:
    void canonicalize() {
        // primitive root of the period
        for (std::size_t len = 1; len < period.size(); ++len) {
            if (period.size() % len != 0) continue;
            bool repeats = true;
            for (std::size_t i = len; i < period.size() && repeats; ++i)
                repeats = period[i] == period[i % len];
            if (repeats) {
                period.letters.resize(len);
                break;
            }
        }
        // fold preperiod tail into a rotation of the period
        while (!pre.empty() && pre.back() == period.back()) {
            pre.letters.pop_back();
            std::rotate(period.letters.begin(), period.letters.end() - 1, period.letters.end());
        }
    }
};

/// Value of the purely periodic tail [0; (w)~]: the root in (0,1) of
/// q_{m-1} t^2 + (q_m - p_{m-1}) t - p_m = 0.
inline QuadIrr periodic_value(const Word& period) {
    Convergents c = convergents(period);
    Int A = c.q_prev();
    Int B = c.q() - c.p_prev();
    Int C = -c.p();
    Int disc = B * B - 4 * A * C;
    QuadIrr t(-B, 1, 2 * A, disc);
    if (!(t.sign() > 0 && quad_compare(t, QuadIrr(1)) == Ordering::LT))
        throw NoRootInUnitInterval("periodic tail value outside (0,1) for period " + period.str());
    return t;
}

/// Exact value of [0; w, tail] given the prefix word w (may be empty).
inline QuadIrr cf_value(const Word& prefix, const TailSpec& tail) {
    QuadIrr t = periodic_value(tail.period);
    Word full = prefix + tail.pre;
    Convergents c = convergents(full);
    // continuation after `full` is 1/t, so the value is (p_n + p_{n-1} t)/(q_n + q_{n-1} t)
    QuadIrr num = QuadIrr(c.p()) + QuadIrr(c.p_prev()) * t;
    QuadIrr den = QuadIrr(c.q()) + QuadIrr(c.q_prev()) * t;
    return num / den;
}

/// Value of the tail alone.
inline QuadIrr tail_value(const TailSpec& t) { return cf_value(Word{}, t); }

/// Value of the finite CF [0; w].
inline QuadIrr cf_value(const Word& w) { return QuadIrr(convergents(w).value); }

// ---------------------------------------------------------------------------
// Letter streams and the parity comparison rule

/// The infinite letter sequence of [0; prefix, tail], 1-based indexing.
struct LetterStream {
    Word prefix;
    TailSpec tail;

    int at(std::size_t j) const {  // j >= 1
        if (j <= prefix.size()) return prefix[j - 1];
        return tail.letter(j - 1 - prefix.size());
    }

    /// Remaining stream from position j (1-based) as a TailSpec.
    TailSpec from(std::size_t j) const {
        if (j > prefix.size()) return tail.shifted(j - 1 - prefix.size());
        Word head;
        head.letters.assign(prefix.letters.begin() + static_cast<long>(j - 1), prefix.letters.end());
        return TailSpec(head + tail.pre, tail.period);
    }

    QuadIrr value() const { return cf_value(prefix, tail); }
};

/// First index (1-based) where the two streams differ, searched within one
/// period-lcm window; nullopt means identical streams.
inline std::optional<std::size_t> first_difference(const LetterStream& s1, const LetterStream& s2) {
    std::size_t head = std::max(s1.prefix.size() + s1.tail.pre.size(),
                                s2.prefix.size() + s2.tail.pre.size());
    std::size_t l = std::lcm(s1.tail.period.size(), s2.tail.period.size());
    std::size_t window = head + 2 * l + 2;
    for (std::size_t j = 1; j <= window; ++j)
        if (s1.at(j) != s2.at(j)) return j;
    return std::nullopt;
}

/// Ordering of [0; prefix, t1] versus [0; prefix, t2] by the parity rule:
/// at the first differing index j, the value with the larger letter is the
/// larger one iff j is even.  EQ when no difference exists within the
/// period-lcm window (identical tails).
inline Ordering compare_tails(const Word& prefix, const TailSpec& t1, const TailSpec& t2) {
    LetterStream s1{prefix, t1}, s2{prefix, t2};
    auto j = first_difference(s1, s2);
    if (!j) return Ordering::EQ;
    int diff = s1.at(*j) - s2.at(*j);
    bool even = *j % 2 == 0;
    int s = even ? diff : -diff;
    return s > 0 ? Ordering::GT : Ordering::LT;
}

// ---------------------------------------------------------------------------
// Gap lengths: direct subtraction and the q^2 (beta + alpha) formula

struct GapLength {
    QuadIrr direct;        // |v1 - v2|, exact (same-field case)
    QuadIrr via_formula;   // the same length through the convergent identity
    Ordering orientation;  // ordering of [0;prefix,t1] vs [0;prefix,t2]
};

/// |[0;prefix,t1] - [0;prefix,t2]| computed both directly and via
///   |alpha~ - alpha| / (q_n^2 (beta_n + alpha)(beta_n + alpha~))
/// where n is the length of the full shared head.  The two routes must agree
/// exactly; FieldMismatch propagates when the tails live in distinct fields.
inline GapLength gap_length(const Word& prefix, const TailSpec& t1, const TailSpec& t2) {
    LetterStream s1{prefix, t1}, s2{prefix, t2};
    GapLength out;
    out.orientation = compare_tails(prefix, t1, t2);
    if (out.orientation == Ordering::EQ) {
        out.direct = QuadIrr(0);
        out.via_formula = QuadIrr(0);
        return out;
    }
    QuadIrr v1 = s1.value(), v2 = s2.value();
    out.direct = quad_abs(v1 - v2);

    std::size_t j = *first_difference(s1, s2);
    Word shared;
    for (std::size_t i = 1; i < j; ++i) shared.letters.push_back(s1.at(i));
    Convergents c = convergents(shared);
    QuadIrr alpha1 = QuadIrr(1) / tail_value(s1.from(j));
    QuadIrr alpha2 = QuadIrr(1) / tail_value(s2.from(j));
    QuadIrr beta{c.beta};
    QuadIrr q2{Rat(c.q() * c.q())};
    QuadIrr num = quad_abs(alpha2 - alpha1);
    out.via_formula = num / (q2 * (beta + alpha1) * (beta + alpha2));
    return out;
}

// ---------------------------------------------------------------------------
// CF string grammar: "[a0; l1 l2 ... (p1 p2 ...)~]"

struct CFString {
    Int integer_part;
    Word pre;
    std::optional<Word> period;

    QuadIrr value() const {
        QuadIrr frac = period ? tail_value(TailSpec(pre, *period)) : cf_value(pre);
        return QuadIrr(integer_part) + frac;
    }

    std::string str() const {
        std::string s = "[" + integer_part.str() + ";";
        if (!pre.empty()) s += " " + pre.str();
        if (period) s += " (" + period->str() + ")~";
        s += "]";
        return s;
    }
};

inline CFString parse_cf(const std::string& text) {
    CFString out;
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto read_int = [&]() -> Int {
        skip_ws();
        std::size_t start = i;
        if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == start) throw ParseError(i, "expected integer");
        return Int(text.substr(start, i - start));
    };
    skip_ws();
    if (i >= text.size() || text[i] != '[') throw ParseError(i, "expected '['");
    ++i;
    out.integer_part = read_int();
    skip_ws();
    if (i >= text.size() || text[i] != ';') throw ParseError(i, "expected ';'");
    ++i;
    while (true) {
        skip_ws();
        if (i >= text.size()) throw ParseError(i, "unterminated CF string");
        if (text[i] == ']') {
            ++i;
            break;
        }
        if (text[i] == '(') {
            ++i;
            Word per;
            while (true) {
                skip_ws();
                if (i < text.size() && text[i] == ')') {
                    ++i;
                    break;
                }
                Int a = read_int();
                if (a < 1 || a > 1000000) throw ParseError(i, "letter out of range");
                per.letters.push_back(static_cast<int>(a));
            }
            if (per.empty()) throw ParseError(i, "empty repeating block");
            skip_ws();
            if (i >= text.size() || text[i] != '~') throw ParseError(i, "expected '~'");
            ++i;
            out.period = per;
            skip_ws();
            if (i >= text.size() || text[i] != ']') throw ParseError(i, "expected ']' after repeating block");
            ++i;
            break;
        }
        Int a = read_int();
        if (a < 1 || a > 1000000) throw ParseError(i, "letter out of range");
        out.pre.letters.push_back(static_cast<int>(a));
    }
    skip_ws();
    if (i != text.size()) throw ParseError(i, "trailing characters");
    return out;
}

}  // namespace cfspec
