#pragma once

// Markov values of bi-infinite sequences that are eventually periodic in
// both directions, the desk-scale enumeration of the dynamical spectra
// M(k), and the witness sequences behind the spectrum coverage results.
//
// For such a sequence, lambda_i = [a_i; a_{i+1}, ...] + [0; a_{i-1}, ...]
// splits into one-sided values whose quadratic fields are constant along
// each direction, so lambda comparisons are exact.  Beyond a finite window
// the backward component at a fixed residue moves monotonically (per the
// parity of the period length) toward the purely periodic limit, so
//   sup_i lambda_i = max( window values, periodic limit values ),
// a finite exact computation.

#include "expr.hpp"
#include "tail.hpp"
#include "word.hpp"

#include <map>
#include <set>

namespace cfspec {

struct BiInfSeq {
    TailSpec left;   // letters a_{lo-1}, a_{lo-2}, ... read outward
    Word core;       // letters a_{lo} .. a_{hi}
    TailSpec right;  // letters a_{hi+1}, a_{hi+2}, ... read outward
    long marker = 0;  // index into core carrying position 0

    long lo_index() const { return -marker; }
    long hi_index() const { return static_cast<long>(core.size()) - 1 - marker; }

    int letter(long i) const {
        if (i < lo_index()) return left.letter(static_cast<std::size_t>(lo_index() - 1 - i));
        if (i > hi_index()) return right.letter(static_cast<std::size_t>(i - hi_index() - 1));
        return core[static_cast<std::size_t>(i + marker)];
    }

    BiInfSeq reversed() const {
        BiInfSeq r;
        r.left = right;
        r.right = left;
        r.core = core.reversed();
        r.marker = static_cast<long>(core.size()) - 1 - marker;
        return r;
    }

    /// One-sided ray from index i walking right (dir=+1) or left (dir=-1).
    TailSpec ray(long i, int dir) const {
        if (dir > 0) {
            if (i > hi_index()) return right.shifted(static_cast<std::size_t>(i - hi_index() - 1));
            Word head;
            for (long pos = i; pos <= hi_index(); ++pos) head.letters.push_back(letter(pos));
            return TailSpec(head + right.pre, right.period);
        }
        if (i < lo_index()) return left.shifted(static_cast<std::size_t>(lo_index() - 1 - i));
        Word head;
        for (long pos = i; pos >= lo_index(); --pos) head.letters.push_back(letter(pos));
        return TailSpec(head + left.pre, left.period);
    }

    std::string str() const {
        std::string s = "...(" + left.str() + ")' ";
        for (std::size_t i = 0; i < core.size(); ++i) {
            s += std::to_string(core[i]);
            if (static_cast<long>(i) == marker) s += "*";
            s += " ";
        }
        return s + right.str() + "...";
    }
};

/// Purely periodic sequence ...www... with position 0 at word offset m.
inline BiInfSeq periodic_seq(const Word& w, long m = 0) {
    if (w.empty()) throw ConstraintViolation("periodic sequence needs a nonempty word");
    BiInfSeq s;
    s.core = w;
    s.marker = m;
    s.right = TailSpec(Word{}, w);
    s.left = TailSpec(Word{}, w.reversed());
    return s;
}

/// A lambda value split into its one-sided components; the two components
/// may lie in different quadratic fields, so comparisons go through the
/// exact cross-field machinery.
struct LambdaValue {
    QuadIrr forward;   // [a_i; a_{i+1}, ...]
    QuadIrr backward;  // [0; a_{i-1}, a_{i-2}, ...]

    bool same_field() const { return forward.same_field(backward); }
    QuadIrr exact_sum() const { return forward + backward; }
    CertInterval enclose_sum(unsigned bits) const {
        return enclose(forward, bits) + enclose(backward, bits);
    }

    static Ordering compare(const LambdaValue& x, const LambdaValue& y) {
        // x.f + x.b ? y.f + y.b  <=>  x.f - y.f ? y.b - x.b (same-field sides)
        return quad_compare(x.forward - y.forward, y.backward - x.backward);
    }
};

inline LambdaValue lambda_at(const BiInfSeq& seq, long i) {
    LambdaValue v;
    v.forward = QuadIrr(seq.letter(i)) + tail_value(seq.ray(i + 1, +1));
    v.backward = tail_value(seq.ray(i - 1, -1));
    return v;
}

struct SpectrumPoint {
    LambdaValue lambda;
    Word witness;
    long argmax_index = 0;
    bool attained = true;  // false when the sup is approached along a tail

    /// Exact value; requires the two one-sided fields to coincide (always
    /// true for purely periodic witnesses).
    QuadIrr value() const { return lambda.exact_sum(); }
};

namespace detail {

struct MarkovCandidate {
    LambdaValue lambda;
    long index;
    bool attained;
};

/// All candidates whose maximum is the Markov value: every window position,
/// plus the lambda values of the purely periodic limit words of both tails.
inline std::vector<MarkovCandidate> markov_candidates(const BiInfSeq& seq) {
    std::vector<MarkovCandidate> out;
    long pl = static_cast<long>(seq.left.period.size());
    long pr = static_cast<long>(seq.right.period.size());
    long w_lo = seq.lo_index() - static_cast<long>(seq.left.pre.size()) - 2 * pl - 1;
    long w_hi = seq.hi_index() + static_cast<long>(seq.right.pre.size()) + 2 * pr + 1;
    for (long i = w_lo; i <= w_hi; ++i) out.push_back({lambda_at(seq, i), i, true});
    // periodic limits: lambda values of ...vvv... for the tail periods
    for (const Word& w : {seq.right.period, seq.left.period.reversed()}) {
        BiInfSeq lim = periodic_seq(w);
        for (long i = 0; i < static_cast<long>(w.size()); ++i)
            out.push_back({lambda_at(lim, i), i, false});
    }
    return out;
}

}  // namespace detail

/// The Markov value sup_i lambda_i(seq), exact, with its witness position.
inline SpectrumPoint markov_value(const BiInfSeq& seq) {
    auto cands = detail::markov_candidates(seq);
    const detail::MarkovCandidate* best = &cands.front();
    for (const auto& c : cands)
        if (LambdaValue::compare(c.lambda, best->lambda) == Ordering::GT) best = &c;
    // prefer an attained representative of the same value, smallest |index|
    const detail::MarkovCandidate* rep = nullptr;
    for (const auto& c : cands) {
        if (!c.attained) continue;
        if (LambdaValue::compare(c.lambda, best->lambda) != Ordering::EQ) continue;
        if (!rep || std::abs(c.index) < std::abs(rep->index)) rep = &c;
    }
    SpectrumPoint p;
    p.lambda = rep ? rep->lambda : best->lambda;
    p.argmax_index = rep ? rep->index : best->index;
    p.attained = rep != nullptr;
    p.witness = seq.core;
    return p;
}

// ---------------------------------------------------------------------------
// Spectrum enumeration over periodic sequences

struct QuadIrrLess {
    bool operator()(const QuadIrr& a, const QuadIrr& b) const {
        return quad_compare(a, b) == Ordering::LT;
    }
};

/// Lexicographically least among all rotations of w and of its reversal.
inline Word bracelet_canonical(const Word& w) {
    Word best = w;
    for (const Word& base : {w, w.reversed()}) {
        Word rot = base;
        for (std::size_t r = 0; r < w.size(); ++r) {
            std::rotate(rot.letters.begin(), rot.letters.begin() + 1, rot.letters.end());
            if (rot < best) best = rot;
        }
    }
    return best;
}

inline bool is_primitive(const Word& w) {
    for (std::size_t len = 1; len < w.size(); ++len) {
        if (w.size() % len != 0) continue;
        bool repeats = true;
        for (std::size_t i = len; i < w.size() && repeats; ++i) repeats = w[i] == w[i % len];
        if (repeats) return false;
    }
    return true;
}

/// All Markov values of periodic sequences over {1..k} with primitive
/// period <= period_max and value <= threshold, deduplicated by exact value
/// (keeping the lexicographically least witness), ascending.
inline std::vector<SpectrumPoint> enumerate_spectrum(int k, int period_max, const QuadIrr& threshold,
                                                     int period_cap = 8) {
    if (period_max > period_cap) throw CapExceeded("enumerate_spectrum period above cap");
    if (k < 1) throw ConstraintViolation("alphabet bound below 1");
    std::map<QuadIrr, SpectrumPoint, QuadIrrLess> by_value;
    for (int len = 1; len <= period_max; ++len) {
        std::vector<int> digits(static_cast<std::size_t>(len), 1);
        while (true) {
            Word w{std::vector<int>(digits.begin(), digits.end())};
            if (is_primitive(w) && bracelet_canonical(w) == w) {
                SpectrumPoint p = markov_value(periodic_seq(w));
                QuadIrr v = p.value();
                if (quad_compare(v, threshold) != Ordering::GT) {
                    auto it = by_value.find(v);
                    if (it == by_value.end())
                        by_value.emplace(v, p);
                    else if (w < it->second.witness)
                        it->second = p;
                }
            }
            // next word over {1..k}
            int pos = len - 1;
            while (pos >= 0 && digits[static_cast<std::size_t>(pos)] == k) {
                digits[static_cast<std::size_t>(pos)] = 1;
                --pos;
            }
            if (pos < 0) break;
            ++digits[static_cast<std::size_t>(pos)];
        }
    }
    std::vector<SpectrumPoint> out;
    for (auto& [v, p] : by_value) out.push_back(p);
    return out;
}

/// j + 2 A_j: the threshold below which letters >= j cannot occur
/// infinitely often in a Lagrange witness.
inline QuadIrr filter_bound(int j) {
    if (j < 1) throw ConstraintViolation("filter_bound needs j >= 1");
    QuadIrr aj = tail_value(TailSpec(Word{}, Word{j, 1}));
    return QuadIrr(j) + QuadIrr(2) * aj;
}

// ---------------------------------------------------------------------------
// Witness constructions

enum class WitnessKind { TildeCross, Square };

namespace detail {

inline void check_tail_constraints(const TailSpec& t, int k, WitnessKind kind) {
    int alphabet = kind == WitnessKind::TildeCross && k >= 5 ? k - 1 : k;
    std::size_t window = t.pre.size() + 2 * t.period.size() + 2;
    for (std::size_t i = 0; i < window; ++i) {
        int a = t.letter(i), b = t.letter(i + 1);
        if (a > alphabet) throw ConstraintViolation("tail letter above alphabet bound");
        if (a == 1 && b == k) throw ConstraintViolation("forbidden pair (1,k) in tail");
        if (k == 4 && a == 2 && b == 4) throw ConstraintViolation("forbidden pair (2,4) in tail");
    }
    if (kind == WitnessKind::TildeCross && t.letter(0) == 1 && t.letter(1) == k - 1)
        throw ConstraintViolation("tilde tail must not start with (1,k-1)");
}

}  // namespace detail

/// The witness sequence whose lambda_0 is k + [0;c^s,theta_left] +
/// [0;b^s,theta_right] (tilde_cross) or k + [0;b^s,theta_left] +
/// [0;b^s,theta_right] (square), with b^s = (1,k)_s, c^s = (1,k)_{s-1},1,k-1.
inline BiInfSeq candidate_sequence(int k, int s, const TailSpec& theta_left,
                                   const TailSpec& theta_right, WitnessKind kind) {
    if (k < 4 || s < 1) throw ConstraintViolation("candidate_sequence needs k >= 4, s >= 1");
    detail::check_tail_constraints(theta_left, k, kind);
    detail::check_tail_constraints(theta_right, k, kind == WitnessKind::TildeCross
                                                       ? kind
                                                       : WitnessKind::Square);
    BiInfSeq seq;
    Word core;
    if (kind == WitnessKind::TildeCross) {
        // reversed c^s, then k*, then b^s
        core.letters.push_back(k - 1);
        core.letters.push_back(1);
        for (int i = 1; i < s; ++i) {
            core.letters.push_back(k);
            core.letters.push_back(1);
        }
        core.letters.push_back(k);
        for (int i = 0; i < s; ++i) {
            core.letters.push_back(1);
            core.letters.push_back(k);
        }
    } else {
        for (int i = 0; i < s; ++i) {
            core.letters.push_back(k);
            core.letters.push_back(1);
        }
        core.letters.push_back(k);
        for (int i = 0; i < s; ++i) {
            core.letters.push_back(1);
            core.letters.push_back(k);
        }
    }
    seq.core = core;
    seq.marker = 2 * s;
    seq.left = theta_left;
    seq.right = theta_right;
    return seq;
}

struct DominanceReport {
    bool dominated = true;
    CertInterval margin;  // enclosure of the minimal lambda_0 - lambda_i
    long worst_index = 0;
};

/// Certified check that lambda_0 exceeds every other lambda_i, including the
/// periodic limit values of the tails.  Throws DominanceFailure when some
/// finite position matches or beats position 0.
inline DominanceReport verify_lambda0_dominates(const BiInfSeq& seq) {
    LambdaValue l0 = lambda_at(seq, 0);
    DominanceReport out;
    bool first = true;
    for (const auto& c : detail::markov_candidates(seq)) {
        if (c.attained && c.index == 0) continue;
        Ordering ord = LambdaValue::compare(l0, c.lambda);
        if (c.attained) {
            if (ord != Ordering::GT)
                throw DominanceFailure(static_cast<int>(c.index),
                                       "lambda_0 does not dominate position " +
                                           std::to_string(c.index));
            CertInterval diff = l0.enclose_sum(128) - c.lambda.enclose_sum(128);
            if (first || diff.lo < out.margin.lo) {
                out.margin = diff;
                out.worst_index = c.index;
            }
            first = false;
        } else if (ord == Ordering::LT) {
            // a tail limit strictly above lambda_0 means the sup escapes
            throw DominanceFailure(static_cast<int>(c.index),
                                   "tail limit exceeds lambda_0");
        }
    }
    return out;
}

}  // namespace cfspec
