#pragma once

// Sums of Cantor sets: the gap-lemma criterion, certified sum intervals with
// the decomposition-and-glue strategy, adaptive brute-force Minkowski
// covers, the gluing chains covering the top of the spectrum, and the k = 3
// obstruction check.

#include "unions.hpp"

#include <deque>
#include <queue>

namespace cfspec {

struct NewhouseCertificate {
    bool applicable = false;
    Rat tau_product_lower;
    bool hull_a_exceeds_gap_b = false;
    bool hull_b_exceeds_gap_a = false;
};

/// tau(A) tau(B) >= 1 plus the two hull-versus-largest-gap conditions, all
/// certified.  With these, A + B is exactly the interval of the endpoint
/// sums.
inline NewhouseCertificate newhouse_applicable(const UnionSet& a, const UnionSet& b) {
    NewhouseCertificate out;
    UnionStructure sa = analyze(a), sb = analyze(b);
    out.tau_product_lower = sa.tau_floor * sb.tau_floor;
    out.hull_a_exceeds_gap_b = sb.largest_gap_len < sa.max - sa.min;
    out.hull_b_exceeds_gap_a = sa.largest_gap_len < sb.max - sb.min;
    out.applicable = out.tau_product_lower >= 1 && out.hull_a_exceeds_gap_b &&
                     out.hull_b_exceeds_gap_a;
    return out;
}

struct SumInterval {
    QuadIrr lo, hi;
    int pairs_certified = 0;  // pairwise Newhouse intervals glued together
};

namespace detail {

struct PieceInterval {
    QuadIrr lo, hi;
};

inline void sum_interval_rec(const UnionSet& a, const UnionSet& b, int depth,
                             std::vector<PieceInterval>& out) {
    NewhouseCertificate cert = newhouse_applicable(a, b);
    if (cert.applicable) {
        UnionStructure sa = analyze(a), sb = analyze(b);
        out.push_back({sa.min + sb.min, sa.max + sb.max});
        return;
    }
    if (depth == 0) throw GlueFailure(0, "sum decomposition depth exhausted");
    // decompose the operand whose largest gap blocks the other's hull
    UnionStructure sa = analyze(a), sb = analyze(b);
    bool split_b;
    if (!cert.hull_a_exceeds_gap_b && cert.hull_b_exceeds_gap_a)
        split_b = true;
    else if (cert.hull_a_exceeds_gap_b && !cert.hull_b_exceeds_gap_a)
        split_b = false;
    else
        split_b = sa.largest_gap_len < sb.largest_gap_len;
    if (split_b) {
        auto [b1, b2] = split_at_largest_gap(b);
        sum_interval_rec(a, b1, depth - 1, out);
        sum_interval_rec(a, b2, depth - 1, out);
    } else {
        auto [a1, a2] = split_at_largest_gap(a);
        sum_interval_rec(a1, b, depth - 1, out);
        sum_interval_rec(a2, b, depth - 1, out);
    }
}

}  // namespace detail

/// Certified A + B as one interval: pairwise gap-lemma intervals after
/// decomposition, glued by exact overlap checks.  Throws GlueFailure when
/// two consecutive pieces fail to overlap.
inline SumInterval sum_interval(const UnionSet& a, const UnionSet& b, int max_split_depth = 8) {
    std::vector<detail::PieceInterval> pieces;
    detail::sum_interval_rec(a, b, max_split_depth, pieces);
    std::sort(pieces.begin(), pieces.end(),
              [](const detail::PieceInterval& x, const detail::PieceInterval& y) { return x.lo < y.lo; });
    for (std::size_t i = 0; i + 1 < pieces.size(); ++i) {
        QuadIrr reach = pieces[i].hi;
        for (std::size_t j = 0; j <= i; ++j)
            if (reach < pieces[j].hi) reach = pieces[j].hi;
        if (reach < pieces[i + 1].lo)
            throw GlueFailure(static_cast<int>(i),
                              "sum pieces do not overlap between " + decimal_string(reach, 12) +
                                  " and " + decimal_string(pieces[i + 1].lo, 12));
    }
    SumInterval out;
    out.lo = pieces.front().lo;
    out.hi = pieces.front().hi;
    for (const auto& p : pieces)
        if (out.hi < p.hi) out.hi = p.hi;
    out.pairs_certified = static_cast<int>(pieces.size());
    // the glued hull must equal the endpoint sums
    UnionStructure sa = analyze(a), sb = analyze(b);
    if (out.lo != sa.min + sb.min || out.hi != sa.max + sb.max)
        throw GlueFailure(-1, "glued hull does not match endpoint sums");
    return out;
}

// ---------------------------------------------------------------------------
// Brute-force Minkowski covers (the oracle side)

struct BruteSumReport {
    std::vector<std::pair<Rat, Rat>> cover;             // merged union, ascending
    std::vector<std::pair<Rat, Rat>> gaps_inside_hull;  // complement pieces wider than fill
    Rat max_gap = 0;
    unsigned pairs_processed = 0;
    Rat max_final_piece = 0;  // widest depth-capped stage interval seen
};

namespace detail {

// Lightweight tree nodes for the cover sweeps: int64 convergents (exact up
// to the depth cap) and double endpoint enclosures fattened by a slack that
// dominates every rounding error in the few double operations involved.
constexpr double kCoverSlack = 1e-11;

struct LightNode {
    std::int64_t p, p_prev, q, q_prev;
    std::int8_t last = 0;
    std::int8_t depth = 0;
    bool even = true;
    bool first_type = true;
    std::array<std::int8_t, 16> address{};  // letters below the piece root
    double lo = 0, hi = 1;
};

inline double tail_double(const Word& head, const Word& per, bool upper) {
    CertInterval iv = enclose(tail_cached(head, per), 80);
    return upper ? static_cast<double>(iv.hi) * (1 + 1e-15) + 1e-18
                 : static_cast<double>(iv.lo) * (1 - 1e-15) - 1e-18;
}

struct LightSpecContext {
    Variant variant;
    int k;
    // endpoint tail enclosures: first/second/C-type spatial-left, and the
    // shared spatial-right tail (even parity; odd parity swaps)
    double first_lo, first_hi, second_lo, second_hi, right_lo, right_hi;

    explicit LightSpecContext(const CantorSpec& spec) : variant(spec.variant), k(spec.k) {
        if (variant == Variant::C) {
            first_lo = second_lo = tail_double(Word{}, Word{k, 1}, false);
            first_hi = second_hi = tail_double(Word{}, Word{k, 1}, true);
            right_lo = tail_double(Word{}, Word{1, k}, false);
            right_hi = tail_double(Word{}, Word{1, k}, true);
        } else {
            first_lo = tail_double(Word{4}, Word{1, 3}, false);
            first_hi = tail_double(Word{4}, Word{1, 3}, true);
            second_lo = tail_double(Word{}, Word{3, 1}, false);
            second_hi = tail_double(Word{}, Word{3, 1}, true);
            right_lo = tail_double(Word{}, Word{1, 3}, false);
            right_hi = tail_double(Word{}, Word{1, 3}, true);
        }
    }

    void set_endpoints(LightNode& n) const {
        double a_lo = n.first_type ? first_lo : second_lo;
        double a_hi = n.first_type ? first_hi : second_hi;
        double b_lo = right_lo, b_hi = right_hi;
        auto value = [&](double t) {
            return (static_cast<double>(n.p) + static_cast<double>(n.p_prev) * t) /
                   (static_cast<double>(n.q) + static_cast<double>(n.q_prev) * t);
        };
        double v1 = value(a_lo), v2 = value(a_hi), v3 = value(b_lo), v4 = value(b_hi);
        n.lo = std::min(std::min(v1, v2), std::min(v3, v4)) - kCoverSlack;
        n.hi = std::max(std::max(v1, v2), std::max(v3, v4)) + kCoverSlack;
    }

    LightNode root(const CantorSpec& spec) const {
        Convergents c = convergents(spec.prefix);
        LightNode n;
        n.p = static_cast<std::int64_t>(c.p());
        n.p_prev = static_cast<std::int64_t>(c.p_prev());
        n.q = static_cast<std::int64_t>(c.q());
        n.q_prev = static_cast<std::int64_t>(c.q_prev());
        n.last = static_cast<std::int8_t>(spec.prefix.empty() ? 0 : spec.prefix.back());
        n.even = spec.prefix.size() % 2 == 0;
        n.first_type = variant == Variant::K4 ? k4_first_type(spec.prefix.back()) : true;
        set_endpoints(n);
        return n;
    }

    void children(const LightNode& n, std::vector<LightNode>& out) const {
        out.clear();
        int hi_letter = variant == Variant::C ? k : (n.first_type ? 4 : 3);
        for (int c = 1; c <= hi_letter; ++c) {
            LightNode m = n;
            m.p = c * n.p + n.p_prev;
            m.p_prev = n.p;
            m.q = c * n.q + n.q_prev;
            m.q_prev = n.q;
            m.last = static_cast<std::int8_t>(c);
            m.depth = static_cast<std::int8_t>(n.depth + 1);
            m.even = !n.even;
            m.first_type = variant == Variant::K4 ? k4_first_type(c) : true;
            m.address[static_cast<std::size_t>(n.depth)] = static_cast<std::int8_t>(c);
            set_endpoints(m);
            out.push_back(m);
        }
    }

    /// Exact stage node for a light node (used for tie-breaking).
    StageNode exact(const CantorSpec& spec, const LightNode& n) const {
        StageNode s = root_interval(spec);
        for (int i = 0; i < n.depth; ++i) {
            int letter = n.address[static_cast<std::size_t>(i)];
            Subdivision sub = subdivide(s);
            bool found = false;
            for (const auto& c : sub.children)
                if (c.last_letter() == letter) {
                    s = c;
                    found = true;
                }
            if (!found) throw std::logic_error("light node letter not among children");
        }
        return s;
    }
};

/// Sorted disjoint union of double intervals with gaps <= fill merged away.
class MergedUnion {
  public:
    explicit MergedUnion(double fill) : fill_(fill) {}

    void insert(double lo, double hi) {
        auto it = iv_.upper_bound(lo);
        if (it != iv_.begin()) {
            auto prev = std::prev(it);
            if (prev->second + fill_ >= lo) {
                lo = prev->first;
                hi = std::max(hi, prev->second);
                it = iv_.erase(prev);
            }
        }
        while (it != iv_.end() && it->first <= hi + fill_) {
            hi = std::max(hi, it->second);
            it = iv_.erase(it);
        }
        iv_.emplace(lo, hi);
    }

    bool covers(double lo, double hi) const {
        auto it = iv_.upper_bound(lo);
        if (it == iv_.begin()) return false;
        auto prev = std::prev(it);
        return prev->first <= lo && hi <= prev->second;
    }

    const std::map<double, double>& intervals() const { return iv_; }

  private:
    double fill_;
    std::map<double, double> iv_;
};

inline Rat rat_from_double(double x) {
    // doubles are dyadic rationals; this conversion is exact
    Rat r;
    int exp;
    double m = std::frexp(x, &exp);
    std::int64_t mant = static_cast<std::int64_t>(std::ldexp(m, 53));
    exp -= 53;
    r = Rat(Int(mant));
    if (exp >= 0)
        r *= Rat(Int(1) << exp);
    else
        r /= Rat(Int(1) << -exp);
    return r;
}

}  // namespace detail

/// Union of all pairwise sums of depth-d stage intervals of A and B, as a
/// merged interval list; complement gaps narrower than `fill` are closed, so
/// the reported gaps are exactly the cover's gaps wider than `fill`.  The
/// sweep uses certified double enclosures (endpoints fattened by a slack
/// many orders below any tolerance of interest) and prunes pairs whose sum
/// is already covered, which cannot change any gap query above the fill.
inline BruteSumReport brute_force_sum(const UnionSet& a, const UnionSet& b, int depth, Rat fill,
                                      unsigned pop_cap = 30000000) {
    if (depth > 14) throw CapExceeded("brute_force_sum depth above cap");
    BruteSumReport out;
    double fill_d = static_cast<double>(fill) - 4 * detail::kCoverSlack;
    if (fill_d <= 0) throw ConstraintViolation("fill tolerance below the enclosure slack");
    detail::MergedUnion u(fill_d);

    struct Pair {
        detail::LightNode a, b;
        float lo;
    };
    auto cmp = [](const Pair& x, const Pair& y) { return x.lo > y.lo; };
    std::priority_queue<Pair, std::vector<Pair>, decltype(cmp)> pq(cmp);
    std::vector<detail::LightSpecContext> ctx_a, ctx_b;
    for (const auto& pa : a.pieces) ctx_a.emplace_back(pa);
    for (const auto& pb : b.pieces) ctx_b.emplace_back(pb);

    struct Tagged {
        detail::LightNode n;
        std::size_t piece;
    };
    auto push = [&](const detail::LightNode& na, std::size_t ia, const detail::LightNode& nb,
                    std::size_t ib) {
        Pair p{na, nb, static_cast<float>(na.lo + nb.lo)};
        p.a.address[15] = static_cast<std::int8_t>(ia);
        p.b.address[15] = static_cast<std::int8_t>(ib);
        pq.push(std::move(p));
    };
    for (std::size_t i = 0; i < a.pieces.size(); ++i)
        for (std::size_t j = 0; j < b.pieces.size(); ++j)
            push(ctx_a[i].root(a.pieces[i]), i, ctx_b[j].root(b.pieces[j]), j);

    std::vector<detail::LightNode> kids;
    while (!pq.empty()) {
        if (++out.pairs_processed > pop_cap) throw CapExceeded("brute_force_sum pair budget");
        Pair p = pq.top();
        pq.pop();
        double lo = p.a.lo + p.b.lo, hi = p.a.hi + p.b.hi;
        if (u.covers(lo, hi)) continue;
        bool final_a = p.a.depth >= depth, final_b = p.b.depth >= depth;
        if (final_a && final_b) {
            u.insert(lo, hi);
            double w = std::max(p.a.hi - p.a.lo, p.b.hi - p.b.lo);
            Rat wr = detail::rat_from_double(w);
            if (wr > out.max_final_piece) out.max_final_piece = wr;
            continue;
        }
        bool expand_a =
            !final_a && (final_b || (p.a.hi - p.a.lo) >= (p.b.hi - p.b.lo));
        std::size_t ia = static_cast<std::size_t>(p.a.address[15]);
        std::size_t ib = static_cast<std::size_t>(p.b.address[15]);
        if (expand_a) {
            ctx_a[ia].children(p.a, kids);
            for (const auto& c : kids) push(c, ia, p.b, ib);
        } else {
            ctx_b[ib].children(p.b, kids);
            for (const auto& c : kids) push(p.a, ia, c, ib);
        }
    }

    for (auto it = u.intervals().begin(); it != u.intervals().end(); ++it) {
        auto next = std::next(it);
        if (next == u.intervals().end()) break;
        Rat glo = detail::rat_from_double(it->second), ghi = detail::rat_from_double(next->first);
        out.gaps_inside_hull.emplace_back(glo, ghi);
        if (ghi - glo > out.max_gap) out.max_gap = ghi - glo;
    }
    for (const auto& [lo, hi] : u.intervals())
        out.cover.emplace_back(detail::rat_from_double(lo), detail::rat_from_double(hi));
    return out;
}

// ---------------------------------------------------------------------------
// Gluing chains

struct GluingStage {
    int s;
    QuadIrr tilde_lo, tilde_hi;    // tilde piece interval
    QuadIrr square_lo, square_hi;  // square piece interval
};

struct GluingReport {
    int k = 4;
    std::vector<GluingStage> stages;
    QuadIrr covered_lo, covered_hi;  // the glued interval (fractional frame)
    // distance of k + covered_hi to sqrt(k^2+4k), certified
    CertInterval distance_to_top;
};

inline Word repeat_pair(int x, int y, int times) {
    Word w;
    for (int i = 0; i < times; ++i) {
        w.letters.push_back(x);
        w.letters.push_back(y);
    }
    return w;
}

/// The s-indexed pieces covering [1 + sqrt(k^2+2k-3), sqrt(k^2+4k)) after
/// adding k: tilde pieces glued with square pieces, overlap inequalities
/// certified exactly for s = 1..s_max.
inline GluingReport gluing_chain(int k, int s_max) {
    if (k != 4 && k < 5) throw ConstraintViolation("gluing_chain needs k = 4 or k >= 5");
    if (s_max < 1) throw ConstraintViolation("gluing_chain needs s_max >= 1");
    GluingReport out;
    out.k = k;
    auto tilde_pair = [&](int s) -> std::pair<UnionSet, UnionSet> {
        if (k == 4) {
            Word bs = repeat_pair(1, 4, s);
            Word cs = repeat_pair(1, 4, s - 1) + Word{1, 3};
            return {UnionSet::tilde_k(bs), UnionSet::single(CantorSpec::k4(cs))};
        }
        Word bs = repeat_pair(1, k, s);
        Word cs = repeat_pair(1, k, s - 1) + Word{1, k - 1};
        return {UnionSet::tilde_c(bs, k), UnionSet::single(CantorSpec::c(cs, k - 1))};
    };
    auto square_set = [&](int s) {
        Word bs = repeat_pair(1, k, s);
        return k == 4 ? UnionSet::single(CantorSpec::k4(bs))
                      : UnionSet::single(CantorSpec::c(bs, k));
    };

    for (int s = 1; s <= s_max; ++s) {
        auto [tl, tr] = tilde_pair(s);
        SumInterval tilde = sum_interval(tl, tr);
        SumInterval square = sum_interval(square_set(s), square_set(s));
        // ordering within the stage
        if (!(tilde.lo < square.lo)) throw GlueFailure(s, "tilde piece does not start below square");
        if (!(square.lo < tilde.hi)) throw GlueFailure(s, "tilde/square overlap fails");
        if (!(tilde.hi < square.hi)) throw GlueFailure(s, "square piece does not extend past tilde");
        if (s > 1 && !(out.stages.back().square_hi > tilde.lo))
            throw GlueFailure(s, "square piece of previous stage does not reach this tilde piece");
        out.stages.push_back(GluingStage{s, tilde.lo, tilde.hi, square.lo, square.hi});
    }
    out.covered_lo = out.stages.front().tilde_lo;
    out.covered_hi = out.stages.back().square_hi;
    // distance to the top of the spectrum: sqrt(k^2+4k) - (k + covered_hi)
    QuadIrr top = QuadIrr::sqrt_of(Int(k) * k + 4 * k);
    CertInterval cov = enclose(out.covered_hi, 192);
    CertInterval t = enclose(top, 192);
    out.distance_to_top = CertInterval(t.lo - Rat(k) - cov.hi, t.hi - Rat(k) - cov.lo);
    return out;
}

// ---------------------------------------------------------------------------
// The k = 3 obstruction

struct K3GapReport {
    QuadIrr a, b;  // the open interval (a, b) missed by C(3)+C(3)
    bool a_lt_b = false;
    bool disjoint = false;           // depth-d cover of C(3)+C(3) misses (a,b)
    bool endpoint_in_cover = false;  // a lies in the cover at every depth <= d
    unsigned pairs_processed = 0;
};

/// Certifies that (a, b) with a = [0;(1 3)~] + [0;1 3 1 2 (1 3)~] and
/// b = 2 [0;1 3 1 3 (3 1)~] is disjoint from the depth-d cover of
/// C(3) + C(3).  Everything is same-field exact arithmetic in Q(sqrt 21).
inline K3GapReport k3_gap_check(int depth, unsigned pop_cap = 4000000) {
    if (depth > 14) throw CapExceeded("k3_gap_check depth above cap");
    K3GapReport out;
    out.a = tail_value(TailSpec(Word{}, Word{1, 3})) +
            tail_value(TailSpec(Word{1, 3, 1, 2}, Word{1, 3}));
    out.b = QuadIrr(2) * tail_value(TailSpec(Word{1, 3, 1, 3}, Word{3, 1}));
    out.a_lt_b = out.a < out.b;

    CantorSpec c3 = CantorSpec::c(Word{}, 3);
    struct Pair {
        StageNode a, b;
        int da, db;
    };
    std::deque<Pair> work;
    work.push_back(Pair{root_interval(c3), root_interval(c3), 0, 0});
    out.disjoint = true;
    while (!work.empty()) {
        if (++out.pairs_processed > pop_cap) throw CapExceeded("k3_gap_check pair budget");
        Pair p = work.front();
        work.pop_front();
        QuadIrr lo = p.a.lo() + p.b.lo(), hi = p.a.hi() + p.b.hi();
        // disjoint from the open interval (a,b): touching the endpoints is fine
        if (!(out.a < hi) || !(lo < out.b)) continue;
        if (p.da >= depth && p.db >= depth) {
            out.disjoint = false;
            continue;
        }
        bool split_a = p.da < depth && (p.db >= depth || !(p.a.length() < p.b.length()));
        if (split_a) {
            for (const auto& c : subdivide(p.a).children) work.push_back(Pair{c, p.b, p.da + 1, p.db});
        } else {
            for (const auto& c : subdivide(p.b).children) work.push_back(Pair{p.a, c, p.da, p.db + 1});
        }
    }

    // a's two summands are {1,3}-words, so a stays inside the cover sum
    out.endpoint_in_cover = true;
    TailSpec s1(Word{}, Word{1, 3}), s2(Word{1, 3, 1, 2}, Word{1, 3});
    for (int d = 1; d <= depth; ++d) {
        auto containing_node = [&](const TailSpec& t) {
            StageNode n = root_interval(c3);
            for (int i = 0; i < d; ++i) {
                int letter = t.letter(static_cast<std::size_t>(i));
                Subdivision s = subdivide(n);
                bool found = false;
                for (const auto& c : s.children)
                    if (c.last_letter() == letter) {
                        n = c;
                        found = true;
                    }
                if (!found) return std::optional<StageNode>();
            }
            return std::optional<StageNode>(n);
        };
        auto n1 = containing_node(s1), n2 = containing_node(s2);
        if (!n1 || !n2) {
            out.endpoint_in_cover = false;
            break;
        }
        QuadIrr v1 = tail_value(s1), v2 = tail_value(s2);
        bool in1 = !(v1 < n1->lo()) && !(n1->hi() < v1);
        bool in2 = !(v2 < n2->lo()) && !(n2->hi() < v2);
        if (!(in1 && in2)) out.endpoint_in_cover = false;
    }
    return out;
}

// ---------------------------------------------------------------------------
// The catalog of named sum claims

struct SumClaim {
    std::string id;
    std::string description;
    UnionSet lhs, rhs;
    QuadIrr claimed_lo, claimed_hi;
};

/// The named sum-interval claims, instantiated at stage s (s >= 1).
inline std::vector<SumClaim> sum_claim_catalog(int s) {
    std::vector<SumClaim> out;
    Word bs = repeat_pair(1, 4, s);
    Word cs = repeat_pair(1, 4, s - 1) + Word{1, 3};
    auto val = [](const Word& pre, std::initializer_list<int> head, std::initializer_list<int> per) {
        return cf_value(pre + Word(std::vector<int>(head)), TailSpec(Word{}, Word(std::vector<int>(per))));
    };

    // X^(s) = (U_{j=2..4} K(b^s j)) + K(c^s)
    {
        SumClaim c;
        c.id = "l11";
        c.description = "union over j=2..4 of K(b^s j), plus K(c^s)";
        c.lhs = UnionSet::of({CantorSpec::k4(bs.appended(2)), CantorSpec::k4(bs.appended(3)),
                              CantorSpec::k4(bs.appended(4))});
        c.rhs = UnionSet::single(CantorSpec::k4(cs));
        c.claimed_lo = val(bs, {4}, {1, 3}) + val(cs, {4}, {1, 3});
        c.claimed_hi = val(bs, {2}, {3, 1}) + val(cs, {}, {1, 3});
        out.push_back(std::move(c));
    }
    // Y^(s)_{l,m} = K(b^s 1 l) + K(c^s m), l = 1,2; m = 2,3,4
    for (int l = 1; l <= 2; ++l)
        for (int m = 2; m <= 4; ++m) {
            SumClaim c;
            c.id = "l12." + std::to_string(l) + std::to_string(m);
            c.description = "K(b^s 1 " + std::to_string(l) + ") + K(c^s " + std::to_string(m) + ")";
            c.lhs = UnionSet::single(CantorSpec::k4(bs.appended(1).appended(l)));
            c.rhs = UnionSet::single(CantorSpec::k4(cs.appended(m)));
            UnionStructure sl = analyze(c.lhs), sr = analyze(c.rhs);
            c.claimed_lo = sl.min + sr.min;
            c.claimed_hi = sl.max + sr.max;
            out.push_back(std::move(c));
        }
    // (K(b^s 1 1) u K(b^s 1 2)) + K(c^s m), m = 2,3,4: the l36 gluing
    for (int m = 2; m <= 4; ++m) {
        SumClaim c;
        c.id = "l36.m" + std::to_string(m);
        c.description = "(K(b^s 1 1) u K(b^s 1 2)) + K(c^s " + std::to_string(m) + ")";
        c.lhs = UnionSet::of(
            {CantorSpec::k4(bs.appended(1).appended(1)), CantorSpec::k4(bs.appended(1).appended(2))});
        c.rhs = UnionSet::single(CantorSpec::k4(cs.appended(m)));
        c.claimed_lo = val(bs, {1, 1}, {3, 1}) + val(cs, {m}, {1, 3});
        c.claimed_hi = val(bs, {1, 2}, {1, 3}) +
                       (m == 2 ? val(cs, {2}, {3, 1}) : val(cs, {m, 4}, {1, 3}));
        out.push_back(std::move(c));
    }
    // Z^(s) = (K(b^s 1 1) u K(b^s 1 2)) + (K(c^s 1 2) u K(c^s 1 3))
    {
        SumClaim c;
        c.id = "l13z";
        c.description = "(K(b^s 1 1) u K(b^s 1 2)) + (K(c^s 1 2) u K(c^s 1 3))";
        c.lhs = UnionSet::of(
            {CantorSpec::k4(bs.appended(1).appended(1)), CantorSpec::k4(bs.appended(1).appended(2))});
        c.rhs = UnionSet::of(
            {CantorSpec::k4(cs.appended(1).appended(2)), CantorSpec::k4(cs.appended(1).appended(3))});
        c.claimed_lo = val(bs, {1, 1}, {3, 1}) + val(cs, {1, 2}, {3, 1});
        c.claimed_hi = val(bs, {1, 2}, {1, 3}) + val(cs, {1, 3}, {1, 3});
        out.push_back(std::move(c));
    }
    // W^(s) = (K(b^s 1 1) u K(b^s 1 2)) + K(c^s 1 1)
    {
        SumClaim c;
        c.id = "l13w";
        c.description = "(K(b^s 1 1) u K(b^s 1 2)) + K(c^s 1 1)";
        c.lhs = UnionSet::of(
            {CantorSpec::k4(bs.appended(1).appended(1)), CantorSpec::k4(bs.appended(1).appended(2))});
        c.rhs = UnionSet::single(CantorSpec::k4(cs.appended(1).appended(1)));
        c.claimed_lo = val(bs, {1, 1}, {3, 1}) + val(cs, {1, 1}, {3, 1});
        c.claimed_hi = val(bs, {1, 2}, {1, 3}) + val(cs, {1, 1}, {1, 3});
        out.push_back(std::move(c));
    }
    // (K(b^s 1 1) u K(b^s 1 2)) + K(c^s 1)
    {
        SumClaim c;
        c.id = "l14";
        c.description = "(K(b^s 1 1) u K(b^s 1 2)) + K(c^s 1)";
        c.lhs = UnionSet::of(
            {CantorSpec::k4(bs.appended(1).appended(1)), CantorSpec::k4(bs.appended(1).appended(2))});
        c.rhs = UnionSet::single(CantorSpec::k4(cs.appended(1)));
        c.claimed_lo = val(bs, {1, 1}, {3, 1}) + val(cs, {1}, {1, 3});
        c.claimed_hi = val(bs, {1, 2}, {1, 3}) + val(cs, {1}, {3, 1});
        out.push_back(std::move(c));
    }
    // K(c^s) + tilde_K(b^s)
    {
        SumClaim c;
        c.id = s == 1 ? "prop-13-14" : "prop-13-14.s" + std::to_string(s);
        c.description = "K(c^s) + tilde K(b^s)";
        c.lhs = UnionSet::single(CantorSpec::k4(cs));
        c.rhs = UnionSet::tilde_k(bs);
        c.claimed_lo = val(cs, {4}, {1, 3}) + val(bs, {4}, {1, 3});
        c.claimed_hi = val(cs, {}, {1, 3}) + val(bs, {1, 2}, {1, 3});
        out.push_back(std::move(c));
    }
    return out;
}

}  // namespace cfspec
