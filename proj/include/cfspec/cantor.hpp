#pragma once

// Stage-interval trees for the restricted continued-fraction Cantor sets.
//
// Two primitive families are built here:
//   * K4: words over {1,2,3,4} avoiding the transitions (1,4) and (2,4).
//     A node whose word ends in 3 or 4 is of first type (4 children, 3 gaps),
//     a node ending in 1 or 2 is of second type (3 children, 2 gaps).  The
//     endpoint tails are (1,3)-periodic; everything lives in Q(sqrt(21)).
//   * C(k): the full shift on {1,..,k}; k children and k-1 gaps per node,
//     endpoint tails (1,k)/(k,1)-periodic.
//
// Endpoint order flips with the parity of the word length; subdivisions tile
// the parent exactly (children and gaps share endpoints), which the tests
// assert as the partition invariant.
//
// Thickness lower bounds combine exact bridge/gap ratios at explored nodes
// with closed-form worst-case bounds: every ratio is a one-variable function
// of beta = q_{n-1}/q_n, and beta ranges are certified from the last letter
// (a word ending in the letter L has beta in [1/(L+1), 1/L]).  The
// closed-form side is verified by interval branch-and-bound, not by trusting
// any printed constant.

#include "expr.hpp"
#include "tail.hpp"

#include <functional>
#include <map>
#include <mutex>

namespace cfspec {

enum class Variant { K4, C };

struct CantorSpec {
    Variant variant = Variant::K4;
    Word prefix;
    int k = 4;  // alphabet bound for the C variant

    static CantorSpec k4(Word prefix) {
        if (prefix.empty()) throw ConstraintViolation("K4 spec needs a nonempty prefix");
        for (int a : prefix.letters)
            if (a > 4) throw ConstraintViolation("K4 prefix letter > 4");
        return CantorSpec{Variant::K4, std::move(prefix), 4};
    }
    // The prefix may use letters above the alphabet bound (the tilde-set
    // decompositions need that); only the tails are alphabet-restricted.
    static CantorSpec c(Word prefix, int k) {
        if (k < 2) throw ConstraintViolation("C variant needs k >= 2");
        return CantorSpec{Variant::C, std::move(prefix), k};
    }

    friend bool operator==(const CantorSpec& a, const CantorSpec& b) {
        return a.variant == b.variant && a.prefix == b.prefix && a.k == b.k;
    }
    friend bool operator<(const CantorSpec& a, const CantorSpec& b) {
        if (a.variant != b.variant) return a.variant < b.variant;
        if (a.k != b.k) return a.k < b.k;
        return a.prefix < b.prefix;
    }

    std::string str() const {
        return (variant == Variant::K4 ? std::string("K(") : "C" + std::to_string(k) + "(") +
               prefix.str() + ")";
    }
};

namespace detail {

/// Memoized tail values shared across node computations.
inline const QuadIrr& tail_cached(const Word& head, const Word& period) {
    static std::map<std::pair<std::vector<int>, std::vector<int>>, QuadIrr> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(head.letters, period.letters);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, tail_value(TailSpec(head, period))).first;
    return it->second;
}

}  // namespace detail

struct StageNode {
    CantorSpec spec;
    Word word;  // prefix + address
    Int p, p_prev, q, q_prev;
    bool first_type = true;  // K4 only; C nodes ignore it

    std::size_t depth() const { return word.size() - spec.prefix.size(); }
    bool even() const { return word.size() % 2 == 0; }
    Rat beta() const { return Rat(q_prev, q); }
    int last_letter() const { return word.empty() ? 0 : word.back(); }

    Word address() const {
        Word a;
        a.letters.assign(word.letters.begin() + static_cast<long>(spec.prefix.size()),
                         word.letters.end());
        return a;
    }

    /// Value of [0; word, tail] for a tail with exact value t.
    QuadIrr endpoint(const QuadIrr& t) const {
        return (QuadIrr(p) + QuadIrr(p_prev) * t) / (QuadIrr(q) + QuadIrr(q_prev) * t);
    }

    QuadIrr lo() const { return endpoint(lo_tail()); }
    QuadIrr hi() const { return endpoint(hi_tail()); }
    QuadIrr length() const { return hi() - lo(); }

    const QuadIrr& lo_tail() const { return even() ? left_tail() : right_tail(); }
    const QuadIrr& hi_tail() const { return even() ? right_tail() : left_tail(); }

  private:
    // tails at the spatially-left/right end for EVEN parity
    const QuadIrr& left_tail() const {
        if (spec.variant == Variant::C) return detail::tail_cached(Word{}, Word{spec.k, 1});
        return first_type ? detail::tail_cached(Word{4}, Word{1, 3})
                          : detail::tail_cached(Word{}, Word{3, 1});
    }
    const QuadIrr& right_tail() const {
        if (spec.variant == Variant::C) return detail::tail_cached(Word{}, Word{1, spec.k});
        return detail::tail_cached(Word{}, Word{1, 3});
    }
};

inline bool k4_first_type(int last_letter) { return last_letter >= 3; }

/// The convex-hull stage interval of the Cantor set.
inline StageNode root_interval(const CantorSpec& spec) {
    StageNode n;
    n.spec = spec;
    n.word = spec.prefix;
    Convergents c = convergents(spec.prefix);
    n.p = c.p();
    n.p_prev = c.p_prev();
    n.q = c.q();
    n.q_prev = c.q_prev();
    if (spec.variant == Variant::K4) n.first_type = k4_first_type(spec.prefix.back());
    return n;
}

struct GapInterval {
    QuadIrr lo, hi;
    int label;  // the O^j index used in the subdivision lemmas
    QuadIrr length() const { return hi - lo; }
};

struct Subdivision {
    StageNode parent;
    std::vector<StageNode> children;  // spatial order, left to right
    std::vector<GapInterval> gaps;    // gaps[i] sits between children[i] and children[i+1]
};

namespace detail {

inline StageNode extend(const StageNode& n, int letter) {
    StageNode c = n;
    c.word = n.word.appended(letter);
    c.p = letter * n.p + n.p_prev;
    c.p_prev = n.p;
    c.q = letter * n.q + n.q_prev;
    c.q_prev = n.q;
    if (n.spec.variant == Variant::K4) c.first_type = k4_first_type(letter);
    return c;
}

struct GapTemplate {
    Word lo_head, lo_per, hi_head, hi_per;
    int label;
};

/// Gap templates in spatial order for an EVEN-parity node; odd parity
/// mirrors the order and swaps each gap's endpoints.
inline std::vector<GapTemplate> gap_templates(const StageNode& n) {
    if (n.spec.variant == Variant::C) {
        std::vector<GapTemplate> out;
        for (int j = n.spec.k - 1; j >= 1; --j)
            out.push_back({Word{j + 1}, Word{n.spec.k, 1}, Word{j}, Word{1, n.spec.k}, j});
        return out;
    }
    if (n.first_type)
        return {{Word{4, 4}, Word{1, 3}, Word{3}, Word{1, 3}, 3},
                {Word{3, 4}, Word{1, 3}, Word{2}, Word{1, 3}, 2},
                {Word{2}, Word{3, 1}, Word{1}, Word{1, 3}, 1}};
    return {{Word{3, 4}, Word{1, 3}, Word{2}, Word{1, 3}, 2},
            {Word{2}, Word{3, 1}, Word{1}, Word{1, 3}, 1}};
}

inline std::vector<int> child_letters_desc(const StageNode& n) {
    if (n.spec.variant == Variant::C) {
        std::vector<int> out;
        for (int j = n.spec.k; j >= 1; --j) out.push_back(j);
        return out;
    }
    return n.first_type ? std::vector<int>{4, 3, 2, 1} : std::vector<int>{3, 2, 1};
}

}  // namespace detail

/// Children and gaps of a stage interval, matching the subdivision
/// templates; spatial (left to right) order in both vectors.
inline Subdivision subdivide(const StageNode& n) {
    Subdivision s;
    s.parent = n;
    auto letters = detail::child_letters_desc(n);
    auto gaps = detail::gap_templates(n);
    if (!n.even()) {
        std::reverse(letters.begin(), letters.end());
        std::reverse(gaps.begin(), gaps.end());
    }
    for (int c : letters) s.children.push_back(detail::extend(n, c));
    for (auto& g : gaps) {
        QuadIrr a = n.endpoint(detail::tail_cached(g.lo_head, g.lo_per));
        QuadIrr b = n.endpoint(detail::tail_cached(g.hi_head, g.hi_per));
        if (!n.even()) std::swap(a, b);
        s.gaps.push_back(GapInterval{std::move(a), std::move(b), g.label});
    }
    return s;
}

/// Exact tiling check: parent = children U gaps with shared endpoints.
inline bool partition_check(const Subdivision& s) {
    if (s.children.size() != s.gaps.size() + 1) return false;
    if (s.children.front().lo() != s.parent.lo()) return false;
    if (s.children.back().hi() != s.parent.hi()) return false;
    for (std::size_t i = 0; i < s.gaps.size(); ++i) {
        if (s.children[i].hi() != s.gaps[i].lo) return false;
        if (s.gaps[i].hi != s.children[i + 1].lo()) return false;
    }
    for (const auto& c : s.children)
        if (!(c.lo() < c.hi())) return false;
    for (const auto& g : s.gaps)
        if (!(g.lo < g.hi)) return false;
    return true;
}

/// Walk the tree to `depth` levels below the root, calling fn on every
/// subdivision (the root's is depth 1).
inline void explore(const CantorSpec& spec, int depth,
                    const std::function<void(const Subdivision&)>& fn) {
    std::function<void(const StageNode&, int)> rec = [&](const StageNode& n, int remaining) {
        if (remaining == 0) return;
        Subdivision s = subdivide(n);
        fn(s);
        for (const auto& c : s.children) rec(c, remaining - 1);
    };
    rec(root_interval(spec), depth);
}

// ---------------------------------------------------------------------------
// Bridges and thickness

struct GapRatio {
    int label;
    QuadIrr left_bridge, right_bridge, gap;
    QuadIrr min_ratio() const {
        const QuadIrr& b = left_bridge < right_bridge ? left_bridge : right_bridge;
        return b / gap;
    }
};

/// Bridge lengths within the parent: a bridge extends across neighbouring
/// gaps that are strictly smaller than the gap under consideration.  These
/// are lower bounds for the true bridges of the Cantor set.
inline std::vector<GapRatio> gap_ratios(const Subdivision& s) {
    std::vector<QuadIrr> child_len, gap_len;
    for (const auto& c : s.children) child_len.push_back(c.length());
    for (const auto& g : s.gaps) gap_len.push_back(g.length());
    std::vector<GapRatio> out;
    for (std::size_t i = 0; i < s.gaps.size(); ++i) {
        GapRatio r;
        r.label = s.gaps[i].label;
        r.gap = gap_len[i];
        // left side: children[i], extending over smaller gaps
        QuadIrr left = child_len[i];
        for (std::size_t j = i; j-- > 0;) {
            if (!(gap_len[j] < gap_len[i])) break;
            left = left + gap_len[j] + child_len[j];
        }
        QuadIrr right = child_len[i + 1];
        for (std::size_t j = i + 1; j < s.gaps.size(); ++j) {
            if (!(gap_len[j] < gap_len[i])) break;
            right = right + gap_len[j] + child_len[j + 1];
        }
        r.left_bridge = std::move(left);
        r.right_bridge = std::move(right);
        out.push_back(std::move(r));
    }
    return out;
}

/// Same-node gap chain |O^j| decreasing in j, plus: the child's largest gap
/// is smaller than every parent gap adjacent to that child's interval.
/// These are the inequalities the bridge identification and the
/// largest-gap identification rest on.
inline bool gap_monotonicity_check(const Subdivision& child_sub, const Subdivision& parent_sub) {
    auto chain_ok = [](const Subdivision& s) {
        // labels increase with gap length: O^1 is the largest
        for (std::size_t i = 0; i < s.gaps.size(); ++i)
            for (std::size_t j = i + 1; j < s.gaps.size(); ++j) {
                const auto &a = s.gaps[i], &b = s.gaps[j];
                if (a.label < b.label && !(b.length() < a.length())) return false;
                if (a.label > b.label && !(a.length() < b.length())) return false;
            }
        return true;
    };
    if (!chain_ok(child_sub) || !chain_ok(parent_sub)) return false;
    // locate the child within the parent
    std::size_t pos = parent_sub.children.size();
    for (std::size_t i = 0; i < parent_sub.children.size(); ++i)
        if (parent_sub.children[i].word == child_sub.parent.word) pos = i;
    if (pos == parent_sub.children.size()) return true;  // vacuous: not a direct child
    QuadIrr child_largest(0);
    for (const auto& g : child_sub.gaps)
        if (child_largest < g.length()) child_largest = g.length();
    if (pos > 0 && !(child_largest < parent_sub.gaps[pos - 1].length())) return false;
    if (pos < parent_sub.gaps.size() && !(child_largest < parent_sub.gaps[pos].length())) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Closed-form worst cases over beta ranges

namespace detail {

/// [L; tail] continuation value for a gap/child endpoint template.
inline QuadIrr continuation(int first, const Word& head, const Word& per) {
    return QuadIrr(first) + tail_cached(head, per);
}

/// length expression (up to the common q^2 factor) of an interval whose two
/// endpoint continuations are x > y, as a function of beta = var(0):
///   (x - y) / ((beta + x)(beta + y))
inline Expr len_expr(const QuadIrr& x, const QuadIrr& y) {
    Expr beta = Expr::var(0);
    Expr ex = Expr::constant(x), ey = Expr::constant(y);
    return (ex - ey) / ((beta + ex) * (beta + ey));
}

struct TypeTables {
    std::vector<Expr> child_len;  // spatial order for even parity
    std::vector<Expr> gap_len;
    std::vector<int> gap_label;
    std::vector<int> child_letter;
};

inline TypeTables k4_tables(bool first_type) {
    auto C = [](int f, Word h, Word p) { return continuation(f, h, p); };
    TypeTables t;
    QuadIrr c1a = C(1, {}, {1, 3}), c1b = C(1, {}, {3, 1});
    QuadIrr c2a = C(2, {}, {1, 3}), c2b = C(2, {}, {3, 1});
    QuadIrr c3a = C(3, {}, {1, 3}), c3b = C(3, {4}, {1, 3});
    QuadIrr c4a = C(4, {}, {1, 3}), c4b = C(4, {4}, {1, 3});
    if (first_type) {
        t.child_letter = {4, 3, 2, 1};
        t.child_len = {len_expr(c4a, c4b), len_expr(c3a, c3b), len_expr(c2a, c2b),
                       len_expr(c1a, c1b)};
        t.gap_label = {3, 2, 1};
        t.gap_len = {len_expr(c4b, c3a), len_expr(c3b, c2a), len_expr(c2b, c1a)};
    } else {
        t.child_letter = {3, 2, 1};
        t.child_len = {len_expr(c3a, c3b), len_expr(c2a, c2b), len_expr(c1a, c1b)};
        t.gap_label = {2, 1};
        t.gap_len = {len_expr(c3b, c2a), len_expr(c2b, c1a)};
    }
    return t;
}

inline TypeTables c_tables(int k) {
    TypeTables t;
    for (int j = k; j >= 1; --j) {
        QuadIrr a = continuation(j, {}, Word{1, k});
        QuadIrr b = continuation(j, {}, Word{k, 1});
        t.child_letter.push_back(j);
        t.child_len.push_back(len_expr(a, b));
        if (j < k) {
            // gap between children j+1 and j: continuations [j+1; (k,1)~], [j; (1,k)~]
            QuadIrr glo = continuation(j + 1, {}, Word{k, 1});
            QuadIrr ghi = continuation(j, {}, Word{1, k});
            t.gap_label.push_back(j);
            t.gap_len.push_back(len_expr(glo, ghi));
        }
    }
    // insert gaps in spatial positions (between consecutive children)
    return t;
}

/// Certified beta range for a node by its last letter; the continuation
/// after the last letter lies in [0, 1], so beta = [0; L, ...] is within
/// [1/(L+1), 1/L].  The root of a C spec may have an empty word (beta = 0).
inline CertInterval beta_range_for_letter(int last_letter, bool include_empty) {
    Rat lo = Rat(1, last_letter + 1), hi = Rat(1, last_letter);
    if (include_empty) lo = 0;
    return CertInterval(lo, hi);
}

inline CertInterval beta_range_for_type(Variant v, int k, bool first_type) {
    if (v == Variant::C) return CertInterval(Rat(0), Rat(1));
    return first_type ? CertInterval(Rat(1, 5), Rat(1, 3)) : CertInterval(Rat(1, 3), Rat(1));
}

}  // namespace detail

struct ClosedFormFloor {
    bool holds = false;
    Rat floor;  // certified lower bound for every bridge/gap ratio at
                // every node of the given type, over the whole beta range
};

/// Branch-and-bound certification that min(|L|,|R|)/|O| > threshold for
/// every gap of every node of the given variant, uniformly in beta.
inline ClosedFormFloor closed_form_thickness_floor(Variant v, int k, const Rat& threshold) {
    static std::map<std::tuple<Variant, int, Rat>, ClosedFormFloor> cache;
    static std::mutex mu;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find({v, k, threshold});
        if (it != cache.end()) return it->second;
    }
    ClosedFormFloor out;
    out.holds = true;
    bool first = true;
    auto run_type = [&](const detail::TypeTables& t, const CertInterval& beta_range) {
        for (std::size_t gi = 0; gi < t.gap_len.size(); ++gi) {
            // left bridge: extend over smaller gaps (gaps to the left have
            // larger labels in even order when label > this label... use the
            // chain: label j+1 < label j in length, so extension from gap gi
            // covers all gaps with larger label and their children)
            Expr left = t.child_len[gi];
            for (std::size_t j = gi; j-- > 0;) {
                if (t.gap_label[j] < t.gap_label[gi]) break;  // larger gap stops the bridge
                left = left + t.gap_len[j] + t.child_len[j];
            }
            Expr right = t.child_len[gi + 1];
            for (std::size_t j = gi + 1; j < t.gap_len.size(); ++j) {
                if (t.gap_label[j] < t.gap_label[gi]) break;
                right = right + t.gap_len[j] + t.child_len[j + 1];
            }
            for (const Expr& bridge : {left, right}) {
                auto chk = certified_gt_on_box(bridge / t.gap_len[gi], {beta_range}, threshold);
                if (!chk.holds) {
                    out.holds = false;
                    return;
                }
                if (first || chk.bound < out.floor) out.floor = chk.bound;
                first = false;
            }
        }
    };
    if (v == Variant::K4) {
        run_type(detail::k4_tables(true), detail::beta_range_for_type(v, k, true));
        if (out.holds) run_type(detail::k4_tables(false), detail::beta_range_for_type(v, k, false));
    } else {
        run_type(detail::c_tables(k), detail::beta_range_for_type(v, k, true));
    }
    if (!out.holds) out.floor = 0;
    std::lock_guard<std::mutex> lock(mu);
    cache[{v, k, threshold}] = out;
    return out;
}

/// Universal version of the gap-dominance checks: for every parent type and
/// child letter, the child's largest gap is smaller than each parent gap
/// adjacent to the child's interval, uniformly in beta.  This is what makes
/// the root's largest gap the largest gap of the whole set.
inline bool closed_form_gap_dominance(Variant v, int k) {
    static std::map<std::pair<Variant, int>, bool> cache;
    static std::mutex mu;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find({v, k});
        if (it != cache.end()) return it->second;
    }
    bool ok = true;
    auto child_tables = [&](int letter) {
        if (v == Variant::C) return detail::c_tables(k);
        return detail::k4_tables(k4_first_type(letter));
    };
    auto run_type = [&](const detail::TypeTables& t, const CertInterval& beta_range) {
        // gap chain: O^1 is strictly the largest, uniformly in beta
        for (std::size_t i = 0; i + 1 < t.gap_len.size() && ok; ++i) {
            // spatial even order has labels decreasing, so gap i+1 > gap i
            auto chk = certified_gt_on_box(t.gap_len[i + 1] / t.gap_len[i], {beta_range}, Rat(1));
            if (!chk.holds) ok = false;
        }
        for (std::size_t ci = 0; ci < t.child_len.size() && ok; ++ci) {
            int letter = t.child_letter[ci];
            // child's largest gap is its O^1; rebuild its length with the
            // child's beta = 1/(letter + beta) substituted, and rescale by
            // (q_parent/q_child)^2 = 1/(letter + beta)^2.
            Expr beta = Expr::var(0);
            Expr cbeta = Expr::constant(QuadIrr(1)) / (Expr::constant(QuadIrr(letter)) + beta);
            QuadIrr glo = v == Variant::C ? detail::continuation(2, {}, Word{k, 1})
                                          : detail::continuation(2, {}, Word{3, 1});
            QuadIrr ghi = v == Variant::C ? detail::continuation(1, {}, Word{1, k})
                                          : detail::continuation(1, {}, Word{1, 3});
            Expr ex = Expr::constant(glo), ey = Expr::constant(ghi);
            Expr child_gap = (ex - ey) / ((cbeta + ex) * (cbeta + ey));
            Expr child_gap_parent_scale = child_gap * cbeta * cbeta;
            // adjacent parent gaps sit at spatial positions ci-1 and ci
            for (long gi : {static_cast<long>(ci) - 1, static_cast<long>(ci)}) {
                if (gi < 0 || gi >= static_cast<long>(t.gap_len.size())) continue;
                auto chk = certified_lt_on_box(child_gap_parent_scale / t.gap_len[gi], {beta_range},
                                               Rat(1));
                if (!chk.holds) ok = false;
            }
        }
    };
    if (v == Variant::K4) {
        run_type(detail::k4_tables(true), detail::beta_range_for_type(v, k, true));
        if (ok) run_type(detail::k4_tables(false), detail::beta_range_for_type(v, k, false));
    } else {
        run_type(detail::c_tables(k), detail::beta_range_for_type(v, k, true));
    }
    std::lock_guard<std::mutex> lock(mu);
    cache[{v, k}] = ok;
    return ok;
}

// ---------------------------------------------------------------------------

struct ThicknessBound {
    Rat tau_lower;      // certified lower bound for tau(K)
    int depth_explored = 0;
    Rat explored_inf;   // infimum of exact ratios over explored gaps
    bool closed_form_ok = false;
};

/// Certified thickness lower bound: exact bridge/gap ratios at every
/// explored gap, combined with the closed-form floor covering all
/// unexplored depth.
inline ThicknessBound thickness_lower_bound(const CantorSpec& spec, int depth,
                                            const Rat& floor_threshold = Rat(1)) {
    ThicknessBound out;
    out.depth_explored = depth;
    std::optional<QuadIrr> inf;
    explore(spec, depth, [&](const Subdivision& s) {
        for (const auto& r : gap_ratios(s)) {
            QuadIrr m = r.min_ratio();
            if (!inf || m < *inf) inf = m;
        }
    });
    ClosedFormFloor floor = closed_form_thickness_floor(spec.variant, spec.k, floor_threshold);
    out.closed_form_ok = floor.holds;
    if (inf) out.explored_inf = enclose(*inf, 96).lo;
    if (!floor.holds) throw ThicknessUndecided("closed-form floor failed for " + spec.str());
    out.tau_lower = inf ? std::min(out.explored_inf, floor.floor) : floor.floor;
    return out;
}

struct Extremes {
    QuadIrr min, max;
    GapInterval largest_gap;
};

/// Exact extremes of the set and its largest bounded gap (the root O^1),
/// valid by the certified gap-dominance inequalities.
inline Extremes hull_and_extremes(const CantorSpec& spec) {
    static std::map<CantorSpec, Extremes> cache;
    static std::mutex mu;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(spec);
        if (it != cache.end()) return it->second;
    }
    if (!closed_form_gap_dominance(spec.variant, spec.k))
        throw ThicknessUndecided("gap dominance certification failed for " + spec.str());
    StageNode root = root_interval(spec);
    Subdivision s = subdivide(root);
    Extremes e{root.lo(), root.hi(), s.gaps.front()};
    for (const auto& g : s.gaps)
        if (e.largest_gap.length() < g.length()) e.largest_gap = g;
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(spec, e);
    return e;
}

/// All depth-d stage intervals as exact rational enclosures, left to right.
inline std::vector<CertInterval> brute_force_cover(const CantorSpec& spec, int depth,
                                                   unsigned bits = 128, int cap = 14) {
    if (depth > cap) throw CapExceeded("brute_force_cover depth above cap");
    std::vector<CertInterval> out;
    std::function<void(const StageNode&, int)> rec = [&](const StageNode& n, int remaining) {
        if (remaining == 0) {
            out.push_back(hull(enclose(n.lo(), bits), enclose(n.hi(), bits)));
            return;
        }
        for (const auto& c : subdivide(n).children) rec(c, remaining - 1);
    };
    rec(root_interval(spec), depth);
    return out;
}

}  // namespace cfspec
