#pragma once

// Finite ordered unions of primitive Cantor specs.  The tilde sets are
// represented exactly this way: as the explicit unions their defining
// letter restrictions amount to, so the sum lemmas stay mechanical.
//
//   tilde_K(b) = K(b4) u K(b3) u K(b2) u K(b11) u K(b12)
//   tilde_C(b,k) = U_{j=2..k-1} C(bj, k-1)  u  U_{r=1..k-2} C(b1r, k-1)
//
// analyze() certifies the positional ordering of the pieces, exact hull
// extremes, the largest bounded gap, and a thickness floor combining the
// per-variant closed-form floors with exact bridge/gap ratios at the
// internal gaps.

#include "cantor.hpp"

namespace cfspec {

struct UnionSet {
    std::vector<CantorSpec> pieces;  // positional order, left to right

    static UnionSet single(CantorSpec s) { return UnionSet{{std::move(s)}}; }

    static UnionSet of(std::vector<CantorSpec> ps) {
        if (ps.empty()) throw ConstraintViolation("empty union");
        std::sort(ps.begin(), ps.end(), [](const CantorSpec& a, const CantorSpec& b) {
            return root_interval(a).lo() < root_interval(b).lo();
        });
        return UnionSet{std::move(ps)};
    }

    static UnionSet tilde_k(const Word& prefix) {
        if (!prefix.empty() && prefix.back() <= 2)
            throw ConstraintViolation("tilde_k after a small letter would forbid the 4-branch");
        std::vector<CantorSpec> ps;
        for (int j = 2; j <= 4; ++j) ps.push_back(CantorSpec::k4(prefix.appended(j)));
        ps.push_back(CantorSpec::k4(prefix.appended(1).appended(1)));
        ps.push_back(CantorSpec::k4(prefix.appended(1).appended(2)));
        return of(std::move(ps));
    }

    static UnionSet tilde_c(const Word& prefix, int k) {
        if (k < 5) throw ConstraintViolation("tilde_c needs k >= 5");
        std::vector<CantorSpec> ps;
        for (int j = 2; j <= k - 1; ++j) ps.push_back(CantorSpec::c(prefix.appended(j), k - 1));
        for (int r = 1; r <= k - 2; ++r)
            ps.push_back(CantorSpec::c(prefix.appended(1).appended(r), k - 1));
        return of(std::move(ps));
    }

    std::string str() const {
        std::string s;
        for (std::size_t i = 0; i < pieces.size(); ++i) {
            if (i) s += " u ";
            s += pieces[i].str();
        }
        return s;
    }
};

struct UnionStructure {
    QuadIrr min, max;         // exact hull extremes
    QuadIrr largest_gap_len;  // over internal gaps and the pieces' own gaps
    Rat tau_floor;            // certified thickness lower bound
    bool certified = false;
};

namespace detail {

struct BridgePart {
    QuadIrr length;
    bool exhausted;  // the whole piece counted; the bridge may continue past it
};

/// Lower bound on the bridge reaching from one edge of a piece toward its
/// interior, stopping at the first gap of length >= stop_len.  Descends at
/// most max_depth subdivision levels; stopping early only shortens the
/// bridge, never overstates it.
inline BridgePart bridge_into(const StageNode& node, bool from_left, const QuadIrr& stop_len,
                              int max_depth) {
    if (max_depth == 0) return {QuadIrr(0), false};
    Subdivision s = subdivide(node);
    QuadIrr acc(0);
    long n = static_cast<long>(s.children.size());
    for (long step = 0; step < n; ++step) {
        long ci = from_left ? step : n - 1 - step;
        const StageNode& child = s.children[static_cast<std::size_t>(ci)];
        // largest gap inside the child's subtree is its own O^1
        Subdivision cs = subdivide(child);
        QuadIrr child_largest(0);
        for (const auto& g : cs.gaps)
            if (child_largest < g.length()) child_largest = g.length();
        if (child_largest < stop_len) {
            acc = acc + child.length();
        } else {
            BridgePart inner = bridge_into(child, from_left, stop_len, max_depth - 1);
            return {acc + inner.length, false};
        }
        long gi = from_left ? step : n - 2 - step;
        if (gi < 0 || gi >= static_cast<long>(s.gaps.size())) continue;
        const QuadIrr glen = s.gaps[static_cast<std::size_t>(gi)].length();
        if (!(glen < stop_len)) return {acc, false};
        acc = acc + glen;
    }
    return {acc, true};
}

}  // namespace detail

/// Certified structure of a finite union: exact extremes, largest gap and a
/// thickness floor.  Throws ThicknessUndecided if a certification step
/// cannot be completed.  Results are memoized per union.
inline UnionStructure analyze(const UnionSet& u, int bridge_depth = 4) {
    static std::map<std::vector<CantorSpec>, UnionStructure> cache;
    static std::mutex mu;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(u.pieces);
        if (it != cache.end()) return it->second;
    }
    UnionStructure out;
    std::vector<Extremes> ext;
    for (const auto& p : u.pieces) ext.push_back(hull_and_extremes(p));
    for (std::size_t i = 0; i + 1 < ext.size(); ++i)
        if (!(ext[i].max < ext[i + 1].min))
            throw ThicknessUndecided("union pieces out of order or overlapping: " + u.str());
    out.min = ext.front().min;
    out.max = ext.back().max;

    out.largest_gap_len = QuadIrr(0);
    for (const auto& e : ext)
        if (out.largest_gap_len < e.largest_gap.length()) out.largest_gap_len = e.largest_gap.length();
    std::vector<QuadIrr> internal;
    for (std::size_t i = 0; i + 1 < ext.size(); ++i) {
        internal.push_back(ext[i + 1].min - ext[i].max);
        if (out.largest_gap_len < internal.back()) out.largest_gap_len = internal.back();
    }

    // thickness floor: per-piece closed-form floors ...
    bool first = true;
    for (const auto& p : u.pieces) {
        ClosedFormFloor f = closed_form_thickness_floor(p.variant, p.k, Rat(1));
        if (!f.holds) throw ThicknessUndecided("piece floor failed: " + p.str());
        if (first || f.floor < out.tau_floor) out.tau_floor = f.floor;
        first = false;
    }
    // ... combined with exact bridge/gap ratios at the internal gaps; a
    // bridge that exhausts a piece continues across smaller internal gaps
    for (std::size_t i = 0; i < internal.size(); ++i) {
        auto walk = [&](bool from_left) {
            QuadIrr acc(0);
            long pi = from_left ? static_cast<long>(i) + 1 : static_cast<long>(i);
            long step = from_left ? 1 : -1;
            while (pi >= 0 && pi < static_cast<long>(u.pieces.size())) {
                detail::BridgePart part = detail::bridge_into(
                    root_interval(u.pieces[static_cast<std::size_t>(pi)]), from_left, internal[i],
                    bridge_depth);
                acc = acc + part.length;
                if (!part.exhausted) break;
                long gi = from_left ? pi : pi - 1;
                if (gi < 0 || gi >= static_cast<long>(internal.size())) break;
                if (!(internal[static_cast<std::size_t>(gi)] < internal[i])) break;
                acc = acc + internal[static_cast<std::size_t>(gi)];
                pi += step;
            }
            return acc;
        };
        QuadIrr left = walk(false), right = walk(true);
        const QuadIrr& bridge = left < right ? left : right;
        if (bridge.sign() <= 0) throw ThicknessUndecided("internal bridge vanished in " + u.str());
        Rat ratio = enclose(bridge / internal[i], 96).lo;
        if (ratio < out.tau_floor) out.tau_floor = ratio;
    }
    out.certified = true;
    std::lock_guard<std::mutex> lock(mu);
    cache[u.pieces] = out;
    return out;
}

/// Split the union at its largest bounded gap; when that gap lies inside a
/// piece, the piece is replaced by its subdivision children grouped to the
/// left and right of its O^1 gap (the paper-style decomposition step).
inline std::pair<UnionSet, UnionSet> split_at_largest_gap(const UnionSet& u) {
    std::vector<Extremes> ext;
    for (const auto& p : u.pieces) ext.push_back(hull_and_extremes(p));
    // candidates: internal gaps and piece-internal O^1 gaps
    QuadIrr best(0);
    bool internal_best = false;
    std::size_t best_idx = 0;
    for (std::size_t i = 0; i + 1 < ext.size(); ++i) {
        QuadIrr g = ext[i + 1].min - ext[i].max;
        if (best < g) {
            best = g;
            internal_best = true;
            best_idx = i;
        }
    }
    for (std::size_t i = 0; i < ext.size(); ++i) {
        QuadIrr g = ext[i].largest_gap.length();
        if (best < g) {
            best = g;
            internal_best = false;
            best_idx = i;
        }
    }
    if (internal_best) {
        UnionSet a, b;
        a.pieces.assign(u.pieces.begin(), u.pieces.begin() + static_cast<long>(best_idx) + 1);
        b.pieces.assign(u.pieces.begin() + static_cast<long>(best_idx) + 1, u.pieces.end());
        return {a, b};
    }
    // split piece best_idx at its O^1
    const CantorSpec& spec = u.pieces[best_idx];
    Subdivision s = subdivide(root_interval(spec));
    std::size_t o1 = 0;
    for (std::size_t i = 0; i < s.gaps.size(); ++i)
        if (s.gaps[i].label == 1) o1 = i;
    UnionSet a, b;
    a.pieces.assign(u.pieces.begin(), u.pieces.begin() + static_cast<long>(best_idx));
    b.pieces.assign(u.pieces.begin() + static_cast<long>(best_idx) + 1, u.pieces.end());
    std::vector<CantorSpec> left_children, right_children;
    for (std::size_t i = 0; i < s.children.size(); ++i) {
        CantorSpec child{spec.variant, s.children[i].word, spec.k};
        if (i <= o1)
            left_children.push_back(std::move(child));
        else
            right_children.push_back(std::move(child));
    }
    a.pieces.insert(a.pieces.end(), left_children.begin(), left_children.end());
    b.pieces.insert(b.pieces.begin(), right_children.begin(), right_children.end());
    return {a, b};
}

}  // namespace cfspec
