#pragma once

// Arithmetic expression trees over exact quadratic-irrational leaves, with
// an adaptive certified sign decision, plus interval branch-and-bound for
// inequalities quantified over boxes (the "for all beta in a range" checks).
//
// Exact single-field folding is attempted first; ZERO is only ever reported
// from that exact path.  Otherwise the enclosure precision doubles up to a
// cap (default 4096 bits) and an undecidable candidate zero is surfaced as
// an error, never rounded away.

#include "interval.hpp"
#include "quadirr.hpp"

#include <memory>
#include <vector>

namespace cfspec {

enum class Sign { NEG = -1, ZERO = 0, POS = 1 };

class Expr {
    struct Node {
        std::optional<QuadIrr> leaf;
        std::optional<unsigned> var;
        ArithOp op = ArithOp::Add;
        std::shared_ptr<const Node> lhs, rhs;
    };

  public:
    static Expr constant(QuadIrr v) {
        Node n;
        n.leaf = std::move(v);
        return Expr(std::make_shared<Node>(std::move(n)));
    }
    static Expr var(unsigned index) {
        Node n;
        n.var = index;
        return Expr(std::make_shared<Node>(std::move(n)));
    }

    friend Expr operator+(const Expr& a, const Expr& b) { return make(ArithOp::Add, a, b); }
    friend Expr operator-(const Expr& a, const Expr& b) { return make(ArithOp::Sub, a, b); }
    friend Expr operator*(const Expr& a, const Expr& b) { return make(ArithOp::Mul, a, b); }
    friend Expr operator/(const Expr& a, const Expr& b) { return make(ArithOp::Div, a, b); }

    /// Exact fold; nullopt when a genuine cross-field operation blocks it
    /// (the caller then falls back to intervals).
    std::optional<QuadIrr> eval_exact(const std::vector<QuadIrr>* vars = nullptr) const {
        return eval_exact_node(node_.get(), vars);
    }

    /// Interval evaluation; nullopt when a divisor interval straddles zero
    /// at this precision (refine and retry).  Exact zero divisors throw.
    std::optional<CertInterval> eval_interval(unsigned bits,
                                              const std::vector<CertInterval>* vars = nullptr) const {
        return eval_interval_node(node_.get(), bits, vars);
    }

  private:
    explicit Expr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

    static Expr make(ArithOp op, const Expr& a, const Expr& b) {
        Node n;
        n.op = op;
        n.lhs = a.node_;
        n.rhs = b.node_;
        return Expr(std::make_shared<Node>(std::move(n)));
    }

    static std::optional<QuadIrr> eval_exact_node(const Node* n, const std::vector<QuadIrr>* vars) {
        if (n->leaf) return n->leaf;
        if (n->var) {
            if (vars && *n->var < vars->size()) return (*vars)[*n->var];
            return std::nullopt;
        }
        auto l = eval_exact_node(n->lhs.get(), vars);
        auto r = eval_exact_node(n->rhs.get(), vars);
        if (!l || !r) return std::nullopt;
        try {
            return quad_arith(*l, *r, n->op);
        } catch (const FieldMismatch&) {
            return std::nullopt;
        }
    }

    static std::optional<CertInterval> eval_interval_node(const Node* n, unsigned bits,
                                                          const std::vector<CertInterval>* vars) {
        if (n->leaf) return enclose(*n->leaf, bits);
        if (n->var) {
            if (!vars || *n->var >= vars->size())
                throw std::invalid_argument("expression variable without binding");
            return (*vars)[*n->var];
        }
        auto l = eval_interval_node(n->lhs.get(), bits, vars);
        auto r = eval_interval_node(n->rhs.get(), bits, vars);
        if (!l || !r) return std::nullopt;
        switch (n->op) {
            case ArithOp::Add: return *l + *r;
            case ArithOp::Sub: return *l - *r;
            case ArithOp::Mul: return *l * *r;
            case ArithOp::Div:
                if (r->lo == 0 && r->hi == 0) throw DivisionByZero("division by exact zero interval");
                if (r->contains_zero()) return std::nullopt;
                return *l / *r;
        }
        throw std::logic_error("unreachable");
    }

    std::shared_ptr<const Node> node_;
};

inline Expr operator-(const Expr& a) { return Expr::constant(QuadIrr(0)) - a; }

constexpr unsigned kDefaultSignCapBits = 4096;

/// Exact sign of a constant expression.  Exact fold first; otherwise
/// adaptive refinement doubling the precision.  Throws Undecided when a
/// candidate zero cannot be confirmed within the cap.
inline Sign certified_sign(const Expr& e, unsigned cap_bits = kDefaultSignCapBits) {
    if (auto exact = e.eval_exact()) {
        int s = exact->sign();
        return s < 0 ? Sign::NEG : (s > 0 ? Sign::POS : Sign::ZERO);
    }
    for (unsigned bits = 64; bits <= cap_bits; bits *= 2) {
        auto iv = e.eval_interval(bits);
        if (!iv) continue;  // divisor undecided at this precision
        auto s = iv->sign();
        if (s) return *s < 0 ? Sign::NEG : (*s > 0 ? Sign::POS : Sign::ZERO);
    }
    throw Undecided("certified_sign: candidate zero not confirmed within " +
                    std::to_string(cap_bits) + " bits");
}

// ---------------------------------------------------------------------------
// Quantified inequalities over boxes (branch and bound)

struct BoxCheck {
    bool holds = false;
    // Certified bound over the whole box: inf-side lower bound for "greater
    // than" checks, sup-side upper bound for "less than" checks.
    Rat bound;
    unsigned pieces_checked = 0;
};

namespace detail {

inline bool bnb(const Expr& e, std::vector<CertInterval>& box, const Rat& threshold, bool lower_side,
                unsigned bits, unsigned depth, BoxCheck& out) {
    auto iv = e.eval_interval(bits, &box);
    if (iv) {
        ++out.pieces_checked;
        if (lower_side && iv->lo > threshold) {
            out.bound = (out.bound == threshold) ? iv->lo : std::min(out.bound, iv->lo);
            return true;
        }
        if (!lower_side && iv->hi < threshold) {
            out.bound = (out.bound == threshold) ? iv->hi : std::max(out.bound, iv->hi);
            return true;
        }
        bool splittable = false;
        for (const auto& dim : box)
            if (dim.width() > 0) splittable = true;
        if (!splittable || depth == 0) return false;
    } else if (depth == 0) {
        return false;
    }
    // split the widest dimension
    std::size_t widest = 0;
    for (std::size_t i = 1; i < box.size(); ++i)
        if (box[i].width() > box[widest].width()) widest = i;
    CertInterval dim = box[widest];
    Rat mid = dim.mid();
    box[widest] = CertInterval(dim.lo, mid);
    bool left = bnb(e, box, threshold, lower_side, bits, depth - 1, out);
    bool right = left && [&] {
        box[widest] = CertInterval(mid, dim.hi);
        return bnb(e, box, threshold, lower_side, bits, depth - 1, out);
    }();
    box[widest] = dim;
    return left && right;
}

}  // namespace detail

/// Certify expr(x) > threshold for every x in the box.
inline BoxCheck certified_gt_on_box(const Expr& e, std::vector<CertInterval> box, const Rat& threshold,
                                    unsigned bits = 192, unsigned max_depth = 40) {
    BoxCheck out;
    out.bound = threshold;
    out.holds = detail::bnb(e, box, threshold, /*lower_side=*/true, bits, max_depth, out);
    return out;
}

/// Certify expr(x) < threshold for every x in the box.
inline BoxCheck certified_lt_on_box(const Expr& e, std::vector<CertInterval> box, const Rat& threshold,
                                    unsigned bits = 192, unsigned max_depth = 40) {
    BoxCheck out;
    out.bound = threshold;
    out.holds = detail::bnb(e, box, threshold, /*lower_side=*/false, bits, max_depth, out);
    return out;
}

}  // namespace cfspec
