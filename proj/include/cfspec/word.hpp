#pragma once

// Finite continued-fraction words and their convergent tables.
//
// A word (a_1, ..., a_n) stands for [0; a_1, ..., a_n].  Convergents use the
// seed convention p_{-2} = q_{-1} = 0, p_{-1} = q_{-2} = 1 with a_0 = 0, so
// the determinant identity p_{n+1} q_n - p_n q_{n+1} = (-1)^n holds at every
// index and beta_n = q_{n-1}/q_n = [0; a_n, ..., a_1].

#include "numeric.hpp"

#include <algorithm>
#include <vector>

namespace cfspec {

struct Word {
    std::vector<int> letters;

    Word() = default;
    Word(std::initializer_list<int> ls) : letters(ls) { validate(); }
    explicit Word(std::vector<int> ls) : letters(std::move(ls)) { validate(); }

    void validate() const {
        for (int a : letters)
            if (a < 1) throw ConstraintViolation("word letter < 1");
    }

    std::size_t size() const { return letters.size(); }
    bool empty() const { return letters.empty(); }
    int back() const { return letters.back(); }
    int operator[](std::size_t i) const { return letters[i]; }

    Word reversed() const {
        Word w = *this;
        std::reverse(w.letters.begin(), w.letters.end());
        return w;
    }

    /// a* = (a_1, ..., a_{n-1})
    Word truncated() const {
        Word w = *this;
        if (w.letters.empty()) throw std::out_of_range("truncating empty word");
        w.letters.pop_back();
        return w;
    }

    Word appended(int a) const {
        Word w = *this;
        w.letters.push_back(a);
        if (a < 1) throw ConstraintViolation("word letter < 1");
        return w;
    }

    friend Word operator+(const Word& a, const Word& b) {
        Word w = a;
        w.letters.insert(w.letters.end(), b.letters.begin(), b.letters.end());
        return w;
    }

    friend bool operator==(const Word& a, const Word& b) { return a.letters == b.letters; }
    friend bool operator<(const Word& a, const Word& b) { return a.letters < b.letters; }

    std::string str() const {
        std::string s;
        for (std::size_t i = 0; i < letters.size(); ++i) {
            if (i) s += ' ';
            s += std::to_string(letters[i]);
        }
        return s;
    }
};

struct Convergents {
    // pairs[i] = (p_i, q_i) for i = -2..n stored with offset 2
    std::vector<std::pair<Int, Int>> table;
    Rat beta;   // q_{n-1}/q_n, 0 for the empty word
    Rat value;  // p_n/q_n

    const std::pair<Int, Int>& at(long i) const { return table[static_cast<std::size_t>(i + 2)]; }
    long top_index() const { return static_cast<long>(table.size()) - 3; }

    const Int& p() const { return table.back().first; }
    const Int& q() const { return table.back().second; }
    const Int& p_prev() const { return table[table.size() - 2].first; }
    const Int& q_prev() const { return table[table.size() - 2].second; }
};

/// Full convergent table of [0; a_1, ..., a_n].
inline Convergents convergents(const Word& w) {
    Convergents c;
    c.table.reserve(w.size() + 3);
    c.table.emplace_back(Int(0), Int(1));  // (p_{-2}, q_{-2})
    c.table.emplace_back(Int(1), Int(0));  // (p_{-1}, q_{-1})
    c.table.emplace_back(Int(0), Int(1));  // a_0 = 0: (p_0, q_0)
    for (int a : w.letters) {
        const auto& [p1, q1] = c.table[c.table.size() - 1];
        const auto& [p2, q2] = c.table[c.table.size() - 2];
        c.table.emplace_back(a * p1 + p2, a * q1 + q2);
    }
    c.beta = Rat(c.q_prev(), c.q());
    c.value = Rat(c.p(), c.q());
    return c;
}

/// Continuant q(a_1 ... a_n); q of the empty word is 1.
inline Int continuant(const Word& w) { return convergents(w).q(); }

/// beta_w = q_{n-1}/q_n = [0; a_n, ..., a_1]; beta of the empty word is 0.
inline Rat beta_of(const Word& w) { return convergents(w).beta; }

/// Euler's rule self-check:
///   q(a_1..a_l) = q(a_1..a_m) q(a_{m+1}..a_l) + q(a_1..a_{m-1}) q(a_{m+2}..a_l)
inline bool euler_split_check(const Word& w, std::size_t m) {
    if (m < 1 || m >= w.size()) throw std::out_of_range("euler split index");
    auto slice = [&w](std::size_t from, std::size_t to) {  // [from, to), 0-based
        Word s;
        s.letters.assign(w.letters.begin() + from, w.letters.begin() + to);
        return s;
    };
    Int lhs = continuant(w);
    Int rhs = continuant(slice(0, m)) * continuant(slice(m, w.size())) +
              continuant(slice(0, m - 1)) * continuant(slice(m + 1, w.size()));
    return lhs == rhs;
}

/// Determinant identity p_{i+1} q_i - p_i q_{i+1} = (-1)^i over the table.
inline bool determinant_check(const Word& w) {
    Convergents c = convergents(w);
    for (long i = -2; i < c.top_index(); ++i) {
        const auto& [pi, qi] = c.at(i);
        const auto& [pj, qj] = c.at(i + 1);
        Int det = pj * qi - pi * qj;
        if (det != ((i % 2 == 0) ? 1 : -1)) return false;
    }
    return true;
}

}  // namespace cfspec
