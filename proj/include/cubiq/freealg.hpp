/**
 * @file freealg.hpp
 * @brief Formal R-linear combinations of signed braid words: the free algebra
 *        in which all relations and rewriting take place.
 *
 * An AlgElem is a finite map from freely reduced signed words to nonzero
 * Laurent coefficients.  Words are kept freely reduced but NOT braid-reduced;
 * braid-level identification happens downstream (rewriting systems or the
 * matrix-model embeddings).  This module also houses the two defining
 * relations r1 and r2 of the maximal cubic quotient and the symmetries
 * phi (mirror automorphism), psi (inverse anti-automorphism) and their
 * composite phi*psi (word reversal, an R-algebra anti-automorphism).
 */
#pragma once

#include <map>
#include <stdexcept>
#include <utility>

#include "ring.hpp"
#include "words.hpp"

namespace cubiq {

/// Finite R-linear combination of signed words on a fixed strand count.
class AlgElem {
public:
    std::map<SignedWord, LaurentPoly> terms;
    int strands = 3;

    AlgElem() = default;
    explicit AlgElem(int n) : strands(n) {}

    static AlgElem zero(int n = 3) { return AlgElem(n); }
    static AlgElem from_word(const SignedWord& w, LaurentPoly coeff = LP_one()) {
        AlgElem x(w.strands);
        x.add(free_reduce(w), std::move(coeff));
        return x;
    }
    /// Convenience: word from letters on n strands, unit coefficient.
    static AlgElem word(std::vector<int> letters, int n = 3, LaurentPoly coeff = LP_one()) {
        return from_word(SignedWord(std::move(letters), n), std::move(coeff));
    }
    static AlgElem one(int n = 3) { return word({}, n); }

    bool is_zero() const { return terms.empty(); }
    std::size_t size() const { return terms.size(); }

    void add(const SignedWord& w, const LaurentPoly& c) {
        if (c.is_zero()) return;
        SignedWord r = free_reduce(w);
        auto it = terms.find(r);
        if (it == terms.end()) {
            terms.emplace(r, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms.erase(it);
        }
    }

    LaurentPoly coeff(const SignedWord& w) const {
        auto it = terms.find(w);
        return it == terms.end() ? LP_zero() : it->second;
    }

    bool operator==(const AlgElem& o) const { return strands == o.strands && terms == o.terms; }
    bool operator!=(const AlgElem& o) const { return !(*this == o); }

    AlgElem operator+(const AlgElem& o) const {
        check(o);
        AlgElem r(*this);
        for (const auto& [w, c] : o.terms) r.add(w, c);
        return r;
    }
    AlgElem operator-() const {
        AlgElem r(strands);
        for (const auto& [w, c] : terms) r.terms.emplace(w, -c);
        return r;
    }
    AlgElem operator-(const AlgElem& o) const { return *this + (-o); }
    AlgElem operator*(const AlgElem& o) const {
        check(o);
        AlgElem r(strands);
        for (const auto& [w1, c1] : terms)
            for (const auto& [w2, c2] : o.terms) r.add(word_concat(w1, w2), c1 * c2);
        return r;
    }
    AlgElem scaled(const LaurentPoly& k) const {
        AlgElem r(strands);
        for (const auto& [w, c] : terms) {
            LaurentPoly p = c * k;
            if (!p.is_zero()) r.terms.emplace(w, p);
        }
        return r;
    }
    AlgElem& operator+=(const AlgElem& o) { return *this = *this + o; }
    AlgElem& operator-=(const AlgElem& o) { return *this = *this - o; }
    AlgElem& operator*=(const AlgElem& o) { return *this = *this * o; }

private:
    void check(const AlgElem& o) const {
        if (strands != o.strands) throw std::invalid_argument("AlgElem: strand mismatch");
    }
};

inline AlgElem operator*(const LaurentPoly& k, const AlgElem& x) { return x.scaled(k); }

enum class AlgSymmetry { phi, psi, phipsi };

/**
 * @brief The algebra symmetries.
 *
 * phi    : mirror each word and invert a, b, c  (Z-algebra automorphism)
 * psi    : reverse-and-negate each word, invert a, b, c (Z-algebra anti-automorphism)
 * phipsi : reverse each word, coefficients unchanged (R-algebra anti-automorphism)
 */
inline AlgElem apply_symmetry(const AlgElem& x, AlgSymmetry kind) {
    AlgElem r(x.strands);
    for (const auto& [w, c] : x.terms) {
        switch (kind) {
            case AlgSymmetry::phi:
                r.add(apply_word_symmetry(w, WordSymmetry::mirror), c.invert_vars());
                break;
            case AlgSymmetry::psi:
                r.add(apply_word_symmetry(w, WordSymmetry::inverse_rev), c.invert_vars());
                break;
            case AlgSymmetry::phipsi: {
                std::vector<int> rev(w.letters.rbegin(), w.letters.rend());
                r.add(SignedWord(std::move(rev), w.strands), c);
                break;
            }
        }
    }
    return r;
}

/**
 * @brief The two defining relations of the maximal cubic quotient on 3
 *        strands, each as LHS - RHS (12 words each).
 *
 * r1:  s1^-1 s2 s1 = s1 s2 s1^-1 - a^-1 s1 s2 + a s1 s2^-1 + a s1^-1 s2
 *        - a^3 s1^-1 s2^-1 + a^-1 s2 s1 - a s2 s1^-1 - a s2^-1 s1
 *        + a^3 s2^-1 s1^-1 + a^2 s1^-1 s2^-1 s1 - a^2 s1 s2^-1 s1^-1
 * r2:  s1 s2 s1^2 s2 = s1^2 s2 s1^2 + a s2 s1^2 s2 - a s1 s2^2 s1
 *        + a^2 s2^2 s1 - a^2 s2 s1^2 + a^2 s1 s2^2 - a^2 s1^2 s2
 *        - a^3 s2^2 + a^3 s1^2 + a^4 s2 - a^4 s1
 */
inline std::pair<AlgElem, AlgElem> defining_relations() {
    auto W = [](std::vector<int> ls, LaurentPoly c) {
        return AlgElem::word(std::move(ls), 3, std::move(c));
    };
    auto am = [](int k) { return LP_mono(k, 0, 0); };  // a^k

    AlgElem r1 = W({-1, 2, 1}, LP_one())
               - W({1, 2, -1}, LP_one())
               + W({1, 2}, am(-1))
               - W({1, -2}, am(1))
               - W({-1, 2}, am(1))
               + W({-1, -2}, am(3))
               - W({2, 1}, am(-1))
               + W({2, -1}, am(1))
               + W({-2, 1}, am(1))
               - W({-2, -1}, am(3))
               - W({-1, -2, 1}, am(2))
               + W({1, -2, -1}, am(2));

    AlgElem r2 = W({1, 2, 1, 1, 2}, LP_one())
               - W({1, 1, 2, 1, 1}, LP_one())
               - W({2, 1, 1, 2}, am(1))
               + W({1, 2, 2, 1}, am(1))
               - W({2, 2, 1}, am(2))
               + W({2, 1, 1}, am(2))
               - W({1, 2, 2}, am(2))
               + W({1, 1, 2}, am(2))
               + W({2, 2}, am(3))
               - W({1, 1}, am(3))
               - W({2}, am(4))
               + W({1}, am(4));

    return {r1, r2};
}

/// (g - a)(g - b)(g - c) expanded on a single generator word g = s_i.
inline AlgElem cubic_relation(int gen, int strands = 3) {
    AlgElem g = AlgElem::word({gen}, strands);
    AlgElem g2 = g * g, g3 = g2 * g;
    return g3 - LP_u() * g2 + LP_v() * g - LP_w() * AlgElem::one(strands);
}

}  // namespace cubiq
