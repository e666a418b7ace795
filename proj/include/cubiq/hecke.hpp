/**
 * @file hecke.hpp
 * @brief Quadratic Iwahori-Hecke algebras H_n(x,y) in the T_w basis, the
 *        triple embedding into H_n(a,b) + H_n(a,c) + H_n(b,c), and the
 *        recursive basis of the tripled quadratic algebra K_n of dimension
 *        3(n!-1).
 */
#pragma once

#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

#include "freealg.hpp"
#include "ring.hpp"
#include "words.hpp"

namespace cubiq {

/// Permutation in one-line notation on n points (values 0..n-1).
struct Perm {
    std::vector<int> p;

    static Perm identity(int n) {
        Perm q;
        q.p.resize(n);
        std::iota(q.p.begin(), q.p.end(), 0);
        return q;
    }
    int n() const { return (int)p.size(); }
    /// Coxeter length = inversion count.
    int length() const {
        int inv = 0;
        for (std::size_t i = 0; i < p.size(); ++i)
            for (std::size_t j = i + 1; j < p.size(); ++j)
                if (p[i] > p[j]) ++inv;
        return inv;
    }
    /// Right multiplication by the adjacent transposition s_i (1-based).
    Perm right_s(int i) const {
        Perm q(*this);
        std::swap(q.p[i - 1], q.p[i]);
        return q;
    }
    /// True iff l(w s_i) > l(w).
    bool ascends(int i) const { return p[i - 1] < p[i]; }

    bool operator<(const Perm& o) const { return p < o.p; }
    bool operator==(const Perm& o) const { return p == o.p; }
};

/// Inverse of a +-monomial (the only units of R).
inline LaurentPoly mono_inverse(const LaurentPoly& m) {
    if (!m.is_unit_monomial()) throw std::invalid_argument("mono_inverse: not a unit monomial");
    const auto& [k, c] = *m.terms.begin();
    Expo inv = LaurentPoly::decode(k);
    for (auto& x : inv) x = -x;
    return LaurentPoly::monomial(c, inv);
}

/// Element of H_n(x,y) in the T_w basis.
struct HeckeElem {
    int n = 2;
    LaurentPoly x, y;
    std::map<Perm, LaurentPoly> terms;

    static HeckeElem unit(int n, LaurentPoly x, LaurentPoly y) {
        HeckeElem h;
        h.n = n;
        h.x = std::move(x);
        h.y = std::move(y);
        h.terms[Perm::identity(n)] = LP_one();
        return h;
    }
    static HeckeElem zero(int n, LaurentPoly x, LaurentPoly y) {
        HeckeElem h;
        h.n = n;
        h.x = std::move(x);
        h.y = std::move(y);
        return h;
    }

    void add(const Perm& w, const LaurentPoly& c) {
        if (c.is_zero()) return;
        auto it = terms.find(w);
        if (it == terms.end())
            terms.emplace(w, c);
        else {
            it->second = it->second + c;
            if (it->second.is_zero()) terms.erase(it);
        }
    }

    bool same_params(const HeckeElem& o) const { return n == o.n && x == o.x && y == o.y; }

    HeckeElem operator+(const HeckeElem& o) const {
        if (!same_params(o)) throw std::invalid_argument("HeckeElem: parameter mismatch");
        HeckeElem r(*this);
        for (const auto& [w, c] : o.terms) r.add(w, c);
        return r;
    }
    HeckeElem operator-() const {
        HeckeElem r(*this);
        for (auto& [w, c] : r.terms) c = -c;
        return r;
    }
    HeckeElem operator-(const HeckeElem& o) const { return *this + (-o); }
    HeckeElem scaled(const LaurentPoly& k) const {
        HeckeElem r = zero(n, x, y);
        for (const auto& [w, c] : terms) r.add(w, c * k);
        return r;
    }
    bool operator==(const HeckeElem& o) const { return same_params(o) && terms == o.terms; }
    bool operator!=(const HeckeElem& o) const { return !(*this == o); }
    bool is_zero() const { return terms.empty(); }

    /// Right multiplication by T_{s_i} (sign=+1) or T_{s_i}^{-1} (sign=-1).
    HeckeElem right_gen(int i, int sign) const {
        HeckeElem r = zero(n, x, y);
        const LaurentPoly xy = x * y, xpy = x + y;
        const LaurentPoly xy_inv = sign < 0 ? mono_inverse(xy) : LP_one();
        for (const auto& [w, c] : terms) {
            if (sign > 0) {
                if (w.ascends(i)) {
                    r.add(w.right_s(i), c);
                } else {
                    // T_w T_s = (x+y) T_w - xy T_{ws}
                    r.add(w, c * xpy);
                    r.add(w.right_s(i), -(c * xy));
                }
            } else {
                // T_s^{-1} = (xy)^{-1} ((x+y) - T_s)
                HeckeElem tw = zero(n, x, y);
                tw.add(w, c);
                HeckeElem tws = tw.right_gen(i, +1);
                r.add(w, c * xpy * xy_inv);
                for (const auto& [u, d] : tws.terms) r.add(u, -(d * xy_inv));
            }
        }
        return r;
    }

    HeckeElem operator*(const HeckeElem& o) const {
        if (!same_params(o)) throw std::invalid_argument("HeckeElem: parameter mismatch");
        HeckeElem r = zero(n, x, y);
        for (const auto& [w, c] : o.terms) {
            // Lift w to a reduced word by bubble-sort descents, then apply.
            HeckeElem part = scaled(c);
            std::vector<int> rword;
            Perm v = w;
            // Peel generators from the left of w: find descents of v^{-1}... simpler:
            // build reduced word of w by repeatedly finding i with v[i-1] > v[i]
            // and recording right factors; then reverse.
            while (v.length() > 0) {
                for (int i = 1; i < n; ++i) {
                    if (v.p[i - 1] > v.p[i]) {
                        rword.push_back(i);
                        v = v.right_s(i);
                        break;
                    }
                }
            }
            // w = s_{rword[k-1]} ... s_{rword[0]}  (since we stripped from the right)
            for (auto it = rword.rbegin(); it != rword.rend(); ++it) part = part.right_gen(*it, +1);
            r = r + part;
        }
        return r;
    }
};

/// Evaluate a signed braid word in H_n(x,y).
inline HeckeElem hecke_eval_word(const SignedWord& w, const LaurentPoly& x, const LaurentPoly& y) {
    HeckeElem h = HeckeElem::unit(w.strands, x, y);
    for (int g : w.letters) h = h.right_gen(std::abs(g), g > 0 ? +1 : -1);
    return h;
}

/// Evaluate an algebra element (R-linear combination of words) in H_n(x,y).
inline HeckeElem hecke_eval(const AlgElem& el, const LaurentPoly& x, const LaurentPoly& y) {
    HeckeElem h = HeckeElem::zero(el.strands, x, y);
    for (const auto& [w, c] : el.terms) {
        HeckeElem t = hecke_eval_word(w, x, y).scaled(c);
        h = h + t;
    }
    return h;
}

/// The character q_xi : H_n(x,y) -> R, T_{s_i} |-> xi (xi in {x, y}).
inline LaurentPoly q_char(const HeckeElem& h, const LaurentPoly& xi) {
    if (xi != h.x && xi != h.y) throw std::invalid_argument("q_char: xi must be a parameter");
    LaurentPoly out = LP_zero();
    for (const auto& [w, c] : h.terms) {
        LaurentPoly pw = LP_one();
        for (int i = 0; i < w.length(); ++i) pw = pw * xi;
        out = out + c * pw;
    }
    return out;
}

/// Triple of quadratic-Hecke images (z_c, z_b, z_a) in
/// H_n(a,b) + H_n(a,c) + H_n(b,c).
struct TripleElem {
    HeckeElem zc, zb, za;  // components in H(a,b), H(a,c), H(b,c)

    bool is_zero() const { return zc.is_zero() && zb.is_zero() && za.is_zero(); }
    bool operator==(const TripleElem& o) const {
        return zc == o.zc && zb == o.zb && za == o.za;
    }
    TripleElem operator-(const TripleElem& o) const {
        return TripleElem{zc - o.zc, zb - o.zb, za - o.za};
    }
};

inline TripleElem triple_embed(const AlgElem& el) {
    return TripleElem{hecke_eval(el, LP_a(), LP_b()), hecke_eval(el, LP_a(), LP_c()),
                      hecke_eval(el, LP_b(), LP_c())};
}

/// Fiber condition: q_alpha agrees on the two components not carrying alpha.
inline bool fiber_check(const TripleElem& t) {
    return q_char(t.zc, LP_a()) == q_char(t.zb, LP_a()) &&
           q_char(t.zc, LP_b()) == q_char(t.za, LP_b()) &&
           q_char(t.zb, LP_c()) == q_char(t.za, LP_c());
}

/**
 * @brief Recursive word basis of K_n: B_2 = {e, s_1, s_1^{-1}},
 *        B_{n+1} = (U_k B_n s_{n,k}) u (U_k B_2 x'_{n,k}) with
 *        s_{n,k} = s_n s_{n-1} ... s_{n-k+1} and
 *        x'_{n,k} = s_n ... s_{n-k+2} s_{n-k+1}^{-1}.
 *        Words are on n strands; |B_n| = 3(n!-1) for n >= 2.
 */
inline std::vector<SignedWord> k_basis(int n) {
    if (n < 1 || n > 6) throw std::out_of_range("k_basis: n out of range [1,6]");
    if (n == 1) return {SignedWord({}, 1)};
    // Build iteratively on the target strand count.
    auto lift = [&](const std::vector<SignedWord>& ws) {
        std::vector<SignedWord> out;
        for (const auto& w : ws) out.emplace_back(w.letters, n);
        return out;
    };
    std::vector<SignedWord> basis{SignedWord({}, n), SignedWord({1}, n), SignedWord({-1}, n)};
    const std::vector<SignedWord> b2 = basis;
    for (int m = 2; m < n; ++m) {
        // basis currently = B_m on n strands; produce B_{m+1}.
        std::vector<SignedWord> next;
        for (int k = 0; k <= m; ++k) {
            std::vector<int> tail;  // s_{m,k}
            for (int i = 0; i < k; ++i) tail.push_back(m - i);
            for (const auto& w : basis) {
                std::vector<int> ls = w.letters;
                ls.insert(ls.end(), tail.begin(), tail.end());
                next.emplace_back(std::move(ls), n);
            }
        }
        for (int k = 1; k <= m; ++k) {
            std::vector<int> tail;  // x'_{m,k}
            for (int i = 0; i < k - 1; ++i) tail.push_back(m - i);
            tail.push_back(-(m - k + 1));
            for (const auto& w : b2) {
                std::vector<int> ls = w.letters;
                ls.insert(ls.end(), tail.begin(), tail.end());
                next.emplace_back(std::move(ls), n);
            }
        }
        basis = std::move(next);
    }
    (void)lift;
    return basis;
}

/// One ternary relation: LHS - RHS as a signed-word linear combination.
struct TernaryRelation {
    std::string label;
    int strands;
    AlgElem element;  // must vanish in each quadratic Hecke algebra
};

/// The relation lists for H_3 (3 relations) and H_4 (4 relations).
inline std::vector<TernaryRelation> ternary_relations() {
    auto W = [](std::vector<int> ls, int n) { return AlgElem::from_word(SignedWord(std::move(ls), n)); };
    std::vector<TernaryRelation> rels;
    // n = 3
    for (int i : {1, 2})
        rels.push_back({"n3.cubic.s" + std::to_string(i), 3, cubic_relation(i, 3)});
    rels.push_back({"n3.commutator", 3,
                    W({2, 2, 1}, 3) - W({1, 2, 2}, 3) - W({2, 1, 1}, 3) + W({1, 1, 2}, 3)});
    rels.push_back({"n3.s2s11s2", 3,
                    W({2, 1, 1, 2}, 3) + LP_w() * W({1}, 3) - LP_v() * W({1, 2}, 3) -
                        W({1, 2, 1, 1}, 3) + LP_u() * W({1, 2, 2}, 3) - W({1, 1, 2, 2}, 3)});
    // n = 4
    rels.push_back({"n4.rel1", 4,
                    W({2, 3, 3}, 4) + W({1, 1, 3}, 4) - W({1, 1, 2}, 4) - W({2, 2, 3}, 4) +
                        W({1, 2, 2}, 4) - W({1, 3, 3}, 4)});
    rels.push_back({"n4.rel2", 4,
                    W({2, 2, 3, 1}, 4) - W({2, 1, 1, 3}, 4) + W({1, 1, 2, 3}, 4) -
                        W({1, 2, 2, 3}, 4)});
    rels.push_back({"n4.rel3", 4,
                    W({2, 2, 3, 3}, 4) + LP_w() * W({1}, 4) - LP_v() * W({1, 3}, 4) +
                        LP_u() * W({1, 1, 3}, 4) - LP_w() * W({2}, 4) + LP_v() * W({2, 3}, 4) -
                        LP_u() * W({1, 1, 2}, 4) + W({1, 1, 2, 3}, 4) - LP_u() * W({2, 2, 3}, 4) +
                        LP_u() * W({1, 2, 2}, 4) - W({1, 2, 2, 3}, 4) - W({1, 1, 3, 3}, 4)});
    rels.push_back({"n4.rel4", 4,
                    W({2, 2, 3, 3}, 4) + LP_w() * W({1}, 4) - LP_v() * W({1, 3}, 4) +
                        LP_u() * W({1, 1, 3}, 4) - LP_w() * W({2}, 4) + LP_v() * W({2, 3}, 4) -
                        LP_u() * W({1, 1, 2}, 4) - LP_u() * W({2, 2, 3}, 4) +
                        LP_u() * W({1, 2, 2}, 4) - W({1, 1, 3, 3}, 4) - W({2, 2, 1, 3}, 4) +
                        W({2, 1, 1, 3}, 4)});
    return rels;
}

struct TernaryReport {
    struct Entry {
        std::string label;
        bool zero_ab, zero_ac, zero_bc;
        bool ok() const { return zero_ab && zero_ac && zero_bc; }
    };
    std::vector<Entry> entries;
    bool ok() const {
        for (const auto& e : entries)
            if (!e.ok()) return false;
        return true;
    }
};

/// Evaluate every ternary relation in all three quadratic Hecke algebras.
inline TernaryReport verify_ternary_relations() {
    TernaryReport rep;
    for (const auto& r : ternary_relations()) {
        TripleElem t = triple_embed(r.element);
        rep.entries.push_back({r.label, t.zc.is_zero(), t.zb.is_zero(), t.za.is_zero()});
    }
    return rep;
}

/// The defining element b = [s_2^2, s_1] - [s_2, s_1^2] of the kernel.
inline AlgElem k_defining_element() {
    auto W = [](std::vector<int> ls) { return AlgElem::from_word(SignedWord(std::move(ls), 3)); };
    return W({2, 2, 1}) - W({1, 2, 2}) - W({2, 1, 1}) + W({1, 1, 2});
}

// ---------------------------------------------------------------------------
// Rank certification at rational specializations (mod-p Gaussian elimination;
// full rank mod p certifies full rank over Q).
// ---------------------------------------------------------------------------

inline std::uint64_t mod_inv(std::uint64_t a, std::uint64_t p) {
    std::uint64_t r = 1, b = p - 2, base = a % p;
    while (b) {
        if (b & 1) r = (unsigned __int128)r * base % p;
        base = (unsigned __int128)base * base % p;
        b >>= 1;
    }
    return r;
}

inline std::uint64_t rational_mod_p(const Rational& q, std::uint64_t p) {
    Int num = boost::multiprecision::numerator(q);
    Int den = boost::multiprecision::denominator(q);
    Int pm = p;
    Int nm = num % pm;
    if (nm < 0) nm += pm;
    Int dm = den % pm;
    if (dm == 0) throw std::domain_error("rational_mod_p: denominator divisible by p");
    return (unsigned __int128)nm.convert_to<std::uint64_t>() *
           mod_inv(dm.convert_to<std::uint64_t>(), p) % p;
}

inline std::size_t rank_mod_p(std::vector<std::vector<std::uint64_t>> rows, std::uint64_t p) {
    std::size_t rank = 0;
    if (rows.empty()) return 0;
    const std::size_t cols = rows[0].size();
    for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
        std::size_t piv = rank;
        while (piv < rows.size() && rows[piv][col] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[rank], rows[piv]);
        std::uint64_t inv = mod_inv(rows[rank][col], p);
        for (std::size_t i = rank + 1; i < rows.size(); ++i) {
            if (rows[i][col] == 0) continue;
            std::uint64_t f = (unsigned __int128)rows[i][col] * inv % p;
            for (std::size_t j = col; j < cols; ++j) {
                std::uint64_t t = (unsigned __int128)f * rows[rank][j] % p;
                rows[i][j] = (rows[i][j] + p - t) % p;
            }
        }
        ++rank;
    }
    return rank;
}

/// Coordinate vector of a triple at a rational point, mod p: concatenated
/// T_w coefficients of the three components over all n! permutations.
inline std::vector<std::uint64_t> triple_coords_mod_p(const TripleElem& t,
                                                      const std::vector<Rational>& point,
                                                      std::uint64_t p) {
    std::vector<std::uint64_t> out;
    for (const HeckeElem* h : {&t.zc, &t.zb, &t.za}) {
        // enumerate all permutations of n in sorted order
        Perm w = Perm::identity(h->n);
        std::vector<int> idx = w.p;
        do {
            Perm q;
            q.p = idx;
            auto it = h->terms.find(q);
            if (it == h->terms.end())
                out.push_back(0);
            else
                out.push_back(rational_mod_p(it->second.specialize(point), p));
        } while (std::next_permutation(idx.begin(), idx.end()));
    }
    return out;
}

/// Certify that the k_basis(n) images are independent at a rational point:
/// returns the rank of the coordinate matrix mod p.
inline std::size_t k_basis_rank_at(int n, const std::vector<Rational>& point,
                                   std::uint64_t p = 2147483647ULL) {
    std::vector<std::vector<std::uint64_t>> rows;
    for (const auto& w : k_basis(n))
        rows.push_back(triple_coords_mod_p(triple_embed(AlgElem::from_word(w)), point, p));
    return rank_mod_p(std::move(rows), p);
}

}  // namespace cubiq
