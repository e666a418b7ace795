/**
 * @file a4tilde.hpp
 * @brief The 25-dimensional bimodule A~4 = Q_4 / Q_3 u_3 Q_3: distinguished
 *        basis, the reversal involution f, exact 25x25 action tables for
 *        left/right multiplication by the generators, consistency checks,
 *        and the spanning-set cardinality ledger for Q_4.
 *
 * Writing x = s_3 s_2^{-1} s_3 and y = s_1 s_2^{-1} s_1, the module is
 * spanned over R by 25 words in x, s_1^{+-1}, s_2^{+-1} plus the two special
 * elements w+ = 3 2 1' 2 3 and w- = 3' 2' 1 2' 3'.  The action of the
 * generators on this basis is recorded as a cascade of named auxiliary
 * expressions (each a vector in R^25); the cascade is resolved by memoized
 * recursion in topological order, and the build aborts if a reference is
 * unknown or cyclic.  All coefficients lie in R because w = abc and bc are
 * unit monomials.
 */
#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "ring.hpp"
#include "rewrite.hpp"
#include "rewrite_data.hpp"
#include "words.hpp"

namespace cubiq {

inline constexpr std::size_t kA4Dim = 25;

/// Word definitions of the basis e_1 .. e_25 (letters +-1..+-3, 4 strands).
inline const std::vector<SignedWord>& a4_basis_words() {
    static const std::vector<SignedWord> words = [] {
        auto w = [](std::vector<int> ls) { return SignedWord(std::move(ls), 4); };
        return std::vector<SignedWord>{
            w({3, -2, 3}),                  // e1  = x
            w({1, 3, -2, 3}),               // e2  = 1x
            w({-1, 3, -2, 3}),              // e3  = 1'x
            w({2, 1, 3, -2, 3}),            // e4  = 21x
            w({2, -1, 3, -2, 3}),           // e5  = 21'x
            w({-2, 1, 3, -2, 3}),           // e6  = 2'1x
            w({-2, -1, 3, -2, 3}),          // e7  = 2'1'x
            w({3, -2, 3, 1}),               // e8  = x1
            w({3, -2, 3, -1}),              // e9  = x1'
            w({3, -2, 3, 1, 2}),            // e10 = x12
            w({3, -2, 3, 1, -2}),           // e11 = x12'
            w({3, -2, 3, -1, 2}),           // e12 = x1'2
            w({3, -2, 3, -1, -2}),          // e13 = x1'2'
            w({2, 1, 3, -2, 3, 1}),         // e14 = 21x1
            w({-2, 1, 3, -2, 3, 1}),        // e15 = 2'1x1
            w({1, 3, -2, 3, 1, 2}),         // e16 = 1x12
            w({1, 3, -2, 3, 1, -2}),        // e17 = 1x12'
            w({1, 3, -2, 3, -1}),           // e18 = 1x1'
            w({1, 3, -2, 3, 1}),            // e19 = 1x1
            w({2, 1, 3, -2, 3, 1, 2}),      // e20 = 21x12
            w({2, 1, 3, -2, 3, 1, -2}),     // e21 = 21x12'
            w({3, 2, -1, 2, 3}),            // e22 = w+
            w({-3, -2, 1, -2, -3}),         // e23 = w-
            w({3, -2, 3, 1, -2, 1}),        // e24 = xy
            w({1, -2, 1, 3, -2, 3}),        // e25 = yx
        };
    }();
    return words;
}

/// Exact 25x25 action tables over R.
struct ActionTables {
    RingMatrix L1, L2;      ///< left multiplication by s_1, s_2
    RingMatrix F;           ///< the reversal involution f
    RingMatrix R1, R2;      ///< right multiplication, R_i = F L_i F
    RingMatrix L1inv, L2inv, R1inv, R2inv;  ///< via the cubic relation
};

namespace detail_a4 {

using Vec = std::vector<LaurentPoly>;

inline Vec zero_vec() { return Vec(kA4Dim, LP_zero()); }

/// Basis vector e_i (1-based index).
inline Vec basis_vec(std::size_t i) {
    Vec v = zero_vec();
    v.at(i - 1) = LP_one();
    return v;
}

inline void axpy(Vec& acc, const LaurentPoly& c, const Vec& v) {
    for (std::size_t i = 0; i < kA4Dim; ++i) acc[i] += c * v[i];
}

inline Vec mat_apply(const RingMatrix& m, const Vec& v) {
    Vec out = zero_vec();
    for (std::size_t j = 0; j < kA4Dim; ++j) {
        if (v[j].is_zero()) continue;
        for (std::size_t i = 0; i < kA4Dim; ++i) out[i] += m.at(i, j) * v[j];
    }
    return out;
}

/**
 * Memoized resolver for the named auxiliary expressions.  Each builder may
 * request other expressions by name; a cyclic or unknown reference throws.
 */
class Resolver {
public:
    using Builder = std::function<Vec(Resolver&)>;

    void define(const std::string& name, Builder b) { builders_[name] = std::move(b); }

    const Vec& get(const std::string& name) {
        auto hit = memo_.find(name);
        if (hit != memo_.end()) return hit->second;
        if (in_progress_.count(name))
            throw std::logic_error("a4tilde: cyclic reference through '" + name + "'");
        auto it = builders_.find(name);
        if (it == builders_.end())
            throw std::logic_error("a4tilde: unresolved expression '" + name + "'");
        in_progress_.insert(name);
        Vec v = it->second(*this);
        in_progress_.erase(name);
        return memo_.emplace(name, std::move(v)).first->second;
    }

private:
    std::map<std::string, Builder> builders_;
    std::map<std::string, Vec> memo_;
    std::set<std::string> in_progress_;
};

/// The involution f: reversal of words.  On the basis it acts by the
/// permutation (2,8)(3,9)(4,10)(5,12)(6,11)(7,13)(14,16)(15,17)(24,25),
/// except on e18 and e21 where exchange identities add correction terms.
inline RingMatrix build_F() {
    const LaurentPoly a = LP_a(), ia = LP_mono(-1, 0, 0);
    std::vector<std::size_t> sigma(kA4Dim + 1);
    for (std::size_t i = 1; i <= kA4Dim; ++i) sigma[i] = i;
    const std::pair<std::size_t, std::size_t> cycles[] = {
        {2, 8}, {3, 9}, {4, 10}, {5, 12}, {6, 11}, {7, 13}, {14, 16}, {15, 17}, {24, 25}};
    for (auto [i, j] : cycles) {
        sigma[i] = j;
        sigma[j] = i;
    }
    RingMatrix F(kA4Dim, kA4Dim);
    for (std::size_t i = 1; i <= kA4Dim; ++i) F.at(sigma[i] - 1, i - 1) = LP_one();
    // f(e18) = 1'x1 = e18 + a(e3 - e9) + a^{-1}(e8 - e2)
    F.at(3 - 1, 18 - 1) = a;
    F.at(9 - 1, 18 - 1) = -a;
    F.at(8 - 1, 18 - 1) = ia;
    F.at(2 - 1, 18 - 1) = -ia;
    // f(e21) = 2'1x12 = e21 + a(e15 - e17) + a^{-1}(e16 - e14)
    F.at(15 - 1, 21 - 1) = a;
    F.at(17 - 1, 21 - 1) = -a;
    F.at(16 - 1, 21 - 1) = ia;
    F.at(14 - 1, 21 - 1) = -ia;
    return F;
}

/// Register the auxiliary-expression cascade on a resolver.
inline void register_aux(Resolver& r, const RingMatrix& F) {
    const LaurentPoly a = LP_a(), b = LP_b(), c = LP_c();
    const LaurentPoly u = LP_u(), v = LP_v(), w = LP_w();
    const LaurentPoly ia = LP_mono(-1, 0, 0);   // a^{-1}
    const LaurentPoly iw = LP_mono(-1, -1, -1); // w^{-1}
    const LaurentPoly ibc = LP_mono(0, -1, -1); // (bc)^{-1}
    const LaurentPoly a2 = a * a;

    auto E = [](std::size_t i) { return basis_vec(i); };
    auto f = [&F](const Vec& x) { return mat_apply(F, x); };

    // 21x1' = a.e18 - a^{-1}.e19 + e15 + a^{-1}.e4 - a.e6
    r.define("2 1 x 1'", [=](Resolver&) {
        Vec o = zero_vec();
        axpy(o, a, E(18));
        axpy(o, -ia, E(19));
        axpy(o, LP_one(), E(15));
        axpy(o, ia, E(4));
        axpy(o, -a, E(6));
        return o;
    });
    // 1'x12 = f(21x1')
    r.define("1' x 1 2", [=](Resolver& rr) { return f(rr.get("2 1 x 1'")); });
    // 1'x1' = -((b+c)/w).e18 - (1/(wa)).e19 + (v/w).e9 + w^{-1}.e8
    //         + a^{-1}.e3 + (u/(wa)).e2 - ((a^2+v)/(wa)).e1
    r.define("1' x 1'", [=](Resolver&) {
        Vec o = zero_vec();
        axpy(o, -(b + c) * iw, E(18));
        axpy(o, -iw * ia, E(19));
        axpy(o, v * iw, E(9));
        axpy(o, iw, E(8));
        axpy(o, ia, E(3));
        axpy(o, u * iw * ia, E(2));
        axpy(o, -(a2 + v) * iw * ia, E(1));
        return o;
    });
    // 21'x1 = 21x1' - a^2.e9 + e8 + a.e5 - a^{-1}.e4
    r.define("2 1' x 1", [=](Resolver& rr) {
        Vec o = rr.get("2 1 x 1'");
        axpy(o, -a2, E(9));
        axpy(o, LP_one(), E(8));
        axpy(o, a, E(5));
        axpy(o, -ia, E(4));
        return o;
    });
    // 2'1x1' = a^{-1}.e18 + (u/(wa)).e19 + ((a-u)/w).e15 + w^{-1}.e4
    //          + (v/w).e6 - ((a^2+v)/(aw)).e2 - (1/(aw)).e14
    r.define("2' 1 x 1'", [=](Resolver&) {
        Vec o = zero_vec();
        axpy(o, ia, E(18));
        axpy(o, u * iw * ia, E(19));
        axpy(o, (a - u) * iw, E(15));
        axpy(o, iw, E(4));
        axpy(o, v * iw, E(6));
        axpy(o, -(a2 + v) * ia * iw, E(2));
        axpy(o, -ia * iw, E(14));
        return o;
    });
    // 2'1'x1 = 2'1x1' - e9 + a^{-2}.e8 + a.e7 - a^{-1}.e6
    r.define("2' 1' x 1", [=](Resolver& rr) {
        Vec o = rr.get("2' 1 x 1'");
        axpy(o, -LP_one(), E(9));
        axpy(o, ia * ia, E(8));
        axpy(o, a, E(7));
        axpy(o, -ia, E(6));
        return o;
    });
    // 1x1'2 = f(21'x1)
    r.define("1 x 1' 2", [=](Resolver& rr) { return f(rr.get("2 1' x 1")); });
    // 21x1'2 = a.f(21'x1) + f(e21) + e4 - a^2.e6 - a^{-1}.e16
    r.define("2 1 x 1' 2", [=](Resolver& rr) {
        Vec o = zero_vec();
        axpy(o, a, f(rr.get("2 1' x 1")));
        axpy(o, LP_one(), f(E(21)));
        axpy(o, LP_one(), E(4));
        axpy(o, -a2, E(6));
        axpy(o, -ia, E(16));
        return o;
    });
    // 2w+ = -a.e21 + a.e22 + e14 + a^2.1'x12 - a^3.f(e18) + a^3.e11 - a.e10
    r.define("2 w+", [=](Resolver& rr) {
        Vec o = zero_vec();
        axpy(o, -a, E(21));
        axpy(o, a, E(22));
        axpy(o, LP_one(), E(14));
        axpy(o, a2, rr.get("1' x 1 2"));
        axpy(o, -a2 * a, f(E(18)));
        axpy(o, a2 * a, E(11));
        axpy(o, -a, E(10));
        return o;
    });
    // 2'1x12 = (1 - a^{-1}.2).w+ + a^{-1}.e16 + a.21x1' - a^2.e18 + a^2.e6 - e4
    r.define("2' 1 x 1 2", [=](Resolver& rr) {
        Vec o = E(22);
        axpy(o, -ia, rr.get("2 w+"));
        axpy(o, ia, E(16));
        axpy(o, a, rr.get("2 1 x 1'"));
        axpy(o, -a2, E(18));
        axpy(o, a2, E(6));
        axpy(o, -LP_one(), E(4));
        return o;
    });
    // e' = 2'1x12' =
    //   ((a+u)/(aw)).e16 - (1/(aw)).e20 + (a(a-u)/w).21x1' + (av/w).e18
    //   - a.2'1x1' - ((a^2+v)/w).e2 + ((u-a)/w).e4 - (v/(aw)).e19
    //   + (a/w).21x1'2 + a^{-1}.e17 - (a^2/w).1x1'2 + (a^3/w + 1).e6
    //   - (u/w).2'1x12 + (v/w).e15
    r.define("2' 1 x 1 2'", [=](Resolver& rr) {
        Vec o = zero_vec();
        axpy(o, (a + u) * ia * iw, E(16));
        axpy(o, -ia * iw, E(20));
        axpy(o, a * (a - u) * iw, rr.get("2 1 x 1'"));
        axpy(o, a * v * iw, E(18));
        axpy(o, -a, rr.get("2' 1 x 1'"));
        axpy(o, -(a2 + v) * iw, E(2));
        axpy(o, (u - a) * iw, E(4));
        axpy(o, -v * ia * iw, E(19));
        axpy(o, a * iw, rr.get("2 1 x 1' 2"));
        axpy(o, ia, E(17));
        axpy(o, -a2 * iw, rr.get("1 x 1' 2"));
        axpy(o, a2 * a * iw + LP_one(), E(6));
        axpy(o, -u * iw, rr.get("2' 1 x 1 2"));
        axpy(o, v * iw, E(15));
        return o;
    });
    // 21x1'2' = a.f(2'1'x1) - a^{-1}.e17 + e' + a^{-2}.e4 - e6
    r.define("2 1 x 1' 2'", [=](Resolver& rr) {
        Vec o = zero_vec();
        axpy(o, a, f(rr.get("2' 1' x 1")));
        axpy(o, -ia, E(17));
        axpy(o, LP_one(), rr.get("2' 1 x 1 2'"));
        axpy(o, ia * ia, E(4));
        axpy(o, -LP_one(), E(6));
        return o;
    });
    // x1'21' = (v/w).e12 + (bc)^{-1}.e24 - (au/w).e11
    r.define("x 1' 2 1'", [=](Resolver&) {
        Vec o = zero_vec();
        axpy(o, v * iw, E(12));
        axpy(o, ibc, E(24));
        axpy(o, -a * u * iw, E(11));
        return o;
    });
    // 1x1'21' = a^{-1}.f(21x1') + a.x1'21' - a^{-2}.e10 - a^2.1'x1' + e18
    r.define("1 x 1' 2 1'", [=](Resolver& rr) {
        Vec o = zero_vec();
        axpy(o, ia, f(rr.get("2 1 x 1'")));
        axpy(o, a, rr.get("x 1' 2 1'"));
        axpy(o, -ia * ia, E(10));
        axpy(o, -a2, rr.get("1' x 1'"));
        axpy(o, LP_one(), E(18));
        return o;
    });
    // 1xy = u.e17 - (v/a).f(21'x1) + bc.1x1'21'
    r.define("1 x y", [=](Resolver& rr) {
        Vec o = zero_vec();
        axpy(o, u, E(17));
        axpy(o, -v * ia, f(rr.get("2 1' x 1")));
        axpy(o, b * c, rr.get("1 x 1' 2 1'"));
        return o;
    });
    // 1w+ = a.e22 - a.e19 + a^2.e8 + (a^2+v).e2 - a(a^2+v).e1
    r.define("1 w+", [=](Resolver&) {
        Vec o = zero_vec();
        axpy(o, a, E(22));
        axpy(o, -a, E(19));
        axpy(o, a2, E(8));
        axpy(o, a2 + v, E(2));
        axpy(o, -a * (a2 + v), E(1));
        return o;
    });
    // 1w- = a.e23 + (a/w).e9 - (a(a^2+v)/w^2).e1 - w^{-1}.e18 + ((a^2+v)/w^2).e2
    r.define("1 w-", [=](Resolver&) {
        Vec o = zero_vec();
        axpy(o, a, E(23));
        axpy(o, a * iw, E(9));
        axpy(o, -a * (a2 + v) * iw * iw, E(1));
        axpy(o, -iw, E(18));
        axpy(o, (a2 + v) * iw * iw, E(2));
        return o;
    });
    // 2w- = a.e23 + (bc)^{-1}.2'1'x1 + (1/(aw)).f(21x1')
    //       - w^{-1}.f(e18) - w^{-1}.f(21x1'2')
    r.define("2 w-", [=](Resolver& rr) {
        Vec o = zero_vec();
        axpy(o, a, E(23));
        axpy(o, ibc, rr.get("2' 1' x 1"));
        axpy(o, ia * iw, f(rr.get("2 1 x 1'")));
        axpy(o, -iw, f(E(18)));
        axpy(o, -iw, f(rr.get("2 1 x 1' 2'")));
        return o;
    });
    // 2yx = (u/a).e4 - av.e3 + w.f(x1'21')
    r.define("2 y x", [=](Resolver& rr) {
        Vec o = zero_vec();
        axpy(o, u * ia, E(4));
        axpy(o, -a * v, E(3));
        axpy(o, w, f(rr.get("x 1' 2 1'")));
        return o;
    });
}

/// Inverse of a generator matrix via the cubic relation:
/// s^{-1} = (s^2 - u s + v) / w, and w is a unit monomial.
inline RingMatrix cubic_inverse(const RingMatrix& L) {
    const LaurentPoly iw = LP_mono(-1, -1, -1);
    RingMatrix M = L * L - LP_u() * L + LP_v() * RingMatrix::identity(kA4Dim);
    return iw * M;
}

}  // namespace detail_a4

/**
 * @brief Build the full set of 25x25 action tables.
 *
 * Every table column that refers to a named auxiliary expression is resolved
 * through the memoized cascade; an unknown or cyclic reference throws.
 */
inline ActionTables build_action_tables() {
    using detail_a4::Vec;
    using detail_a4::axpy;
    using detail_a4::basis_vec;
    using detail_a4::zero_vec;

    const LaurentPoly a = LP_a(), u = LP_u(), v = LP_v(), w = LP_w();
    const LaurentPoly ia = LP_mono(-1, 0, 0);

    ActionTables t;
    t.F = detail_a4::build_F();

    detail_a4::Resolver res;
    detail_a4::register_aux(res, t.F);
    auto E = [](std::size_t i) { return detail_a4::basis_vec(i); };
    auto f = [&t](const Vec& x) { return detail_a4::mat_apply(t.F, x); };
    auto lin = [&](std::initializer_list<std::pair<LaurentPoly, Vec>> terms) {
        Vec o = zero_vec();
        for (const auto& [cf, vv] : terms) axpy(o, cf, vv);
        return o;
    };

    // Left multiplication by s_1, column j = coordinates of s_1 . e_j.
    std::vector<Vec> L1col(kA4Dim);
    L1col[0] = E(2);
    L1col[1] = lin({{-v, E(1)}, {u, E(2)}, {w, E(3)}});
    L1col[2] = E(1);
    L1col[3] = lin({{a, E(4)}});
    L1col[4] = lin({{a, E(6)}});
    L1col[5] = E(25);
    L1col[6] = lin({{a, E(7)}});
    L1col[7] = E(19);
    L1col[8] = E(18);
    L1col[9] = E(16);
    L1col[10] = E(17);
    L1col[11] = f(res.get("2 1' x 1"));
    L1col[12] = f(res.get("2' 1' x 1"));
    L1col[13] = lin({{a, E(14)}});
    L1col[14] = f(res.get("1 x y"));
    L1col[15] = lin({{u, E(16)}, {-v, E(10)}, {w, f(res.get("2 1 x 1'"))}});
    L1col[16] = lin({{u, E(17)}, {-v, E(11)}, {w, f(res.get("2' 1 x 1'"))}});
    L1col[17] = lin({{u, E(18)}, {-v, E(9)}, {w, res.get("1' x 1'")}});
    L1col[18] = lin({{u, E(19)}, {-v, E(8)}, {w, f(E(18))}});
    L1col[19] = lin({{a, E(20)}});
    L1col[20] = lin({{a, E(21)}});
    L1col[21] = res.get("1 w+");
    L1col[22] = res.get("1 w-");
    L1col[23] = res.get("1 x y");
    L1col[24] = lin({{u, E(25)}, {-v, E(6)}, {w * ia, E(5)}});

    // Left multiplication by s_2.
    std::vector<Vec> L2col(kA4Dim);
    L2col[0] = lin({{a, E(1)}});
    L2col[1] = E(4);
    L2col[2] = E(5);
    L2col[3] = lin({{u, E(4)}, {-v, E(2)}, {w, E(6)}});
    L2col[4] = lin({{u, E(5)}, {-v, E(3)}, {w, E(7)}});
    L2col[5] = E(2);
    L2col[6] = E(3);
    L2col[7] = lin({{a, E(8)}});
    L2col[8] = lin({{a, E(9)}});
    L2col[9] = lin({{a, E(10)}});
    L2col[10] = lin({{a, E(11)}});
    L2col[11] = lin({{a, E(12)}});
    L2col[12] = lin({{a, E(13)}});
    L2col[13] = lin({{u, E(14)}, {-v, E(19)}, {w, E(15)}});
    L2col[14] = E(19);
    L2col[15] = E(20);
    L2col[16] = E(21);
    L2col[17] = res.get("2 1 x 1'");
    L2col[18] = E(14);
    L2col[19] = lin({{u, E(20)}, {-v, E(16)}, {w, f(E(21))}});
    L2col[20] = lin({{u, E(21)}, {-v, E(17)}, {w, res.get("2' 1 x 1 2'")}});
    L2col[21] = res.get("2 w+");
    L2col[22] = res.get("2 w-");
    L2col[23] = lin({{a, E(24)}});
    L2col[24] = res.get("2 y x");

    t.L1 = RingMatrix(kA4Dim, kA4Dim);
    t.L2 = RingMatrix(kA4Dim, kA4Dim);
    for (std::size_t j = 0; j < kA4Dim; ++j)
        for (std::size_t i = 0; i < kA4Dim; ++i) {
            t.L1.at(i, j) = L1col[j][i];
            t.L2.at(i, j) = L2col[j][i];
        }

    t.R1 = t.F * t.L1 * t.F;
    t.R2 = t.F * t.L2 * t.F;
    t.L1inv = detail_a4::cubic_inverse(t.L1);
    t.L2inv = detail_a4::cubic_inverse(t.L2);
    t.R1inv = detail_a4::cubic_inverse(t.R1);
    t.R2inv = detail_a4::cubic_inverse(t.R2);
    return t;
}

/// Cached tables (built once, then immutable).
inline const ActionTables& a4_tables() {
    static const ActionTables t = build_action_tables();
    return t;
}

/// Report of the exact symbolic consistency families.
struct A4Report {
    bool braid_left = false;       ///< L1 L2 L1 = L2 L1 L2
    bool braid_right = false;      ///< R1 R2 R1 = R2 R1 R2
    bool cubic_L1 = false, cubic_L2 = false;
    bool cubic_R1 = false, cubic_R2 = false;
    bool f_involution = false;     ///< F^2 = I
    bool f_integral_in_a = false;  ///< F entries in Z[a^{+-1}]
    bool commute_LR = false;       ///< [L_i, R_j] = 0, all four pairs
    bool inverses_ok = false;      ///< L_i L_i^{-1} = I etc.
    bool det_units = false;        ///< det L1, det L2 units of R

    bool ok() const {
        return braid_left && braid_right && cubic_L1 && cubic_L2 && cubic_R1 && cubic_R2 &&
               f_involution && f_integral_in_a && commute_LR && inverses_ok && det_units;
    }
};

inline A4Report a4_consistency_check(const ActionTables& t) {
    const RingMatrix I = RingMatrix::identity(kA4Dim);
    auto cubic = [&](const RingMatrix& M) {
        RingMatrix Ma = M - LP_a() * I, Mb = M - LP_b() * I, Mc = M - LP_c() * I;
        return (Ma * Mb * Mc).is_zero();
    };
    A4Report rep;
    rep.braid_left = (t.L1 * t.L2 * t.L1 == t.L2 * t.L1 * t.L2);
    rep.braid_right = (t.R1 * t.R2 * t.R1 == t.R2 * t.R1 * t.R2);
    rep.cubic_L1 = cubic(t.L1);
    rep.cubic_L2 = cubic(t.L2);
    rep.cubic_R1 = cubic(t.R1);
    rep.cubic_R2 = cubic(t.R2);
    rep.f_involution = (t.F * t.F == I);
    rep.f_integral_in_a = true;
    for (const auto& p : t.F.entries)
        for (const auto& [key, cf] : p.terms) {
            auto e = LaurentPoly::decode(key);
            if (e[1] != 0 || e[2] != 0) rep.f_integral_in_a = false;
        }
    rep.commute_LR = true;
    for (const RingMatrix* L : {&t.L1, &t.L2})
        for (const RingMatrix* R : {&t.R1, &t.R2})
            if (*L * *R != *R * *L) rep.commute_LR = false;
    rep.inverses_ok = (t.L1 * t.L1inv == I) && (t.L2 * t.L2inv == I) &&
                      (t.R1 * t.R1inv == I) && (t.R2 * t.R2inv == I);
    rep.det_units =
        mat_det_bareiss(t.L1).is_unit_monomial() && mat_det_bareiss(t.L2).is_unit_monomial();
    return rep;
}

enum class A4Side { left, right };

/**
 * @brief Apply a signed word in s_1^{+-1}, s_2^{+-1} to a coordinate vector.
 *
 * Left action composes the matrices so that the leftmost letter acts last;
 * right action applies the letters in reading order.
 */
inline std::vector<LaurentPoly> a4_apply(const SignedWord& word, A4Side side,
                                         const std::vector<LaurentPoly>& v) {
    if (v.size() != kA4Dim) throw std::invalid_argument("a4_apply: vector size");
    const ActionTables& t = a4_tables();
    auto mat = [&](int letter) -> const RingMatrix& {
        switch (letter) {
            case 1: return side == A4Side::left ? t.L1 : t.R1;
            case -1: return side == A4Side::left ? t.L1inv : t.R1inv;
            case 2: return side == A4Side::left ? t.L2 : t.R2;
            case -2: return side == A4Side::left ? t.L2inv : t.R2inv;
            default: throw std::invalid_argument("a4_apply: letter out of range");
        }
    };
    std::vector<LaurentPoly> out = v;
    if (side == A4Side::left) {
        for (auto it = word.letters.rbegin(); it != word.letters.rend(); ++it)
            out = detail_a4::mat_apply(mat(*it), out);
    } else {
        for (int letter : word.letters) out = detail_a4::mat_apply(mat(letter), out);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Spanning-set cardinality ledger
// ---------------------------------------------------------------------------

/// The literal spanning counts for Q_4, built from explicit word sets.
struct CardinalityLedger {
    std::size_t b0 = 0;        ///< basis of Q_3 (20)
    std::size_t one_sided = 0; ///< Q_3 s_3 Q_3 spanning set (136)
    std::size_t through_f = 0; ///< Q_3 s_3 F + Q_3 s_3^{-1} F spanning set (201)
    std::size_t two_sided = 0; ///< Q_3 s_3 Q_3 + Q_3 s_3^{-1} Q_3 spanning set (219)
    std::size_t b1 = 0;        ///< spanning set of Q_3 u_3 Q_3 (239)
    std::size_t b2 = 0;        ///< spanning set of Q_4 (264)

    bool matches_expected() const {
        return b0 == 20 && one_sided == 136 && through_f == 201 && two_sided == 219 &&
               b1 == 239 && b2 == 264;
    }
};

namespace detail_a4 {

inline SignedWord glue(const SignedWord& p, const std::vector<int>& suffix) {
    std::vector<int> ls = p.letters;
    ls.insert(ls.end(), suffix.begin(), suffix.end());
    return SignedWord(std::move(ls), 4);
}

inline std::vector<SignedWord> token_words(const std::vector<const char*>& toks) {
    std::vector<SignedWord> out;
    for (const char* s : toks) {
        SignedWord w = detail::parse_token_word(s);
        out.emplace_back(w.letters, 4);
    }
    return out;
}

}  // namespace detail_a4

inline CardinalityLedger a4_cardinality_ledger() {
    using detail_a4::glue;
    using detail_a4::token_words;

    std::vector<SignedWord> b0;
    for (const SignedWord& w : parse_basis_list(data::kSigned2Basis))
        b0.emplace_back(w.letters, 4);

    // The auxiliary word sets of the spanning lemmas.
    const auto setE = token_words({"e", "2", "2'", "1 2", "1 2'", "1' 2", "1' 2'", "2 1' 2"});
    const auto setE0 = token_words({"e", "1", "1'", "2", "2'"});
    const auto setEp = token_words({"e", "1", "1'", "2 1", "2 1'", "2' 1", "2' 1'", "1 2' 1"});
    const std::vector<std::vector<int>> threeF1 = {
        {3}, {3, 2}, {3, 2, 1}, {3, 2, -1}, {3, -2}, {3, -2, 1}};
    const std::vector<std::vector<int>> setF2 = {
        {3}, {-3}, {3, 2}, {3, -2}, {-3, 2}, {3, 2, 1}, {-3, 2, 1}, {3, 2, -1}, {3, -2, 1}};

    CardinalityLedger led;
    led.b0 = std::set<SignedWord>(b0.begin(), b0.end()).size();

    std::set<SignedWord> s136;
    for (const auto& b : b0)
        for (const auto& sfx : threeF1) s136.insert(glue(b, sfx));
    for (const auto& e : setE) {
        s136.insert(glue(e, {3, -2, -1}));
        s136.insert(glue(e, {3, 2, -1, 2}));
    }
    led.one_sided = s136.size();

    std::set<SignedWord> s201;
    for (const auto& b : b0)
        for (const auto& sfx : setF2) s201.insert(glue(b, sfx));
    for (const auto& e : setEp) {
        s201.insert(glue(e, {-3, -2}));
        s201.insert(glue(e, {-3, -2, 1}));
    }
    for (const auto& e : setE0) s201.insert(glue(e, {-3, 2, -1}));
    led.through_f = s201.size();

    std::set<SignedWord> s219 = s201;
    for (const auto& e : setE) {
        s219.insert(glue(e, {3, -2, -1}));
        s219.insert(glue(e, {3, 2, -1, 2}));
    }
    s219.insert(SignedWord({-3, -2, -1}, 4));
    s219.insert(SignedWord({-3, 2, -1, 2}, 4));
    led.two_sided = s219.size();

    std::set<SignedWord> s239 = s219;
    for (const auto& b : b0) s239.insert(b);
    led.b1 = s239.size();

    std::set<SignedWord> s264 = s239;
    for (const auto& w : a4_basis_words()) s264.insert(w);
    led.b2 = s264.size();
    return led;
}

}  // namespace cubiq
