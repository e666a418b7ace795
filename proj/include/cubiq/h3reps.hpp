/**
 * @file h3reps.hpp
 * @brief Matrix models of the irreducible representations of the cubic Hecke
 *        algebra H_3, the rank-24 embedding Phi, ideal membership for the
 *        defining ideal of the rank-20 quotient, and express-in-basis.
 */
#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "freealg.hpp"
#include "hecke.hpp"
#include "rewrite.hpp"
#include "ring.hpp"
#include "words.hpp"

namespace cubiq {

/// Adjugate-based inverse; requires the determinant to be a unit of R.
inline RingMatrix mat_inverse_unit(const RingMatrix& M) {
    if (M.rows != M.cols || M.rows == 0 || M.rows > 3)
        throw std::invalid_argument("mat_inverse_unit: need square dim 1..3");
    LaurentPoly det = mat_det_bareiss(M);
    LaurentPoly det_inv = mono_inverse(det);
    const std::size_t n = M.rows;
    RingMatrix adj(n, n);
    if (n == 1) {
        adj.at(0, 0) = LP_one();
    } else if (n == 2) {
        adj.at(0, 0) = M.at(1, 1);
        adj.at(1, 1) = M.at(0, 0);
        adj.at(0, 1) = -M.at(0, 1);
        adj.at(1, 0) = -M.at(1, 0);
    } else {
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) {
                std::size_t r0 = (j + 1) % 3, r1 = (j + 2) % 3;
                std::size_t c0 = (i + 1) % 3, c1 = (i + 2) % 3;
                adj.at(i, j) = M.at(r0, c0) * M.at(r1, c1) - M.at(r0, c1) * M.at(r1, c0);
            }
    }
    return adj.scaled(det_inv);
}

/// One irreducible matrix model of H_3.
struct Rep {
    std::string name;
    std::size_t dim;
    RingMatrix gen1, gen2;      // images of s_1, s_2
    RingMatrix gen1inv, gen2inv;

    Rep(std::string nm, RingMatrix g1, RingMatrix g2)
        : name(std::move(nm)), dim(g1.rows), gen1(std::move(g1)), gen2(std::move(g2)) {
        gen1inv = mat_inverse_unit(gen1);
        gen2inv = mat_inverse_unit(gen2);
    }
};

/// The seven models in the fixed block order (S_a, S_b, S_c, U_ab, U_ac, U_bc, V).
inline const std::vector<Rep>& h3_reps() {
    static const std::vector<Rep> reps = [] {
        std::vector<Rep> rs;
        auto scalar = [](const LaurentPoly& x) {
            RingMatrix m(1, 1);
            m.at(0, 0) = x;
            return m;
        };
        rs.emplace_back("S_a", scalar(LP_a()), scalar(LP_a()));
        rs.emplace_back("S_b", scalar(LP_b()), scalar(LP_b()));
        rs.emplace_back("S_c", scalar(LP_c()), scalar(LP_c()));
        auto U = [&](const LaurentPoly& al, const LaurentPoly& be, const std::string& nm) {
            RingMatrix g1(2, 2), g2(2, 2);
            g1.at(0, 0) = al;
            g1.at(1, 0) = -al;
            g1.at(1, 1) = be;
            g2.at(0, 0) = be;
            g2.at(0, 1) = be;
            g2.at(1, 1) = al;
            rs.emplace_back(nm, g1, g2);
        };
        U(LP_a(), LP_b(), "U_ab");
        U(LP_a(), LP_c(), "U_ac");
        U(LP_b(), LP_c(), "U_bc");
        {
            LaurentPoly acb2 = LP_a() * LP_c() + LP_b() * LP_b();
            RingMatrix g1(3, 3), g2(3, 3);
            g1.at(0, 0) = LP_c();
            g1.at(1, 0) = acb2;
            g1.at(1, 1) = LP_b();
            g1.at(2, 0) = LP_b();
            g1.at(2, 1) = LP_one();
            g1.at(2, 2) = LP_a();
            g2.at(0, 0) = LP_a();
            g2.at(0, 1) = -LP_one();
            g2.at(0, 2) = LP_b();
            g2.at(1, 1) = LP_b();
            g2.at(1, 2) = -acb2;
            g2.at(2, 2) = LP_c();
            rs.emplace_back("V", g1, g2);
        }
        return rs;
    }();
    return reps;
}

/// Block index constants for readability.
enum Block : std::size_t { kSa = 0, kSb, kSc, kUab, kUac, kUbc, kV };

/// Image under the rank-24 embedding: seven matrix blocks.
struct Phi3Image {
    std::vector<RingMatrix> blocks;  // sizes 1,1,1,2,2,2,3

    static Phi3Image zero() {
        Phi3Image p;
        for (const auto& r : h3_reps()) p.blocks.emplace_back(r.dim, r.dim);
        return p;
    }
    static Phi3Image identity() {
        Phi3Image p;
        for (const auto& r : h3_reps()) p.blocks.push_back(RingMatrix::identity(r.dim));
        return p;
    }
    bool is_zero() const {
        for (const auto& b : blocks)
            if (!b.is_zero()) return false;
        return true;
    }
    bool operator==(const Phi3Image& o) const { return blocks == o.blocks; }
    Phi3Image operator+(const Phi3Image& o) const {
        Phi3Image r;
        for (std::size_t i = 0; i < blocks.size(); ++i) r.blocks.push_back(blocks[i] + o.blocks[i]);
        return r;
    }
    Phi3Image operator-(const Phi3Image& o) const {
        Phi3Image r;
        for (std::size_t i = 0; i < blocks.size(); ++i) r.blocks.push_back(blocks[i] - o.blocks[i]);
        return r;
    }
    Phi3Image operator*(const Phi3Image& o) const {
        Phi3Image r;
        for (std::size_t i = 0; i < blocks.size(); ++i) r.blocks.push_back(blocks[i] * o.blocks[i]);
        return r;
    }
    Phi3Image scaled(const LaurentPoly& k) const {
        Phi3Image r;
        for (const auto& b : blocks) r.blocks.push_back(b.scaled(k));
        return r;
    }
    /// Flattened 24 coordinates (row-major within each block, block order fixed).
    std::vector<LaurentPoly> coords() const {
        std::vector<LaurentPoly> out;
        for (const auto& b : blocks) out.insert(out.end(), b.entries.begin(), b.entries.end());
        return out;
    }
};

/// Evaluate a single signed word through every block.
inline Phi3Image phi_h3_word(const SignedWord& w) {
    Phi3Image p = Phi3Image::identity();
    const auto& reps = h3_reps();
    for (int g : w.letters) {
        for (std::size_t i = 0; i < reps.size(); ++i) {
            const RingMatrix& m = g == 1    ? reps[i].gen1
                                  : g == -1 ? reps[i].gen1inv
                                  : g == 2  ? reps[i].gen2
                                            : reps[i].gen2inv;
            p.blocks[i] = p.blocks[i] * m;
        }
    }
    return p;
}

/// Evaluate an algebra element through the embedding.
inline Phi3Image phi_h3_eval(const AlgElem& x) {
    if (x.strands != 3) throw std::invalid_argument("phi_h3_eval: 3 strands required");
    Phi3Image p = Phi3Image::zero();
    for (const auto& [w, c] : x.terms) p = p + phi_h3_word(w).scaled(c);
    return p;
}

/// The 24-word basis of H_3 as a free R-module.
inline std::vector<SignedWord> h3_b1_basis() {
    static const std::vector<std::vector<int>> ws = {
        {},          {1},         {-1},            {2},          {-2},        {1, 2},
        {1, -2},     {-1, 2},     {-1, -2},        {1, 2, 1},    {1, 2, -1},  {-1, 2, 1},
        {-1, 2, -1}, {1, -2, 1},  {-1, -2, 1},     {2, 1},       {-2, 1},     {2, -1},
        {-2, -1},    {1, -2, -1}, {-1, -2, -1},    {2, -1, 2},   {1, 2, -1, 2},
        {-1, 2, -1, 2}};
    std::vector<SignedWord> out;
    for (const auto& v : ws) out.emplace_back(v, 3);
    return out;
}

// ---------------------------------------------------------------------------
// Coordinates in the rank-20 quotient.
// ---------------------------------------------------------------------------

/// The rewriting system whose irreducible words index the quotient basis.
inline const RewriteSystem& q3_system() {
    static const RewriteSystem sys = build_system(SystemKind::signed1);
    return sys;
}

/// The 20 quotient basis words, in table order.
inline const std::vector<SignedWord>& q3_basis() {
    static const std::vector<SignedWord> basis = parse_basis_list(data::kSigned1Basis);
    return basis;
}

/**
 * @brief Coordinate vector of x in the rank-20 quotient, over the fixed word
 *        basis: reduce to normal form and read the coefficients.  Returns
 *        nullopt if the normal form contains a non-basis word (cannot happen
 *        for 3-strand input once the system is confluent).
 */
inline std::optional<std::vector<LaurentPoly>> q3_coords(const AlgElem& x) {
    AlgElem nf = normal_form(x, q3_system());
    const auto& basis = q3_basis();
    std::vector<LaurentPoly> out(basis.size(), LP_zero());
    for (const auto& [w, c] : nf.terms) {
        std::size_t idx = basis.size();
        for (std::size_t j = 0; j < basis.size(); ++j)
            if (basis[j] == w) { idx = j; break; }
        if (idx == basis.size()) return std::nullopt;
        out[idx] = c;
    }
    return out;
}

/// Result of expressing an element over a word basis.
struct ExpressResult {
    bool solvable = false;
    std::vector<Frac> coeffs;                       // per basis word
    std::optional<std::vector<LaurentPoly>> in_R;   // present iff all coeffs lie in R
    std::string error;
};

/**
 * @brief Express x over the given words inside the rank-20 quotient: both x
 *        and the candidate basis are mapped to their quotient coordinates and
 *        the resulting exact linear system is solved by Bareiss.  For the
 *        canonical word basis this reduces to reading off the normal form.
 *        With demand_R the result is only "solvable" when every coefficient
 *        certifies as an element of R by exact division.
 */
inline ExpressResult express_in_basis(const AlgElem& x, const std::vector<SignedWord>& basis,
                                      bool demand_R = false) {
    ExpressResult res;
    auto target = q3_coords(x);
    if (!target) {
        res.error = "normal form escaped the quotient basis";
        return res;
    }
    // Fast path: the canonical basis itself (up to permutation).
    std::vector<std::optional<std::size_t>> perm(basis.size());
    bool is_canonical = basis.size() == q3_basis().size();
    if (is_canonical) {
        std::vector<bool> used(q3_basis().size(), false);
        for (std::size_t j = 0; j < basis.size() && is_canonical; ++j) {
            perm[j] = std::nullopt;
            for (std::size_t k = 0; k < q3_basis().size(); ++k)
                if (!used[k] && q3_basis()[k] == basis[j]) {
                    perm[j] = k;
                    used[k] = true;
                    break;
                }
            if (!perm[j]) is_canonical = false;
        }
    }
    std::vector<LaurentPoly> polys;
    if (is_canonical) {
        res.solvable = true;
        for (std::size_t j = 0; j < basis.size(); ++j) {
            polys.push_back((*target)[*perm[j]]);
            res.coeffs.emplace_back(polys.back());
        }
        res.in_R = std::move(polys);
        return res;
    }
    // General case: solve C * lambda = target exactly.
    RingMatrix C(q3_basis().size(), basis.size()), B(q3_basis().size(), 1);
    for (std::size_t j = 0; j < basis.size(); ++j) {
        auto col = q3_coords(AlgElem::from_word(basis[j]));
        if (!col) {
            res.error = "basis word escaped the quotient basis";
            return res;
        }
        for (std::size_t i = 0; i < col->size(); ++i) C.at(i, j) = (*col)[i];
    }
    for (std::size_t i = 0; i < target->size(); ++i) B.at(i, 0) = (*target)[i];
    auto sol = mat_solve_bareiss(C, B);
    if (!sol) {
        res.error = "system unsolvable (not in span or basis dependent)";
        return res;
    }
    res.solvable = true;
    bool all_R = true;
    for (std::size_t j = 0; j < basis.size(); ++j) {
        Frac f(sol->xnum.at(j, 0), sol->den);
        if (auto p = f.as_poly(); p && all_R)
            polys.push_back(*p);
        else
            all_R = false;
        res.coeffs.push_back(std::move(f));
    }
    if (all_R) res.in_R = std::move(polys);
    if (demand_R && !res.in_R) {
        res.solvable = false;
        res.error = "coefficient outside R";
    }
    return res;
}

/// Is Phi(x) in the K-span (K the fraction field) of the Phi-images of the
/// given elements?  Certified solve-and-verify over the 24 coordinates.
inline bool phi_in_span_elems(const AlgElem& x, const std::vector<AlgElem>& span) {
    RingMatrix S(24, span.size());
    for (std::size_t j = 0; j < span.size(); ++j) {
        auto col = phi_h3_eval(span[j]).coords();
        for (std::size_t i = 0; i < 24; ++i) S.at(i, j) = col[i];
    }
    return span_membership_exact(S, phi_h3_eval(x).coords());
}

inline bool phi_in_span(const AlgElem& x, const std::vector<SignedWord>& span_words) {
    std::vector<AlgElem> span;
    for (const auto& w : span_words) span.push_back(AlgElem::from_word(w));
    return phi_in_span_elems(x, span);
}

/// Span membership inside the rank-20 quotient (coordinates via normal forms).
inline bool q3_in_span_elems(const AlgElem& x, const std::vector<AlgElem>& span) {
    auto target = q3_coords(x);
    if (!target) return false;
    RingMatrix S(target->size(), span.size());
    for (std::size_t j = 0; j < span.size(); ++j) {
        auto col = q3_coords(span[j]);
        if (!col) return false;
        for (std::size_t i = 0; i < col->size(); ++i) S.at(i, j) = (*col)[i];
    }
    return span_membership_exact(S, *target);
}

inline bool q3_in_span(const AlgElem& x, const std::vector<SignedWord>& span_words) {
    std::vector<AlgElem> span;
    for (const auto& w : span_words) span.push_back(AlgElem::from_word(w));
    return q3_in_span_elems(x, span);
}

// ---------------------------------------------------------------------------
// Ideal membership for the defining ideal of the rank-20 quotient.
// ---------------------------------------------------------------------------

struct MembershipResult {
    bool member = false;
    std::string witness;  // empty when member
};

/**
 * @brief Two-step membership test:
 *   (i)  all embedding blocks except U_bc vanish,
 *   (ii) the U_bc block is entrywise divisible by delta = (a-b)(a-c)(a^2+bc),
 *   (iii) the image in the quadratic Hecke algebra H_3(b,c) is delta-divisible
 *         coefficientwise and the quotient dies in R[s]/((s-b)(s-c)).
 */
inline MembershipResult ideal_membership(const AlgElem& x) {
    const auto& reps = h3_reps();
    Phi3Image p = phi_h3_eval(x);
    for (std::size_t i = 0; i < reps.size(); ++i) {
        if (i == kUbc) continue;
        if (!p.blocks[i].is_zero()) return {false, "nonzero block " + reps[i].name};
    }
    LaurentPoly delta = LP_delta();
    for (const auto& e : p.blocks[kUbc].entries)
        if (!e.is_zero() && !lp_divide_exact(e, delta))
            return {false, "U_bc entry not delta-divisible"};
    // Step 2: H_3(b,c) image.
    HeckeElem h = hecke_eval(x, LP_b(), LP_c());
    // Residue in R[s]/((s-b)(s-c)): s_i -> s, s^2 = (b+c)s - bc.
    LaurentPoly r0 = LP_zero(), r1 = LP_zero();  // quotient of residue by delta
    for (const auto& [w, c] : h.terms) {
        auto q = lp_divide_exact(c, delta);
        if (!q) return {false, "H_3(b,c) coefficient not delta-divisible"};
        // s^l reduced mod s^2 - (b+c)s + bc.
        LaurentPoly p0 = LP_one(), p1 = LP_zero();
        for (int i = 0; i < w.length(); ++i) {
            LaurentPoly n1 = p0 + p1 * (LP_b() + LP_c());
            LaurentPoly n0 = -(p1 * LP_b() * LP_c());
            p0 = n0;
            p1 = n1;
        }
        r0 = r0 + *q * p0;
        r1 = r1 + *q * p1;
    }
    if (!r0.is_zero() || !r1.is_zero())
        return {false, "delta-quotient nonzero in R[s]/((s-b)(s-c))"};
    return {true, ""};
}

// ---------------------------------------------------------------------------
// Identity verification reports.
// ---------------------------------------------------------------------------

struct Q3IdentityReport {
    bool conj_r1_is_r2 = false;   // a b^2 c^2 (s2 r1 s1^{-1} s2^{-1}) = r2
    bool phi_r1 = false;          // phi(r1) = a^{-2} r1
    bool psi_r1 = false;          // psi(r1) = -a^{-2} r1
    bool comm_in_u1u2 = false;    // s2^{-1}s1s2^{-1}s1 commutator lies in the span
    bool ok() const { return conj_r1_is_r2 && phi_r1 && psi_r1 && comm_in_u1u2; }
};

/// Words of u_1u_2 + u_2u_1 with u_i = R + R s_i + R s_i^{-1}.
inline std::vector<SignedWord> u1u2_plus_u2u1_words() {
    std::vector<SignedWord> out;
    std::vector<std::vector<int>> u1 = {{}, {1}, {-1}}, u2 = {{}, {2}, {-2}};
    auto push = [&](std::vector<int> v) {
        SignedWord w(std::move(v), 3);
        for (const auto& o : out)
            if (o == w) return;
        out.push_back(w);
    };
    for (const auto& x : u1)
        for (const auto& y : u2) {
            std::vector<int> v = x;
            v.insert(v.end(), y.begin(), y.end());
            push(v);
        }
    for (const auto& y : u2)
        for (const auto& x : u1) {
            std::vector<int> v = y;
            v.insert(v.end(), x.begin(), x.end());
            push(v);
        }
    return out;
}

inline Q3IdentityReport verify_q3_identities() {
    Q3IdentityReport rep;
    auto [r1, r2] = defining_relations();
    AlgElem s2 = AlgElem::from_word(SignedWord({2}, 3));
    AlgElem s1i = AlgElem::from_word(SignedWord({-1}, 3));
    AlgElem s2i = AlgElem::from_word(SignedWord({-2}, 3));
    // The unit ab^2c^2 relates the conjugate of r1 to r2:
    //   ab^2c^2 * (s2 r1 s1^{-1} s2^{-1}) = r2
    // (a determinant comparison of the U_bc blocks fixes the side the unit
    // scalar must sit on).
    LaurentPoly ab2c2 = LP_mono(1, 2, 2);
    rep.conj_r1_is_r2 = phi_h3_eval(ab2c2 * (s2 * r1 * s1i * s2i) - r2).is_zero();
    rep.phi_r1 =
        phi_h3_eval(apply_symmetry(r1, AlgSymmetry::phi) - r1.scaled(LP_mono(-2, 0, 0))).is_zero();
    rep.psi_r1 =
        phi_h3_eval(apply_symmetry(r1, AlgSymmetry::psi) + r1.scaled(LP_mono(-2, 0, 0))).is_zero();
    AlgElem s1 = AlgElem::from_word(SignedWord({1}, 3));
    AlgElem comm = s2i * s1 * s2i * s1 - s1 * s2i * s1 * s2i;
    rep.comm_in_u1u2 = phi_in_span(comm, u1u2_plus_u2u1_words());
    return rep;
}

struct AltBasisReport {
    bool change_R_valued = false;    // alt words expressed over base: coefficients in R
    bool inverse_R_valued = false;   // base words expressed over alt: coefficients in R
    bool det_unit = false;           // determinant of the change matrix is +-monomial
    bool identity1 = false;          // 2'12'12' residue identity
    bool identity2 = false;          // 21'21'2 residue identity
    bool ok() const {
        return change_R_valued && inverse_R_valued && det_unit && identity1 && identity2;
    }
};

/**
 * @brief Certify that alt20 is a second basis of the rank-20 quotient over
 *        base20: both change-of-basis matrices are R-valued, the determinant
 *        is a unit, and the two stated residue identities hold.
 */
inline AltBasisReport verify_alt_basis(const std::vector<SignedWord>& base20,
                                       const std::vector<SignedWord>& alt20) {
    AltBasisReport rep;
    RingMatrix C(20, 20);
    rep.change_R_valued = true;
    for (std::size_t j = 0; j < alt20.size(); ++j) {
        auto res = express_in_basis(AlgElem::from_word(alt20[j]), base20, true);
        if (!res.solvable || !res.in_R) {
            rep.change_R_valued = false;
            return rep;
        }
        for (std::size_t i = 0; i < 20; ++i) C.at(i, j) = (*res.in_R)[i];
    }
    LaurentPoly det = mat_det_bareiss(C);
    rep.det_unit = det.is_unit_monomial();
    if (rep.det_unit) {
        auto inv = mat_solve_bareiss(C, RingMatrix::identity(20));
        rep.inverse_R_valued = inv && inv->as_poly().has_value();
    }
    // Residue identities, modulo the span u1u2 + u2u1 + 2'u1u2 + u2u1 2'
    // (plus R.121 for the second one).
    std::vector<SignedWord> span = u1u2_plus_u2u1_words();
    auto add_word = [&](std::vector<int> v) {
        SignedWord w = free_reduce(SignedWord(std::move(v), 3));
        for (const auto& o : span)
            if (o == w) return;
        span.push_back(w);
    };
    for (const auto& x : std::vector<std::vector<int>>{{}, {1}, {-1}})
        for (const auto& y : std::vector<std::vector<int>>{{}, {2}, {-2}}) {
            std::vector<int> v{-2};
            v.insert(v.end(), x.begin(), x.end());
            v.insert(v.end(), y.begin(), y.end());
            add_word(v);  // 2' u1 u2
            std::vector<int> u = y;
            u.insert(u.end(), x.begin(), x.end());
            u.push_back(-2);
            add_word(u);  // u2 u1 2'
        }
    auto word = [](std::vector<int> v) { return AlgElem::from_word(SignedWord(std::move(v), 3)); };
    AlgElem lhs1 = word({-2, 1, -2, 1, -2}) -
                   (LP_b() * LP_c() * LP_mono(-2, 0, 0)) * word({-1, 2, -1}) -
                   ((LP_b() * LP_c() - LP_a() * LP_a()) * LP_mono(-4, -1, -1)) * word({1, 2, 1});
    rep.identity1 = q3_in_span(lhs1, span);
    std::vector<SignedWord> span2 = span;
    span2.emplace_back(std::vector<int>{1, 2, 1}, 3);
    AlgElem lhs2 = word({2, -1, 2, -1, 2}) - LP_mono(2, 0, 0) * word({-1, 2, -1});
    rep.identity2 = q3_in_span(lhs2, span2);
    return rep;
}

/// Semisimplicity criterion: specializations stay semisimple when
/// (x-y)(x^2-xy+y^2)(xy+z^2) != 0 for every {x,y,z} = {a,b,c}.
inline bool h3_semisimple_at(const std::vector<Rational>& pt) {
    const Rational x = pt[0], y = pt[1], z = pt[2];
    auto factor = [](Rational x, Rational y, Rational z) {
        return (x - y) * (x * x - x * y + y * y) * (x * y + z * z);
    };
    return factor(x, y, z) != 0 && factor(x, z, y) != 0 && factor(y, z, x) != 0;
}

}  // namespace cubiq
