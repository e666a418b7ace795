/**
 * @file vogel.hpp
 * @brief The diagram algebra V_n generated by S_n and elements t_ij subject
 *        to t_ij (i,j) = (i,j) t_ij = t_ij, the quadratic relation
 *        t_ij^2 - (alpha+beta) t_ij + (alpha beta / 2)(1 + (i,j)) = 0, and
 *        the infinitesimal-braid relations.
 *
 * Provides exact-rational matrix models (the 3-dimensional model on three
 * strands, the 6- and 8-dimensional models on four strands, the
 * transposition-basis family), Brauer-diagram calculus, factorization
 * criteria for the morphisms phi_{u,v} into the group algebra and psi_{u,v}
 * into the Brauer algebra, the scalar model of V_2, and the rank-20 spanning
 * verification for the 20-word list B(3).
 */
#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ring.hpp"

namespace cubiq {

// ---------------------------------------------------------------------------
// Dense rational matrices
// ---------------------------------------------------------------------------

/// Small exact-rational matrix (row-major).
struct QMat {
    std::size_t rows = 0, cols = 0;
    std::vector<Rational> e;

    QMat() = default;
    QMat(std::size_t r, std::size_t c) : rows(r), cols(c), e(r * c, Rational(0)) {}

    static QMat identity(std::size_t n) {
        QMat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    Rational& at(std::size_t i, std::size_t j) { return e[i * cols + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return e[i * cols + j]; }

    bool operator==(const QMat& o) const { return rows == o.rows && cols == o.cols && e == o.e; }
    bool operator!=(const QMat& o) const { return !(*this == o); }
    bool is_zero() const {
        return std::all_of(e.begin(), e.end(), [](const Rational& x) { return x == 0; });
    }

    QMat operator+(const QMat& o) const {
        QMat r(rows, cols);
        for (std::size_t i = 0; i < e.size(); ++i) r.e[i] = e[i] + o.e[i];
        return r;
    }
    QMat operator-(const QMat& o) const {
        QMat r(rows, cols);
        for (std::size_t i = 0; i < e.size(); ++i) r.e[i] = e[i] - o.e[i];
        return r;
    }
    QMat operator*(const QMat& o) const {
        if (cols != o.rows) throw std::invalid_argument("QMat: shape mismatch");
        QMat r(rows, o.cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t k = 0; k < cols; ++k) {
                if (at(i, k) == 0) continue;
                for (std::size_t j = 0; j < o.cols; ++j) r.at(i, j) += at(i, k) * o.at(k, j);
            }
        return r;
    }
    QMat scaled(const Rational& k) const {
        QMat r(rows, cols);
        for (std::size_t i = 0; i < e.size(); ++i) r.e[i] = e[i] * k;
        return r;
    }
    Rational trace() const {
        Rational t = 0;
        for (std::size_t i = 0; i < rows; ++i) t += at(i, i);
        return t;
    }
};

inline QMat operator*(const Rational& k, const QMat& m) { return m.scaled(k); }

/// Rank over Q by Gauss-Jordan elimination.
inline std::size_t qmat_rank(QMat m) {
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
        std::size_t p = r;
        while (p < m.rows && m.at(p, c) == 0) ++p;
        if (p == m.rows) continue;
        for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(r, j), m.at(p, j));
        for (std::size_t i = 0; i < m.rows; ++i) {
            if (i == r || m.at(i, c) == 0) continue;
            Rational f = m.at(i, c) / m.at(r, c);
            for (std::size_t j = c; j < m.cols; ++j) m.at(i, j) -= f * m.at(r, j);
        }
        ++r;
    }
    return r;
}

/// Block-diagonal assembly.
inline QMat qmat_diag_blocks(const std::vector<QMat>& blocks) {
    std::size_t n = 0;
    for (const auto& b : blocks) n += b.rows;
    QMat out(n, n);
    std::size_t off = 0;
    for (const auto& b : blocks) {
        for (std::size_t i = 0; i < b.rows; ++i)
            for (std::size_t j = 0; j < b.cols; ++j) out.at(off + i, off + j) = b.at(i, j);
        off += b.rows;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Permutations (one-line notation, 0-based values)
// ---------------------------------------------------------------------------

namespace detail_vogel {

using Perm = std::vector<int>;

inline Perm perm_id(int n) {
    Perm p(n);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

inline Perm perm_mul(const Perm& p, const Perm& q) {  // (p*q)(i) = p(q(i))
    Perm r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) r[i] = p[q[i]];
    return r;
}

inline Perm perm_inv(const Perm& p) {
    Perm r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) r[p[i]] = int(i);
    return r;
}

inline Perm transposition(int n, int i, int j) {
    Perm p = perm_id(n);
    std::swap(p[i], p[j]);
    return p;
}

/// All permutations of {0..n-1}.
inline std::vector<Perm> all_perms(int n) {
    Perm p = perm_id(n);
    std::vector<Perm> out;
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

/// Decompose a permutation into adjacent transpositions s_j = (j, j+1),
/// returned so that the product of the generators (left to right) realizes p.
inline std::vector<int> adjacent_word(Perm p) {
    std::vector<int> word;
    for (std::size_t pass = 0; pass + 1 < p.size(); ++pass)
        for (std::size_t j = 0; j + 1 < p.size(); ++j)
            if (p[j] > p[j + 1]) {
                std::swap(p[j], p[j + 1]);
                word.push_back(int(j));
            }
    std::reverse(word.begin(), word.end());
    return word;
}

}  // namespace detail_vogel

// ---------------------------------------------------------------------------
// Brauer diagrams
// ---------------------------------------------------------------------------

/// Perfect matching on 2n points: 0..n-1 on top, n..2n-1 on the bottom.
struct BrauerDiagram {
    int n = 0;
    std::vector<int> match;  ///< match[p] = partner of point p

    BrauerDiagram() = default;
    BrauerDiagram(int strands, std::vector<int> m) : n(strands), match(std::move(m)) {
        if (match.size() != std::size_t(2 * n)) throw std::invalid_argument("BrauerDiagram: size");
        for (int p = 0; p < 2 * n; ++p)
            if (match[p] == p || match[match[p]] != p)
                throw std::invalid_argument("BrauerDiagram: not a perfect matching");
    }

    static BrauerDiagram identity(int n) {
        std::vector<int> m(2 * n);
        for (int i = 0; i < n; ++i) {
            m[i] = n + i;
            m[n + i] = i;
        }
        return BrauerDiagram(n, std::move(m));
    }
    /// Diagram of a permutation: top i joined to bottom n + p(i).
    static BrauerDiagram from_perm(const detail_vogel::Perm& p) {
        int n = int(p.size());
        std::vector<int> m(2 * n);
        for (int i = 0; i < n; ++i) {
            m[i] = n + p[i];
            m[n + p[i]] = i;
        }
        return BrauerDiagram(n, std::move(m));
    }
    /// The cup/cap generator: i--j on top, n+i--n+j on the bottom.
    static BrauerDiagram p_ij(int n, int i, int j) {
        BrauerDiagram d = identity(n);
        d.match[i] = j;
        d.match[j] = i;
        d.match[n + i] = n + j;
        d.match[n + j] = n + i;
        return d;
    }

    bool operator<(const BrauerDiagram& o) const {
        return std::tie(n, match) < std::tie(o.n, o.match);
    }
    bool operator==(const BrauerDiagram& o) const { return n == o.n && match == o.match; }
};

/**
 * @brief Compose two diagrams (d1 on top of d2); circles formed in the middle
 *        are counted and each is converted into the scalar m.
 */
inline std::pair<BrauerDiagram, Rational> brauer_mul(const BrauerDiagram& d1,
                                                     const BrauerDiagram& d2, const Rational& m) {
    if (d1.n != d2.n) throw std::invalid_argument("brauer_mul: strand mismatch");
    const int n = d1.n;
    // Points of the glued picture: d1-top (0..n-1), middle (d1-bottom == d2-top),
    // d2-bottom (n..2n-1 of the result).  Walk matchings through the middle.
    auto traverse = [&](int start, bool start_in_d1) {
        // returns (endpoint, endpoint_in_d1) of the strand starting at an
        // exterior point, walking through middle identifications
        bool in_d1 = start_in_d1;
        int p = start;
        while (true) {
            int q = in_d1 ? d1.match[p] : d2.match[p];
            if (in_d1 && q < n) return std::pair<int, bool>(q, true);        // d1 top
            if (!in_d1 && q >= n) return std::pair<int, bool>(q, false);     // d2 bottom
            // crossed into the middle: d1 bottom point q (>= n) glues to d2 top q - n,
            // and d2 top point q (< n) glues to d1 bottom q + n
            if (in_d1) {
                p = q - n;
                in_d1 = false;
            } else {
                p = q + n;
                in_d1 = true;
            }
        }
    };
    std::vector<int> match(2 * n, -1);
    auto index = [&](int p, bool in_d1) { return in_d1 ? p : p; };  // d1 top keeps 0..n-1; d2 bottom keeps n..2n-1
    for (int p = 0; p < n; ++p) {
        if (match[p] != -1) continue;
        auto [q, q_in_d1] = traverse(p, true);
        int qi = index(q, q_in_d1);
        match[p] = qi;
        match[qi] = p;
    }
    for (int p = n; p < 2 * n; ++p) {
        if (match[p] != -1) continue;
        auto [q, q_in_d1] = traverse(p, false);
        int qi = index(q, q_in_d1);
        match[p] = qi;
        match[qi] = p;
    }
    // Count closed middle loops via union-find on the glued picture:
    // nodes 0..n-1 = d1 top, n..2n-1 = middle, 2n..3n-1 = d2 bottom.
    std::vector<int> parent(3 * n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto join = [&](int x, int y) { parent[find(x)] = find(y); };
    for (int p = 0; p < 2 * n; ++p) {
        if (p < d1.match[p]) join(p, d1.match[p]);                    // d1 node ids coincide
        if (p < d2.match[p]) join(n + p, n + d2.match[p]);            // d2 shifted by n
    }
    std::vector<bool> touches_exterior(3 * n, false);
    for (int p = 0; p < n; ++p) touches_exterior[find(p)] = true;
    for (int p = 2 * n; p < 3 * n; ++p) touches_exterior[find(p)] = true;
    int loops = 0;
    std::vector<bool> counted(3 * n, false);
    for (int s = n; s < 2 * n; ++s) {
        int r = find(s);
        if (!touches_exterior[r] && !counted[r]) {
            counted[r] = true;
            ++loops;
        }
    }
    Rational scalar = 1;
    for (int i = 0; i < loops; ++i) scalar *= m;
    return {BrauerDiagram(n, std::move(match)), scalar};
}

/// Element of the Brauer algebra Br_n(m).
using BrauerElem = std::map<BrauerDiagram, Rational>;

inline BrauerElem br_scaled(const BrauerElem& x, const Rational& k) {
    BrauerElem out;
    if (k == 0) return out;
    for (const auto& [d, c] : x) out[d] = c * k;
    return out;
}
inline BrauerElem br_add(const BrauerElem& x, const BrauerElem& y) {
    BrauerElem out = x;
    for (const auto& [d, c] : y) {
        auto it = out.find(d);
        if (it == out.end())
            out[d] = c;
        else {
            it->second += c;
            if (it->second == 0) out.erase(it);
        }
    }
    return out;
}
inline BrauerElem br_sub(const BrauerElem& x, const BrauerElem& y) {
    return br_add(x, br_scaled(y, -1));
}
inline BrauerElem br_mul(const BrauerElem& x, const BrauerElem& y, const Rational& m) {
    BrauerElem out;
    for (const auto& [d1, c1] : x)
        for (const auto& [d2, c2] : y) {
            auto [d, s] = brauer_mul(d1, d2, m);
            Rational c = c1 * c2 * s;
            auto it = out.find(d);
            if (it == out.end()) {
                if (c != 0) out[d] = c;
            } else {
                it->second += c;
                if (it->second == 0) out.erase(it);
            }
        }
    return out;
}
inline bool br_is_zero(const BrauerElem& x) { return x.empty(); }

// ---------------------------------------------------------------------------
// Matrix models
// ---------------------------------------------------------------------------

/// Matrix model of V_n: images of the Coxeter generators and of t_12.
struct VogelRep {
    int n = 0;               ///< number of strands
    std::size_t dim = 0;
    std::vector<QMat> coxeter;  ///< coxeter[i] = image of (i+1, i+2), i = 0..n-2
    QMat t12;

    QMat perm_matrix(const detail_vogel::Perm& p) const {
        QMat m = QMat::identity(dim);
        for (int j : detail_vogel::adjacent_word(p)) m = m * coxeter[std::size_t(j)];
        return m;
    }
    /// t_{ij} (0-based i < j) by conjugation with a canonical permutation.
    QMat t(int i, int j) const {
        detail_vogel::Perm w = detail_vogel::perm_id(n);
        // build w with w(0) = i, w(1) = j
        std::swap(w[0], w[i]);
        auto pos = std::find(w.begin(), w.end(), j);
        std::swap(w[1], *pos);
        QMat W = perm_matrix(w);
        return W * t12 * perm_matrix(detail_vogel::perm_inv(w));
    }
};

/// Per-family outcome of the relation checks on a matrix model.
struct VogelRelationsReport {
    bool coxeter_ok = false;       ///< involutions + braid + far commutation
    bool t_well_defined = false;   ///< w t12 w^{-1} independent of w with w({1,2}) = {i,j}
    bool absorption = false;       ///< t_ij (i,j) = (i,j) t_ij = t_ij
    bool quadratic = false;        ///< t^2 - (α+β)t + (αβ/2)(1+(i,j)) = 0
    bool infinitesimal = false;    ///< [t_ij, t_ik + t_kj] = 0 and disjoint commutation
    bool cubic = false;            ///< t(t-α)(t-β) = 0

    bool ok() const {
        return coxeter_ok && t_well_defined && absorption && quadratic && infinitesimal && cubic;
    }
};

inline VogelRelationsReport verify_vogel_relations(const VogelRep& rep, const Rational& alpha,
                                                   const Rational& beta) {
    using detail_vogel::Perm;
    const std::size_t d = rep.dim;
    const QMat I = QMat::identity(d);
    VogelRelationsReport out;

    out.coxeter_ok = true;
    for (int i = 0; i + 1 < rep.n; ++i) {
        if (rep.coxeter[i] * rep.coxeter[i] != I) out.coxeter_ok = false;
        if (i + 2 < rep.n) {
            const QMat &a = rep.coxeter[i], &b = rep.coxeter[i + 1];
            if (a * b * a != b * a * b) out.coxeter_ok = false;
        }
        for (int j = i + 2; j + 1 < rep.n; ++j)
            if (rep.coxeter[i] * rep.coxeter[j] != rep.coxeter[j] * rep.coxeter[i])
                out.coxeter_ok = false;
    }

    out.t_well_defined = true;
    std::map<std::pair<int, int>, QMat> t;
    for (int i = 0; i < rep.n; ++i)
        for (int j = i + 1; j < rep.n; ++j) {
            QMat ref = rep.t(i, j);
            t[{i, j}] = ref;
            for (const Perm& w : detail_vogel::all_perms(rep.n)) {
                if (!((w[0] == i && w[1] == j) || (w[0] == j && w[1] == i))) continue;
                QMat cand =
                    rep.perm_matrix(w) * rep.t12 * rep.perm_matrix(detail_vogel::perm_inv(w));
                if (cand != ref) out.t_well_defined = false;
            }
        }

    out.absorption = out.quadratic = out.cubic = true;
    for (const auto& [ij, tij] : t) {
        QMat P = rep.perm_matrix(detail_vogel::transposition(rep.n, ij.first, ij.second));
        if (tij * P != tij || P * tij != tij) out.absorption = false;
        QMat q = tij * tij - (alpha + beta) * tij + (alpha * beta / 2) * (I + P);
        if (!q.is_zero()) out.quadratic = false;
        QMat cub = tij * (tij - alpha * I) * (tij - beta * I);
        if (!cub.is_zero()) out.cubic = false;
    }

    out.infinitesimal = true;
    for (int i = 0; i < rep.n; ++i)
        for (int j = i + 1; j < rep.n; ++j)
            for (int k = 0; k < rep.n; ++k) {
                if (k == i || k == j) continue;
                QMat tik = t[{std::min(i, k), std::max(i, k)}];
                QMat tkj = t[{std::min(j, k), std::max(j, k)}];
                QMat s = tik + tkj;
                if (t[{i, j}] * s != s * t[{i, j}]) out.infinitesimal = false;
            }
    for (const auto& [ij, tij] : t)
        for (const auto& [rs, trs] : t) {
            if (ij.first == rs.first || ij.first == rs.second || ij.second == rs.first ||
                ij.second == rs.second)
                continue;
            if (tij * trs != trs * tij) out.infinitesimal = false;
        }
    return out;
}

/// Eigenvalue multiplicity of a rational matrix (kernel dimension of t - λ).
inline std::size_t eigen_multiplicity(const QMat& t, const Rational& lambda) {
    return t.rows - qmat_rank(t - lambda * QMat::identity(t.rows));
}

namespace detail_vogel {

inline QMat qm(std::size_t r, std::size_t c, std::vector<Rational> vals) {
    QMat m(r, c);
    m.e = std::move(vals);
    return m;
}

/// [3,1]-representation matrices of S_4.
inline std::vector<QMat> s4_rep31() {
    return {qm(3, 3, {-1, 0, 0, 1, 1, 0, 0, 0, 1}), qm(3, 3, {1, 1, 0, 0, -1, 0, 0, 1, 1}),
            qm(3, 3, {1, 0, 0, 0, 1, 1, 0, 0, -1})};
}
/// [2,2]-representation matrices of S_4.
inline std::vector<QMat> s4_rep22() {
    return {qm(2, 2, {-1, 0, 0, 1}),
            qm(2, 2, {Rational(1, 2), Rational(3, 2), Rational(1, 2), Rational(-1, 2)}),
            qm(2, 2, {-1, 0, 0, 1})};
}
/// Standard 2-dimensional representation of S_3 (basis e1-e2, e2-e3).
inline std::vector<QMat> s3_rep21() {
    return {qm(2, 2, {-1, 1, 0, 1}), qm(2, 2, {1, 0, 1, -1})};
}

}  // namespace detail_vogel

/**
 * @brief The 3-dimensional model of V_3 with d = (α+β)/3 and the free pair
 *        (b, c) subject to bc = 2d² − αβ fixed as b = 2d² − αβ, c = 1.
 */
inline VogelRep vogel_v3_3dim(const Rational& alpha, const Rational& beta) {
    using detail_vogel::qm;
    Rational d = (alpha + beta) / 3;
    Rational b = 2 * d * d - alpha * beta, c = 1;
    VogelRep rep;
    rep.n = 3;
    rep.dim = 3;
    rep.coxeter = {qm(3, 3, {-1, 0, 0, 0, 1, 0, 0, 0, 1}),
                   qm(3, 3, {Rational(1, 2), Rational(1, 2), 0, Rational(3, 2), Rational(-1, 2), 0,
                             0, 0, 1})};
    rep.t12 = qm(3, 3, {0, 0, 0, 0, 2 * d, b, 0, c, d});
    return rep;
}

/// Expansion of an S_n representation: t_ij = u (1 + (i,j)), u in {α/2, β/2}.
inline VogelRep vogel_sn_expand(int n, std::vector<QMat> coxeter, const Rational& u) {
    VogelRep rep;
    rep.n = n;
    rep.dim = coxeter.front().rows;
    rep.coxeter = std::move(coxeter);
    rep.t12 = u * (QMat::identity(rep.dim) + rep.coxeter[0]);
    return rep;
}

/**
 * @brief The 6-dimensional model of V_4: s_i = diag(A_i, -A_i) on
 *        [3,1] + [2,1,1], t_12 = (α/2)(s_1 + 1) + p_12 with p_12 of rank 1
 *        and nontrivial eigenvalue β − α.
 *
 * Only five rows of p_12 are determined by the eigenvector data; the first
 * row is all-zero (the five given rows occupy rows 2-6).  This makes
 * trace p_12 = β − α and every defining relation hold, so that reading is
 * adopted here.
 */
inline VogelRep vogel_v4_6dim(const Rational& alpha, const Rational& beta) {
    using detail_vogel::qm;
    auto A = detail_vogel::s4_rep31();
    VogelRep rep;
    rep.n = 4;
    rep.dim = 6;
    for (const QMat& Ai : A) rep.coxeter.push_back(qmat_diag_blocks({Ai, (-1) * Ai}));
    QMat p12(6, 6);
    const Rational al = alpha, be = beta;
    p12.at(1, 2) = (2 * al - be) / 4;
    p12.at(1, 3) = be * (be - 2 * al) / 16;
    p12.at(2, 2) = (be - 2 * al) / 2;
    p12.at(2, 3) = be * (2 * al - be) / 8;
    p12.at(3, 2) = -2;
    p12.at(3, 3) = be / 2;
    p12.at(4, 2) = 1;
    p12.at(4, 3) = -be / 4;
    rep.t12 = (al / 2) * (rep.coxeter[0] + QMat::identity(6)) + p12;
    return rep;
}

/**
 * @brief The 8-dimensional model of V_4: s_i = diag(A_i, B_i, -A_i) and the
 *        explicit t_12 depending on parameters (a, c) with α + β = 8c and
 *        αβ = 12c² − 4a; here (a, c) are recovered from (α, β).
 */
inline VogelRep vogel_v4_8dim(const Rational& alpha, const Rational& beta) {
    auto A = detail_vogel::s4_rep31();
    auto B = detail_vogel::s4_rep22();
    const Rational c = (alpha + beta) / 8;
    const Rational a = 3 * c * c - alpha * beta / 4;
    VogelRep rep;
    rep.n = 4;
    rep.dim = 8;
    for (std::size_t i = 0; i < 3; ++i)
        rep.coxeter.push_back(qmat_diag_blocks({A[i], B[i], (-1) * A[i]}));
    QMat t(8, 8);
    t.at(1, 0) = 2 * c;
    t.at(1, 1) = 4 * c;
    t.at(1, 2) = c;
    t.at(1, 4) = 2 * c * c + 2 * a;
    t.at(1, 5) = a;
    t.at(2, 2) = 2 * c;
    t.at(2, 5) = -2 * a;
    t.at(4, 0) = 1;
    t.at(4, 1) = 2;
    t.at(4, 2) = 1;
    t.at(4, 4) = 4 * c;
    t.at(5, 2) = -2;
    t.at(5, 5) = 6 * c;
    t.at(6, 2) = 1;
    t.at(6, 5) = -3 * c;
    rep.t12 = t;
    return rep;
}

// ---------------------------------------------------------------------------
// The scalar model of V_2
// ---------------------------------------------------------------------------

/// V_2 ≅ k³ with t_12 -> (0, α, β) and (1,2) -> (-1, 1, 1).
struct V2Report {
    bool relations = false;    ///< absorption, quadratic, cubic componentwise
    bool basis_1_t_t2 = false; ///< {1, t, t²} independent (Vandermonde nonzero)

    bool ok() const { return relations && basis_1_t_t2; }
};

inline V2Report verify_v2(const Rational& alpha, const Rational& beta) {
    const Rational t[3] = {0, alpha, beta};
    const Rational s[3] = {-1, 1, 1};
    V2Report rep;
    rep.relations = true;
    for (int i = 0; i < 3; ++i) {
        if (s[i] * s[i] != 1) rep.relations = false;
        if (t[i] * s[i] != t[i] || s[i] * t[i] != t[i]) rep.relations = false;
        if (t[i] * t[i] - (alpha + beta) * t[i] + (alpha * beta / 2) * (1 + s[i]) != 0)
            rep.relations = false;
        if (t[i] * (t[i] - alpha) * (t[i] - beta) != 0) rep.relations = false;
    }
    // Vandermonde determinant of {0, α, β}
    Rational det = (alpha - 0) * (beta - 0) * (beta - alpha);
    rep.basis_1_t_t2 = (det != 0);
    return rep;
}

// ---------------------------------------------------------------------------
// Factorization criteria for phi_{u,v} and psi_{u,v}
// ---------------------------------------------------------------------------

enum class MorphKind { phi_uv, psi_uv };

/**
 * @brief Does the candidate morphism factor through V_3?
 *
 * phi_{u,v}: t_ij -> u.1 + v.(i,j) into the group algebra QS_3; factors iff
 * u = v ∈ {α/2, β/2}.  psi_{u,v}: t_ij -> u.1 + v.((i,j) − p_ij) into the
 * Brauer algebra Br_3(m); factors iff u = v ∈ {α/2, β/2} and
 * u(m − 4) = −(α + β).  The returned boolean is computed by checking the
 * defining relations on the images, not by evaluating the criterion.
 */
inline bool morphism_factor_check(MorphKind kind, const Rational& u, const Rational& v,
                                  const Rational& m, const Rational& alpha,
                                  const Rational& beta) {
    using detail_vogel::Perm;
    const int n = 3;
    const Rational mm = (kind == MorphKind::phi_uv) ? Rational(0) : m;

    auto diag_perm = [&](int i, int j) {
        return BrauerDiagram::from_perm(detail_vogel::transposition(n, i, j));
    };
    auto one = [&] {
        BrauerElem e;
        e[BrauerDiagram::identity(n)] = 1;
        return e;
    };
    auto timg = [&](int i, int j) {
        BrauerElem e = br_scaled(one(), u);
        BrauerElem p;
        p[diag_perm(i, j)] = v;
        e = br_add(e, p);
        if (kind == MorphKind::psi_uv) {
            BrauerElem cup;
            cup[BrauerDiagram::p_ij(n, i, j)] = -v;
            e = br_add(e, cup);
        }
        return e;
    };
    auto simg = [&](int i, int j) {
        BrauerElem e;
        e[diag_perm(i, j)] = 1;
        return e;
    };
    auto mul = [&](const BrauerElem& x, const BrauerElem& y) { return br_mul(x, y, mm); };

    bool ok = true;
    const std::pair<int, int> pairs[] = {{0, 1}, {0, 2}, {1, 2}};
    for (auto [i, j] : pairs) {
        BrauerElem t = timg(i, j), s = simg(i, j);
        if (!br_is_zero(br_sub(mul(t, s), t))) ok = false;
        if (!br_is_zero(br_sub(mul(s, t), t))) ok = false;
        BrauerElem q = br_sub(mul(t, t), br_scaled(t, alpha + beta));
        q = br_add(q, br_scaled(br_add(one(), s), alpha * beta / 2));
        if (!br_is_zero(q)) ok = false;
    }
    // infinitesimal braid relations [t_ij, t_ik + t_kj] = 0
    for (auto [i, j] : pairs)
        for (int k = 0; k < n; ++k) {
            if (k == i || k == j) continue;
            BrauerElem s = br_add(timg(std::min(i, k), std::max(i, k)),
                                  timg(std::min(j, k), std::max(j, k)));
            BrauerElem t = timg(i, j);
            if (!br_is_zero(br_sub(mul(t, s), mul(s, t)))) ok = false;
        }
    return ok;
}

// ---------------------------------------------------------------------------
// The B(3) spanning verification
// ---------------------------------------------------------------------------

/// Report of the rank-20 faithfulness/closure check for the 20-word list.
struct B3Report {
    bool generic = false;          ///< genericity preconditions on (α, β)
    std::size_t rank = 0;          ///< rank of the 20 evaluated words (expect 20)
    bool closure = false;          ///< b x_i stays in the span for all b, i
    bool identity_xyx = false;     ///< x1 x2 x1 = x1 x3 x1
    bool identity_comm = false;    ///< [x1, x2] z3 = x3 x2 - x1 x3

    bool ok() const { return generic && rank == 20 && closure && identity_xyx && identity_comm; }
};

namespace detail_vogel {

/// The faithful 10-dimensional direct-sum model of V_3 (blocks of dims
/// 1,1,1,2,2,3; total matrix-algebra dimension 3 + 4 + 4 + 9 = 20).
struct V3Model {
    std::vector<VogelRep> blocks;

    static V3Model build(const Rational& alpha, const Rational& beta) {
        V3Model m;
        // three 1-dim: (s = 1, t = α), (s = 1, t = β), (s = sign, t = 0)
        auto scalar_rep = [&](const Rational& sval, const Rational& tval) {
            VogelRep r;
            r.n = 3;
            r.dim = 1;
            QMat s(1, 1), t(1, 1);
            s.at(0, 0) = sval;
            t.at(0, 0) = tval;
            r.coxeter = {s, s};
            r.t12 = t;
            return r;
        };
        m.blocks.push_back(scalar_rep(1, alpha));
        m.blocks.push_back(scalar_rep(1, beta));
        m.blocks.push_back(scalar_rep(-1, 0));
        // two 2-dim: standard representation with t_ij = (α/2)(1+(ij)), (β/2)(1+(ij))
        m.blocks.push_back(vogel_sn_expand(3, s3_rep21(), alpha / 2));
        m.blocks.push_back(vogel_sn_expand(3, s3_rep21(), beta / 2));
        // one 3-dim
        m.blocks.push_back(vogel_v3_3dim(alpha, beta));
        return m;
    }

    /// Flatten an element given per-block to the 20 matrix coordinates.
    static std::vector<Rational> flatten(const std::vector<QMat>& elem) {
        std::vector<Rational> out;
        for (const QMat& b : elem) out.insert(out.end(), b.e.begin(), b.e.end());
        return out;
    }

    std::vector<QMat> x(int i) const {  // x_i = t_{jk}, {i,j,k} = {1,2,3} (1-based)
        int j = -1, k = -1;
        for (int q = 0; q < 3; ++q)
            if (q != i - 1) (j < 0 ? j : k) = q;
        std::vector<QMat> out;
        for (const auto& b : blocks) out.push_back(b.t(j, k));
        return out;
    }
    std::vector<QMat> z(int i) const {  // z_i = (j,k)
        int j = -1, k = -1;
        for (int q = 0; q < 3; ++q)
            if (q != i - 1) (j < 0 ? j : k) = q;
        std::vector<QMat> out;
        for (const auto& b : blocks) out.push_back(b.perm_matrix(transposition(3, j, k)));
        return out;
    }
    std::vector<QMat> unit() const {
        std::vector<QMat> out;
        for (const auto& b : blocks) out.push_back(QMat::identity(b.dim));
        return out;
    }
    static std::vector<QMat> mul(const std::vector<QMat>& a, const std::vector<QMat>& b) {
        std::vector<QMat> out;
        for (std::size_t i = 0; i < a.size(); ++i) out.push_back(a[i] * b[i]);
        return out;
    }
    static std::vector<QMat> sub(const std::vector<QMat>& a, const std::vector<QMat>& b) {
        std::vector<QMat> out;
        for (std::size_t i = 0; i < a.size(); ++i) out.push_back(a[i] - b[i]);
        return out;
    }
};

}  // namespace detail_vogel

inline B3Report b3_span_check(const Rational& alpha, const Rational& beta) {
    using detail_vogel::V3Model;
    B3Report rep;
    rep.generic = alpha != 0 && beta != 0 && alpha != beta && alpha + beta != 0 &&
                  alpha * beta / 2 != ((alpha + beta) / 3) * ((alpha + beta) / 3);
    if (!rep.generic) return rep;

    V3Model model = V3Model::build(alpha, beta);
    auto X1 = model.x(1), X2 = model.x(2), X3 = model.x(3);
    auto Z1 = model.z(1), Z2 = model.z(2), Z3 = model.z(3);
    auto M = V3Model::mul;

    std::vector<std::vector<QMat>> words = {
        model.unit(), X1,         X2,         X3,         Z1,
        Z2,           Z3,         M(X1, X2),  M(X1, X3),  M(X1, Z2),
        M(X1, Z3),    M(X2, X1),  M(X2, X3),  M(X2, Z1),  M(X2, Z3),
        M(X3, Z1),    M(X3, Z2),  M(Z1, Z2),  M(Z1, Z3),  M(M(X1, X2), X3)};

    QMat basis(20, 20);
    for (std::size_t r = 0; r < 20; ++r) {
        auto flat = V3Model::flatten(words[r]);
        for (std::size_t c = 0; c < 20; ++c) basis.at(r, c) = flat[c];
    }
    rep.rank = qmat_rank(basis);

    rep.closure = true;
    for (const auto& b : words)
        for (const auto* xi : {&X1, &X2, &X3}) {
            auto flat = V3Model::flatten(M(b, *xi));
            QMat aug(21, 20);
            aug.e.assign(basis.e.begin(), basis.e.end());
            aug.e.insert(aug.e.end(), flat.begin(), flat.end());
            if (qmat_rank(aug) != rep.rank) rep.closure = false;
        }

    auto diff1 = V3Model::sub(M(M(X1, X2), X1), M(M(X1, X3), X1));
    rep.identity_xyx =
        std::all_of(diff1.begin(), diff1.end(), [](const QMat& q) { return q.is_zero(); });
    auto lhs = M(V3Model::sub(M(X1, X2), M(X2, X1)), Z3);
    auto rhs = V3Model::sub(M(X3, X2), M(X1, X3));
    auto diff2 = V3Model::sub(lhs, rhs);
    rep.identity_comm =
        std::all_of(diff2.begin(), diff2.end(), [](const QMat& q) { return q.is_zero(); });
    return rep;
}

// ---------------------------------------------------------------------------
// The transposition-basis representation family
// ---------------------------------------------------------------------------

/// Report for the C(n,2)-dimensional model on the transposition basis.
struct PermRepReport {
    bool equivariance = false;       ///< w t_s w^{-1} = t_{wsw^{-1}}
    bool infinitesimal = false;      ///< 4T + disjoint commutation
    bool absorption = false;         ///< s t_s = t_s (holds iff x = 1)
    bool cubic = false;              ///< t (t - λ(m+1)) (t - 2λ) = 0
    bool multiplicities = false;     ///< kernel dims (1, (n-1)(n-2)/2, n-2)
    bool vogel_quadratic = false;    ///< with α = 2λ, β = λ(m+1)

    bool ok() const {
        return equivariance && infinitesimal && absorption && cubic && multiplicities &&
               vogel_quadratic;
    }
};

inline PermRepReport verify_perm_rep(int n, const Rational& lambda, const Rational& m,
                                     const Rational& x) {
    using detail_vogel::Perm;
    if (n < 3) throw std::invalid_argument("verify_perm_rep: n >= 3");
    // basis = transpositions (i,j), i < j
    std::vector<std::pair<int, int>> basis;
    std::map<std::pair<int, int>, std::size_t> idx;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            idx[{i, j}] = basis.size();
            basis.emplace_back(i, j);
        }
    const std::size_t N = basis.size();

    auto conj_pair = [&](const Perm& w, std::pair<int, int> s) {
        int a = w[s.first], b = w[s.second];
        return std::make_pair(std::min(a, b), std::max(a, b));
    };
    auto perm_mat = [&](const Perm& w) {
        QMat P(N, N);
        for (std::size_t c = 0; c < N; ++c) P.at(idx[conj_pair(w, basis[c])], c) = 1;
        return P;
    };
    auto t_mat = [&](std::pair<int, int> s) {
        QMat T(N, N);
        Perm sw = detail_vogel::transposition(n, s.first, s.second);
        for (std::size_t c = 0; c < N; ++c) {
            auto u = basis[c];
            if (u == s) {
                T.at(c, c) = lambda * (m + x);
                continue;
            }
            bool commute = (u.first != s.first && u.first != s.second && u.second != s.first &&
                            u.second != s.second);
            T.at(c, c) += x * lambda;
            T.at(idx[conj_pair(sw, u)], c) += lambda;
            if (!commute) T.at(idx[s], c) -= lambda;
        }
        return T;
    };

    std::map<std::pair<int, int>, QMat> t;
    for (auto s : basis) t[s] = t_mat(s);

    PermRepReport rep;
    rep.equivariance = true;
    for (const Perm& w : detail_vogel::all_perms(n)) {
        QMat P = perm_mat(w), Pi = perm_mat(detail_vogel::perm_inv(w));
        for (auto s : basis)
            if (P * t[s] * Pi != t[conj_pair(w, s)]) rep.equivariance = false;
    }
    rep.infinitesimal = true;
    for (auto s : basis)
        for (int k = 0; k < n; ++k) {
            if (k == s.first || k == s.second) continue;
            QMat sum = t[{std::min(s.first, k), std::max(s.first, k)}] +
                       t[{std::min(s.second, k), std::max(s.second, k)}];
            if (t[s] * sum != sum * t[s]) rep.infinitesimal = false;
        }
    for (auto s : basis)
        for (auto u : basis) {
            if (s.first == u.first || s.first == u.second || s.second == u.first ||
                s.second == u.second)
                continue;
            if (t[s] * t[u] != t[u] * t[s]) rep.infinitesimal = false;
        }
    rep.absorption = true;
    for (auto s : basis) {
        QMat P = perm_mat(detail_vogel::transposition(n, s.first, s.second));
        if (P * t[s] != t[s] || t[s] * P != t[s]) rep.absorption = false;
    }
    const QMat I = QMat::identity(N);
    const QMat& t12 = t[{0, 1}];
    const Rational ev1 = lambda * (m + 1), ev2 = 2 * lambda;
    rep.cubic = (t12 * (t12 - ev1 * I) * (t12 - ev2 * I)).is_zero();
    rep.multiplicities = eigen_multiplicity(t12, ev1) == 1 &&
                         eigen_multiplicity(t12, ev2) == std::size_t((n - 1) * (n - 2) / 2) &&
                         eigen_multiplicity(t12, 0) == std::size_t(n - 2);
    const Rational alpha = 2 * lambda, beta = lambda * (m + 1);
    rep.vogel_quadratic = true;
    for (auto s : basis) {
        QMat P = perm_mat(detail_vogel::transposition(n, s.first, s.second));
        QMat q = t[s] * t[s] - (alpha + beta) * t[s] + (alpha * beta / 2) * (I + P);
        if (!q.is_zero()) rep.vogel_quadratic = false;
    }
    return rep;
}

/// Seeded generic rational (α, β) pairs satisfying the genericity conditions.
inline std::vector<std::pair<Rational, Rational>> generic_alpha_beta_pairs(unsigned seed,
                                                                           std::size_t count) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
    std::vector<std::pair<Rational, Rational>> out;
    while (out.size() < count) {
        Rational a(num(rng), den(rng)), b(num(rng), den(rng));
        if (a == 0 || b == 0 || a == b || a + b == 0) continue;
        if (a * b / 2 == ((a + b) / 3) * ((a + b) / 3)) continue;
        out.emplace_back(a, b);
    }
    return out;
}

}  // namespace cubiq
