/**
 * @file ring.hpp
 * @brief Exact arithmetic in Laurent-polynomial rings over the integers,
 *        their fraction fields, and fraction-free linear algebra.
 *
 * The universal coefficient ring of the whole workbench is
 * R = Z[a,a^-1,b,b^-1,c,c^-1].  Elements are stored as finite maps from
 * exponent vectors (one signed integer per variable) to nonzero
 * arbitrary-precision integer coefficients, so all computations are exact.
 *
 * Key quantities living here:
 *   - the elementary symmetric sums u = a+b+c, v = ab+bc+ac, w = abc
 *   - the discriminant-like element delta = (a-b)(a-c)(a^2+bc) that controls
 *     the ideal-membership test for the cubic quotient
 *
 * Linear algebra is done by fraction-free Bareiss elimination (Gauss-Jordan
 * variant), so intermediate entries remain polynomial; solutions come out as
 * a polynomial matrix over a single polynomial denominator.
 */
#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace cubiq {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Exponent vector: one signed exponent per variable, lexicographic order.
using Expo = std::vector<int>;

/**
 * @brief Exact element of Z[a^{+-1}, b^{+-1}, c^{+-1}].
 *
 * The variable set is fixed to {a, b, c}.  Each monomial's exponent triple
 * (e0, e1, e2) is packed into a single signed 64-bit key with 21 bits per
 * field (offset-binary), so that the natural integer order on keys coincides
 * with lexicographic order on exponent vectors.  Invariant: no stored
 * coefficient is zero; two polynomials are equal iff their term maps are.
 */
class LaurentPoly {
public:
    /// Packed exponent triple; integer order == lex order on (e0, e1, e2).
    using Key = std::int64_t;
    static constexpr int kFieldBits = 21;
    static constexpr Key kOffset = Key(1) << (kFieldBits - 1);
    static constexpr Key kFieldMask = (Key(1) << kFieldBits) - 1;
    /// Key of the constant monomial (all exponents zero).
    static constexpr Key kZeroKey =
        (kOffset << (2 * kFieldBits)) | (kOffset << kFieldBits) | kOffset;

    static Key encode(const Expo& e) {
        if (e.size() != 3) throw std::invalid_argument("LaurentPoly: exponent arity");
        Key k = 0;
        for (int i = 0; i < 3; ++i) {
            if (e[i] <= -kOffset || e[i] >= kOffset)
                throw std::overflow_error("LaurentPoly: exponent out of range");
            k = (k << kFieldBits) | (Key(e[i]) + kOffset);
        }
        return k;
    }
    static Expo decode(Key k) {
        Expo e(3);
        for (int i = 2; i >= 0; --i) {
            e[i] = int((k & kFieldMask) - kOffset);
            k >>= kFieldBits;
        }
        return e;
    }

    std::map<Key, Int> terms;

    LaurentPoly() = default;
    explicit LaurentPoly(const std::vector<std::string>& vs) {
        if (vs != var_names()) throw std::invalid_argument("LaurentPoly: variables are fixed to a,b,c");
    }

    static const std::vector<std::string>& var_names() {
        static const std::vector<std::string> names{"a", "b", "c"};
        return names;
    }
    std::size_t nvars() const { return 3; }

    static LaurentPoly constant(const Int& c) {
        LaurentPoly p;
        if (c != 0) p.terms[kZeroKey] = c;
        return p;
    }
    /// Monomial coeff * a^e0 b^e1 c^e2.
    static LaurentPoly monomial(const Int& coeff, const Expo& e) {
        LaurentPoly p;
        if (coeff != 0) p.terms[encode(e)] = coeff;
        return p;
    }
    /// Single variable by index.
    static LaurentPoly var(std::size_t i, int power = 1) {
        Expo e(3, 0);
        e.at(i) = power;
        return monomial(1, e);
    }

    bool is_zero() const { return terms.empty(); }

    bool operator==(const LaurentPoly& o) const { return terms == o.terms; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }
    /// Total order for use as a map key (canonical by the term map).
    bool operator<(const LaurentPoly& o) const { return terms < o.terms; }

    void add_term(Key k, const Int& c) {
        if (c == 0) return;
        auto it = terms.find(k);
        if (it == terms.end()) {
            terms.emplace(k, c);
        } else {
            it->second += c;
            if (it->second == 0) terms.erase(it);
        }
    }
    void add_term(const Expo& e, const Int& c) { add_term(encode(e), c); }

    LaurentPoly operator+(const LaurentPoly& o) const {
        LaurentPoly r(*this);
        for (const auto& [k, c] : o.terms) r.add_term(k, c);
        return r;
    }
    LaurentPoly operator-() const {
        LaurentPoly r;
        for (const auto& [k, c] : terms) r.terms[k] = -c;
        return r;
    }
    LaurentPoly operator-(const LaurentPoly& o) const {
        LaurentPoly r(*this);
        for (const auto& [k, c] : o.terms) {
            auto it = r.terms.find(k);
            if (it == r.terms.end()) {
                r.terms.emplace(k, -c);
            } else {
                it->second -= c;
                if (it->second == 0) r.terms.erase(it);
            }
        }
        return r;
    }
    LaurentPoly operator*(const LaurentPoly& o) const {
        LaurentPoly r;
        // Product keys: field-wise exponent sums = key sum minus the zero key.
        for (const auto& [k1, c1] : terms)
            for (const auto& [k2, c2] : o.terms) r.add_term(k1 + k2 - kZeroKey, c1 * c2);
        return r;
    }
    LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
    LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    LaurentPoly scaled(const Int& k) const {
        LaurentPoly r;
        if (k == 0) return r;
        for (const auto& [e, c] : terms) r.terms[e] = c * k;
        return r;
    }

    /// Substitute each variable by its inverse (exponent negation); the word
    /// part of the coefficient symmetries.
    LaurentPoly invert_vars() const {
        LaurentPoly r;
        for (const auto& [k, c] : terms) {
            Expo ne = decode(k);
            for (auto& x : ne) x = -x;
            r.terms[encode(ne)] = c;
        }
        return r;
    }

    /// True iff the polynomial is a single term +-x^e (a unit of R).
    bool is_unit_monomial() const {
        return terms.size() == 1 &&
               (terms.begin()->second == 1 || terms.begin()->second == -1);
    }

    /// Exact rational evaluation; throws if a variable with a negative
    /// exponent is assigned zero.
    Rational specialize(const std::vector<Rational>& values) const {
        if (values.size() != 3) throw std::invalid_argument("specialize: arity");
        Rational out = 0;
        for (const auto& [key, c] : terms) {
            Expo e = decode(key);
            Rational t = c;
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                if (values[i] == 0) throw std::domain_error("specialize: zero at negative power");
                Rational base = values[i];
                int k = e[i];
                if (k < 0) { base = Rational(1) / base; k = -k; }
                for (int j = 0; j < k; ++j) t *= base;
            }
            out += t;
        }
        return out;
    }

    /// Canonical textual form, e.g. "3*a^2*b^-1*c - 1".
    std::string str() const {
        if (terms.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        // Print in reverse-lex so constants come last, leading terms first.
        for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
            const Int& c = it->second;
            if (first) {
                if (c < 0) os << "-";
                first = false;
            } else {
                os << (c < 0 ? " - " : " + ");
            }
            Int ac = abs(c);
            bool printed = false;
            Expo ev = decode(it->first);
            bool allzero = it->first == kZeroKey;
            if (ac != 1 || allzero) { os << ac.str(); printed = true; }
            for (std::size_t i = 0; i < ev.size(); ++i) {
                int e = ev[i];
                if (e == 0) continue;
                if (printed) os << "*";
                os << var_names()[i];
                if (e != 1) os << "^" << e;
                printed = true;
            }
        }
        return os.str();
    }
};

inline LaurentPoly operator*(const Int& k, const LaurentPoly& p) { return p.scaled(k); }

// ---------------------------------------------------------------------------
// Named ring elements over {a, b, c}
// ---------------------------------------------------------------------------

inline LaurentPoly LP_a() { return LaurentPoly::var(0); }
inline LaurentPoly LP_b() { return LaurentPoly::var(1); }
inline LaurentPoly LP_c() { return LaurentPoly::var(2); }
inline LaurentPoly LP_one() { return LaurentPoly::constant(1); }
inline LaurentPoly LP_zero() { return LaurentPoly(); }
/// u = a + b + c (first elementary symmetric sum)
inline LaurentPoly LP_u() { return LP_a() + LP_b() + LP_c(); }
/// v = ab + bc + ac
inline LaurentPoly LP_v() { return LP_a() * LP_b() + LP_b() * LP_c() + LP_a() * LP_c(); }
/// w = abc
inline LaurentPoly LP_w() { return LP_a() * LP_b() * LP_c(); }
/// delta = (a-b)(a-c)(a^2+bc)
inline LaurentPoly LP_delta() {
    return (LP_a() - LP_b()) * (LP_a() - LP_c()) * (LP_a() * LP_a() + LP_b() * LP_c());
}
/// Monomial a^i b^j c^k.
inline LaurentPoly LP_mono(int i, int j, int k, const Int& coeff = 1) {
    return LaurentPoly::monomial(coeff, Expo{i, j, k});
}

// ---------------------------------------------------------------------------
// Exact division
// ---------------------------------------------------------------------------

/**
 * @brief Exact division in the Laurent ring: returns r with q*r = p if such r
 *        exists, otherwise std::nullopt.
 *
 * Implemented by shifting both operands to ordinary polynomials (clearing the
 * minimal exponent per variable) and running leading-term division in lex
 * order; over an integral domain this greedy loop succeeds exactly when q | p.
 * The candidate is re-verified by multiplication before being returned.
 */
inline std::optional<LaurentPoly> lp_divide_exact(const LaurentPoly& p, const LaurentPoly& q) {
    if (q.is_zero()) throw std::invalid_argument("lp_divide_exact: division by zero");
    if (p.is_zero()) return LaurentPoly();

    // Shift both operands so every exponent of q is nonnegative; division then
    // proceeds as for ordinary polynomials, requiring each leading-exponent
    // difference to be componentwise nonnegative.  That keeps every remainder
    // monomial in the finite box below p's leading exponent, so the loop
    // terminates.
    auto min_expo = [](const LaurentPoly& x) {
        Expo m = LaurentPoly::decode(x.terms.begin()->first);
        for (const auto& [k, c] : x.terms) {
            Expo e = LaurentPoly::decode(k);
            for (int i = 0; i < 3; ++i) m[i] = std::min(m[i], e[i]);
        }
        return m;
    };
    const LaurentPoly::Key qshift = LaurentPoly::encode(min_expo(q)) - LaurentPoly::kZeroKey;
    const LaurentPoly::Key pshift = LaurentPoly::encode(min_expo(p)) - LaurentPoly::kZeroKey;

    // The map is lex-ordered; the last element is the lex-leading term.
    const LaurentPoly::Key ltq_key = q.terms.rbegin()->first - qshift;
    const Int& ltq_coeff = q.terms.rbegin()->second;
    const Expo ltq_e = LaurentPoly::decode(ltq_key);
    std::map<LaurentPoly::Key, Int> rem;
    for (const auto& [k, c] : p.terms) rem.emplace(k - pshift, c);
    LaurentPoly quot;  // accumulated relative to the two shifts
    while (!rem.empty()) {
        const auto& ltr = *rem.rbegin();
        // Divide leading terms: coefficient and exponents must both divide.
        if (ltr.second % ltq_coeff != 0) return std::nullopt;
        Expo le = LaurentPoly::decode(ltr.first);
        for (int i = 0; i < 3; ++i)
            if (le[i] < ltq_e[i]) return std::nullopt;
        Int qc = ltr.second / ltq_coeff;
        LaurentPoly::Key qe = ltr.first - ltq_key + LaurentPoly::kZeroKey;
        quot.add_term(qe, qc);
        // rem -= (qc * x^qe) * (q shifted by -qmin)
        for (const auto& [k, c] : q.terms) {
            LaurentPoly::Key te = qe + (k - qshift) - LaurentPoly::kZeroKey;
            auto it = rem.find(te);
            Int nc = (it == rem.end() ? Int(0) : it->second) - qc * c;
            if (it != rem.end()) rem.erase(it);
            if (nc != 0) rem.emplace(te, nc);
        }
    }
    // Undo the shifts: (p x^-pm) = quot (q x^-qm)  =>  p/q = quot x^{pm-qm}.
    LaurentPoly result;
    for (const auto& [k, c] : quot.terms) result.terms.emplace(k + pshift - qshift, c);
    if (result * q == p) return result;
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Fraction field (unreduced pairs)
// ---------------------------------------------------------------------------

/**
 * @brief Unreduced fraction num/den of Laurent polynomials.
 *
 * Equality is tested by cross-multiplication; gcd reduction is not needed for
 * correctness because Bareiss elimination keeps denominators to single pivot
 * polynomials.  A reduce() pass attempts exact division to return to R.
 */
struct Frac {
    LaurentPoly num, den;

    Frac() : num(LP_zero()), den(LP_one()) {}
    explicit Frac(LaurentPoly n) : num(std::move(n)), den(LP_one()) {}
    Frac(LaurentPoly n, LaurentPoly d) : num(std::move(n)), den(std::move(d)) {
        if (den.is_zero()) throw std::invalid_argument("Frac: zero denominator");
    }

    bool is_zero() const { return num.is_zero(); }
    bool operator==(const Frac& o) const { return (num * o.den) == (o.num * den); }
    bool operator!=(const Frac& o) const { return !(*this == o); }

    Frac operator+(const Frac& o) const { return Frac(num * o.den + o.num * den, den * o.den); }
    Frac operator-(const Frac& o) const { return Frac(num * o.den - o.num * den, den * o.den); }
    Frac operator*(const Frac& o) const { return Frac(num * o.num, den * o.den); }
    Frac operator/(const Frac& o) const {
        if (o.num.is_zero()) throw std::invalid_argument("Frac: division by zero");
        return Frac(num * o.den, den * o.num);
    }
    Frac operator-() const { return Frac(-num, den); }

    /// If the fraction lies in R, return the polynomial value.
    std::optional<LaurentPoly> as_poly() const { return lp_divide_exact(num, den); }
};

// ---------------------------------------------------------------------------
// Matrices
// ---------------------------------------------------------------------------

/// Dense matrix over LaurentPoly with exact arithmetic.
class RingMatrix {
public:
    std::size_t rows = 0, cols = 0;
    std::vector<LaurentPoly> entries;  // row-major

    RingMatrix() = default;
    RingMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), entries(r * c, LP_zero()) {}

    static RingMatrix identity(std::size_t n) {
        RingMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = LP_one();
        return m;
    }

    LaurentPoly& at(std::size_t i, std::size_t j) { return entries[i * cols + j]; }
    const LaurentPoly& at(std::size_t i, std::size_t j) const { return entries[i * cols + j]; }

    bool operator==(const RingMatrix& o) const {
        return rows == o.rows && cols == o.cols && entries == o.entries;
    }
    bool operator!=(const RingMatrix& o) const { return !(*this == o); }

    bool is_zero() const {
        return std::all_of(entries.begin(), entries.end(),
                           [](const LaurentPoly& p) { return p.is_zero(); });
    }

    RingMatrix operator+(const RingMatrix& o) const {
        check_shape(o);
        RingMatrix r(rows, cols);
        for (std::size_t i = 0; i < entries.size(); ++i) r.entries[i] = entries[i] + o.entries[i];
        return r;
    }
    RingMatrix operator-(const RingMatrix& o) const {
        check_shape(o);
        RingMatrix r(rows, cols);
        for (std::size_t i = 0; i < entries.size(); ++i) r.entries[i] = entries[i] - o.entries[i];
        return r;
    }
    RingMatrix operator*(const RingMatrix& o) const {
        if (cols != o.rows) throw std::invalid_argument("RingMatrix: shape mismatch in product");
        RingMatrix r(rows, o.cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t k = 0; k < cols; ++k) {
                if (at(i, k).is_zero()) continue;
                for (std::size_t j = 0; j < o.cols; ++j) {
                    if (o.at(k, j).is_zero()) continue;
                    r.at(i, j) += at(i, k) * o.at(k, j);
                }
            }
        return r;
    }
    RingMatrix scaled(const LaurentPoly& k) const {
        RingMatrix r(rows, cols);
        for (std::size_t i = 0; i < entries.size(); ++i) r.entries[i] = entries[i] * k;
        return r;
    }

private:
    void check_shape(const RingMatrix& o) const {
        if (rows != o.rows || cols != o.cols)
            throw std::invalid_argument("RingMatrix: shape mismatch");
    }
};

inline RingMatrix operator*(const LaurentPoly& k, const RingMatrix& m) { return m.scaled(k); }

/// Solution of a linear system M X = B as X = Xnum / den with polynomial
/// entries and a single polynomial denominator (the final Bareiss pivot).
struct BareissSolution {
    RingMatrix xnum;
    LaurentPoly den;

    Frac entry(std::size_t i, std::size_t j) const { return Frac(xnum.at(i, j), den); }

    /// Attempt to certify all entries lie in R; returns the polynomial matrix
    /// if every exact division succeeds.
    std::optional<RingMatrix> as_poly() const {
        RingMatrix out(xnum.rows, xnum.cols);
        for (std::size_t i = 0; i < xnum.entries.size(); ++i) {
            auto q = lp_divide_exact(xnum.entries[i], den);
            if (!q) return std::nullopt;
            out.entries[i] = *q;
        }
        return out;
    }
};

/**
 * @brief Solve M X = B exactly by fraction-free Gauss-Jordan (Bareiss).
 *
 * M must have full column rank over the fraction field; rank deficiency and
 * inconsistency return std::nullopt.  All intermediate entries stay in R;
 * every interior division is exact by the Sylvester-identity argument and is
 * verified at runtime.
 */
inline std::optional<BareissSolution> mat_solve_bareiss(const RingMatrix& M, const RingMatrix& B) {
    if (M.rows != B.rows) throw std::invalid_argument("mat_solve_bareiss: row mismatch");
    const std::size_t m = M.rows, n = M.cols, k = B.cols;
    // Augmented working matrix [M | B].
    RingMatrix W(m, n + k);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) W.at(i, j) = M.at(i, j);
        for (std::size_t j = 0; j < k; ++j) W.at(i, n + j) = B.at(i, j);
    }
    std::vector<std::size_t> pivot_row;  // pivot_row[c] = row index of pivot for column c
    LaurentPoly prev = LP_one();
    std::vector<bool> used(m, false);
    for (std::size_t col = 0; col < n; ++col) {
        // Pick an unused row with nonzero entry in this column; prefer the
        // sparsest pivot polynomial to limit expression growth.
        std::size_t best = m;
        for (std::size_t i = 0; i < m; ++i) {
            if (used[i] || W.at(i, col).is_zero()) continue;
            if (best == m || W.at(i, col).terms.size() < W.at(best, col).terms.size()) best = i;
        }
        if (best == m) return std::nullopt;  // rank deficient
        used[best] = true;
        pivot_row.push_back(best);
        const LaurentPoly piv = W.at(best, col);
        for (std::size_t i = 0; i < m; ++i) {
            if (i == best) continue;
            const LaurentPoly factor = W.at(i, col);
            for (std::size_t j = col; j < n + k; ++j) {
                LaurentPoly t = piv * W.at(i, j) - factor * W.at(best, j);
                auto q = lp_divide_exact(t, prev);
                if (!q) throw std::logic_error("mat_solve_bareiss: inexact interior division");
                W.at(i, j) = *q;
            }
        }
        prev = piv;
    }
    // Consistency: rows without pivots must have zero right-hand side.
    for (std::size_t i = 0; i < m; ++i) {
        if (used[i]) continue;
        for (std::size_t j = n; j < n + k; ++j)
            if (!W.at(i, j).is_zero()) return std::nullopt;  // inconsistent
    }
    BareissSolution sol;
    sol.den = prev;  // common denominator: final pivot
    sol.xnum = RingMatrix(n, k);
    for (std::size_t c = 0; c < n; ++c)
        for (std::size_t j = 0; j < k; ++j) sol.xnum.at(c, j) = W.at(pivot_row[c], n + j);
    return sol;
}

/// Rank of the rational specialization of M (exact rational Gauss).
inline std::size_t rank_at_specialization(const RingMatrix& M, const std::vector<Rational>& point) {
    std::vector<std::vector<Rational>> A(M.rows, std::vector<Rational>(M.cols));
    for (std::size_t i = 0; i < M.rows; ++i)
        for (std::size_t j = 0; j < M.cols; ++j) A[i][j] = M.at(i, j).specialize(point);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < M.cols && rank < M.rows; ++col) {
        std::size_t piv = rank;
        while (piv < M.rows && A[piv][col] == 0) ++piv;
        if (piv == M.rows) continue;
        std::swap(A[piv], A[rank]);
        for (std::size_t i = rank + 1; i < M.rows; ++i) {
            if (A[i][col] == 0) continue;
            Rational f = A[i][col] / A[rank][col];
            for (std::size_t j = col; j < M.cols; ++j) A[i][j] -= f * A[rank][j];
        }
        ++rank;
    }
    return rank;
}

/// Pivot structure of a matrix at a rational specialization.
struct PivotInfo {
    std::size_t rank = 0;
    std::vector<std::size_t> rows, cols;  // pivot row/column indices, size == rank
};

/// Rational Gaussian elimination with row tracking; returns the pivot rows and
/// columns found at the given specialization point.
inline PivotInfo pivots_at_specialization(const RingMatrix& M, const std::vector<Rational>& point) {
    std::vector<std::vector<Rational>> A(M.rows, std::vector<Rational>(M.cols));
    for (std::size_t i = 0; i < M.rows; ++i)
        for (std::size_t j = 0; j < M.cols; ++j) A[i][j] = M.at(i, j).specialize(point);
    std::vector<std::size_t> rowidx(M.rows);
    for (std::size_t i = 0; i < M.rows; ++i) rowidx[i] = i;
    PivotInfo info;
    for (std::size_t col = 0; col < M.cols && info.rank < M.rows; ++col) {
        std::size_t piv = info.rank;
        while (piv < M.rows && A[piv][col] == 0) ++piv;
        if (piv == M.rows) continue;
        std::swap(A[piv], A[info.rank]);
        std::swap(rowidx[piv], rowidx[info.rank]);
        for (std::size_t i = info.rank + 1; i < M.rows; ++i) {
            if (A[i][col] == 0) continue;
            Rational f = A[i][col] / A[info.rank][col];
            for (std::size_t j = col; j < M.cols; ++j) A[i][j] -= f * A[info.rank][j];
        }
        info.rows.push_back(rowidx[info.rank]);
        info.cols.push_back(col);
        ++info.rank;
    }
    return info;
}

/// Exact symbolic rank via fraction-free Bareiss row echelon.
inline std::size_t mat_rank_bareiss(const RingMatrix& M) {
    RingMatrix W = M;
    const std::size_t m = W.rows, n = W.cols;
    LaurentPoly prev = LP_one();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < n && rank < m; ++col) {
        std::size_t best = m;
        for (std::size_t i = rank; i < m; ++i) {
            if (W.at(i, col).is_zero()) continue;
            if (best == m || W.at(i, col).terms.size() < W.at(best, col).terms.size()) best = i;
        }
        if (best == m) continue;
        if (best != rank)
            for (std::size_t j = 0; j < n; ++j) std::swap(W.at(best, j), W.at(rank, j));
        for (std::size_t i = rank + 1; i < m; ++i) {
            for (std::size_t j = col + 1; j < n; ++j) {
                LaurentPoly t = W.at(rank, col) * W.at(i, j) - W.at(i, col) * W.at(rank, j);
                auto q = lp_divide_exact(t, prev);
                if (!q) throw std::logic_error("mat_rank_bareiss: inexact division");
                W.at(i, j) = *q;
            }
            W.at(i, col) = LP_zero();
        }
        prev = W.at(rank, col);
        ++rank;
    }
    return rank;
}

/// Determinant via fraction-free Bareiss; defined for square matrices.
inline LaurentPoly mat_det_bareiss(const RingMatrix& M) {
    if (M.rows != M.cols) throw std::invalid_argument("mat_det_bareiss: not square");
    const std::size_t n = M.rows;
    if (n == 0) return LP_one();
    RingMatrix W = M;
    LaurentPoly prev = LP_one();
    int sign = 1;
    for (std::size_t col = 0; col + 1 < n; ++col) {
        std::size_t best = n;
        for (std::size_t i = col; i < n; ++i) {
            if (W.at(i, col).is_zero()) continue;
            if (best == n || W.at(i, col).terms.size() < W.at(best, col).terms.size()) best = i;
        }
        if (best == n) return LP_zero();
        if (best != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(W.at(best, j), W.at(col, j));
            sign = -sign;
        }
        for (std::size_t i = col + 1; i < n; ++i) {
            for (std::size_t j = col + 1; j < n; ++j) {
                LaurentPoly t = W.at(col, col) * W.at(i, j) - W.at(i, col) * W.at(col, j);
                auto q = lp_divide_exact(t, prev);
                if (!q) throw std::logic_error("mat_det_bareiss: inexact division");
                W.at(i, j) = *q;
            }
            W.at(i, col) = LP_zero();
        }
        prev = W.at(col, col);
    }
    LaurentPoly det = W.at(n - 1, n - 1);
    return sign == 1 ? det : -det;
}

/// Generic rational points used to locate pivot structure cheaply before an
/// exact symbolic computation; correctness never depends on the choice.
inline const std::vector<std::vector<Rational>>& generic_probe_points() {
    static const std::vector<std::vector<Rational>> pts = {
        {Rational(2), Rational(3), Rational(5)},
        {Rational(7, 2), Rational(-4), Rational(11, 3)},
        {Rational(-5, 3), Rational(9), Rational(13, 7)},
    };
    return pts;
}

/**
 * @brief Exact test "v lies in the column span of S over the fraction field".
 *
 * Strategy: locate a pivot submatrix at a rational probe point (a nonsingular
 * square submatrix there is nonsingular symbolically), solve the square system
 * exactly by Bareiss, and verify the candidate combination on every row by
 * symbolic multiplication.  A successful verification is a complete proof of
 * membership; if no probe point yields a verified combination, fall back to
 * the exact rank comparison rank(S) == rank(S|v).
 */
inline bool span_membership_exact(const RingMatrix& S, const std::vector<LaurentPoly>& v) {
    if (v.size() != S.rows) throw std::invalid_argument("span_membership_exact: shape");
    bool vzero = std::all_of(v.begin(), v.end(), [](const LaurentPoly& p) { return p.is_zero(); });
    if (vzero) return true;
    if (S.cols == 0) return false;
    for (const auto& pt : generic_probe_points()) {
        PivotInfo piv;
        try {
            piv = pivots_at_specialization(S, pt);
        } catch (const std::domain_error&) {
            continue;  // probe point hits a pole of some entry
        }
        if (piv.rank == 0) continue;
        RingMatrix M(piv.rank, piv.rank), B(piv.rank, 1);
        for (std::size_t i = 0; i < piv.rank; ++i) {
            for (std::size_t j = 0; j < piv.rank; ++j) M.at(i, j) = S.at(piv.rows[i], piv.cols[j]);
            B.at(i, 0) = v[piv.rows[i]];
        }
        auto sol = mat_solve_bareiss(M, B);
        if (!sol) continue;
        // Verify S[:,pivot cols] * xnum == den * v on all rows.
        bool ok = true;
        for (std::size_t i = 0; i < S.rows && ok; ++i) {
            LaurentPoly lhs;
            for (std::size_t j = 0; j < piv.rank; ++j)
                lhs += S.at(i, piv.cols[j]) * sol->xnum.at(j, 0);
            if (lhs != sol->den * v[i]) ok = false;
        }
        if (ok) return true;
    }
    // Exact fallback: compare symbolic ranks.
    RingMatrix Aug(S.rows, S.cols + 1);
    for (std::size_t i = 0; i < S.rows; ++i) {
        for (std::size_t j = 0; j < S.cols; ++j) Aug.at(i, j) = S.at(i, j);
        Aug.at(i, S.cols) = v[i];
    }
    return mat_rank_bareiss(S) == mat_rank_bareiss(Aug);
}

// ---------------------------------------------------------------------------
// Textual Laurent syntax ("3*a^2*b^-1*c - 1") — round-trips with str().
// ---------------------------------------------------------------------------

inline LaurentPoly lp_parse(const std::string& text,
                            std::vector<std::string> vs = {"a", "b", "c"}) {
    LaurentPoly out(vs);
    std::size_t i = 0;
    auto skip_ws = [&] { while (i < text.size() && std::isspace((unsigned char)text[i])) ++i; };
    skip_ws();
    if (i == text.size()) throw std::invalid_argument("lp_parse: empty input");
    bool first = true;
    while (true) {
        skip_ws();
        if (i == text.size()) {
            if (first) throw std::invalid_argument("lp_parse: empty input");
            break;
        }
        int sign = 1;
        if (text[i] == '+' || text[i] == '-') {
            if (text[i] == '-') sign = -1;
            ++i;
            skip_ws();
        } else if (!first) {
            throw std::invalid_argument("lp_parse: missing +/- between terms");
        }
        first = false;
        // term: [integer] {*? var [^ int]}*
        Int coeff = 1;
        Expo e(out.nvars(), 0);
        bool saw_atom = false;
        if (i < text.size() && std::isdigit((unsigned char)text[i])) {
            std::string num;
            while (i < text.size() && std::isdigit((unsigned char)text[i])) num += text[i++];
            coeff = Int(num);
            saw_atom = true;
        }
        while (true) {
            skip_ws();
            std::size_t save = i;
            if (i < text.size() && text[i] == '*') { ++i; skip_ws(); }
            // variable name (longest match)
            std::size_t vi = vs.size();
            for (std::size_t v = 0; v < vs.size(); ++v) {
                if (text.compare(i, vs[v].size(), vs[v]) == 0 &&
                    (vi == vs.size() || vs[v].size() > vs[vi].size()))
                    vi = v;
            }
            if (vi == vs.size()) { i = save; break; }
            i += vs[vi].size();
            int power = 1;
            skip_ws();
            if (i < text.size() && text[i] == '^') {
                ++i;
                skip_ws();
                int psign = 1;
                if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
                    if (text[i] == '-') psign = -1;
                    ++i;
                }
                std::string num;
                while (i < text.size() && std::isdigit((unsigned char)text[i])) num += text[i++];
                if (num.empty()) throw std::invalid_argument("lp_parse: bad exponent");
                power = psign * std::stoi(num);
            }
            e[vi] += power;
            saw_atom = true;
        }
        if (!saw_atom) {
            if (text.compare(i, 1, "0") == 0) { ++i; continue; }
            throw std::invalid_argument("lp_parse: expected term at position " + std::to_string(i));
        }
        out.add_term(e, sign < 0 ? Int(-coeff) : coeff);
    }
    return out;
}

}  // namespace cubiq
