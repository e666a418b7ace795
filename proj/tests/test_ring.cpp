// Exact Laurent-polynomial arithmetic, fractions, and fraction-free linear
// algebra over Z[a^{+-1}, b^{+-1}, c^{+-1}].
#include <catch2/catch_amalgamated.hpp>

#include "cubiq/ring.hpp"

using namespace cubiq;

TEST_CASE("basic Laurent arithmetic", "[ring]") {
    LaurentPoly a = LP_a(), b = LP_b(), c = LP_c();
    CHECK((a + b) * (a - b) == a * a - b * b);
    CHECK((a - a).is_zero());
    CHECK(LP_mono(-1, 0, 0) * a == LP_one());
    CHECK(LP_u() * LP_w() == (a + b + c) * a * b * c);
    CHECK((-LP_one()).scaled(-1) == LP_one());
}

TEST_CASE("invert_vars is an involution and a ring map", "[ring]") {
    LaurentPoly p = LP_mono(2, -1, 0, 3) + LP_v() - LP_mono(0, 0, -2, 7);
    LaurentPoly q = LP_delta();
    CHECK(p.invert_vars().invert_vars() == p);
    CHECK((p * q).invert_vars() == p.invert_vars() * q.invert_vars());
    CHECK((p + q).invert_vars() == p.invert_vars() + q.invert_vars());
}

TEST_CASE("delta expands as (a-b)(a-c)(a^2+bc)", "[ring]") {
    LaurentPoly d = (LP_a() - LP_b()) * (LP_a() - LP_c()) * (LP_a() * LP_a() + LP_b() * LP_c());
    CHECK(LP_delta() == d);
    CHECK_FALSE(LP_delta().is_zero());
}

TEST_CASE("exact division succeeds exactly when divisible", "[ring]") {
    LaurentPoly p = LP_delta() * (LP_u() + LP_mono(0, -3, 2, 5));
    auto q = lp_divide_exact(p, LP_delta());
    REQUIRE(q.has_value());
    CHECK(*q == LP_u() + LP_mono(0, -3, 2, 5));
    CHECK_FALSE(lp_divide_exact(LP_a() + LP_b(), LP_a() - LP_b()).has_value());
    // Units divide everything.
    auto r = lp_divide_exact(LP_u(), LP_mono(1, 2, -1, -1));
    REQUIRE(r.has_value());
    CHECK(*r * LP_mono(1, 2, -1, -1) == LP_u());
}

TEST_CASE("fractions compare by cross multiplication", "[ring]") {
    Frac x(LP_a() * LP_a() - LP_b() * LP_b(), LP_a() - LP_b());
    Frac y(LP_a() + LP_b(), LP_one());
    CHECK(x == y);
    CHECK((x - y).den == LP_a() - LP_b());  // unreduced representation
    CHECK((x - y) == Frac(LP_zero()));
    CHECK(x * Frac(LP_a() - LP_b()) == Frac(LP_a() * LP_a() - LP_b() * LP_b()));
    auto p = x.as_poly();
    REQUIRE(p.has_value());
    CHECK(*p == LP_a() + LP_b());
}

TEST_CASE("specialization is an exact rational evaluation", "[ring]") {
    LaurentPoly p = LP_mono(2, -1, 0, 3) + LP_one();
    Rational val = p.specialize({Rational(2), Rational(3), Rational(5)});
    CHECK(val == Rational(3 * 4, 3) + 1);
}

TEST_CASE("Bareiss solve returns exact solution with single denominator", "[ring]") {
    // M = [[a, b], [c, a]], B = [[1], [0]]; det = a^2 - bc.
    RingMatrix M(2, 2), B(2, 1);
    M.at(0, 0) = LP_a();
    M.at(0, 1) = LP_b();
    M.at(1, 0) = LP_c();
    M.at(1, 1) = LP_a();
    B.at(0, 0) = LP_one();
    auto sol = mat_solve_bareiss(M, B);
    REQUIRE(sol.has_value());
    // Check M * Xnum == den * B exactly.
    CHECK(M * sol->xnum == B.scaled(sol->den));
    LaurentPoly det = LP_a() * LP_a() - LP_b() * LP_c();
    CHECK((sol->den == det || sol->den == -det));
}

TEST_CASE("Bareiss solve detects inconsistency and rank deficiency", "[ring]") {
    RingMatrix M(2, 2), B(2, 1);
    M.at(0, 0) = LP_a();
    M.at(0, 1) = LP_b();
    M.at(1, 0) = LP_a();
    M.at(1, 1) = LP_b();
    B.at(0, 0) = LP_one();
    B.at(1, 0) = LP_one() + LP_one();
    CHECK_FALSE(mat_solve_bareiss(M, B).has_value());
}

TEST_CASE("overdetermined consistent system solves", "[ring]") {
    RingMatrix M(3, 2), B(3, 1);
    M.at(0, 0) = LP_a();
    M.at(1, 1) = LP_b();
    M.at(2, 0) = LP_a();
    M.at(2, 1) = LP_b();
    B.at(0, 0) = LP_a() * LP_c();
    B.at(1, 0) = LP_b() * LP_c();
    B.at(2, 0) = (LP_a() + LP_b()) * LP_c();
    auto sol = mat_solve_bareiss(M, B);
    REQUIRE(sol.has_value());
    auto X = sol->as_poly();
    REQUIRE(X.has_value());
    CHECK(X->at(0, 0) == LP_c());
    CHECK(X->at(1, 0) == LP_c());
}

TEST_CASE("determinant via Bareiss", "[ring]") {
    RingMatrix M(3, 3);
    M.at(0, 0) = LP_a();
    M.at(1, 1) = LP_b();
    M.at(2, 2) = LP_c();
    M.at(0, 1) = LP_one();
    CHECK(mat_det_bareiss(M) == LP_w());
    RingMatrix I = RingMatrix::identity(4);
    CHECK(mat_det_bareiss(I) == LP_one());
    // Singular matrix.
    RingMatrix S(2, 2);
    S.at(0, 0) = LP_a();
    S.at(0, 1) = LP_b();
    S.at(1, 0) = LP_a();
    S.at(1, 1) = LP_b();
    CHECK(mat_det_bareiss(S).is_zero());
}

TEST_CASE("rank at rational specializations", "[ring]") {
    RingMatrix M(3, 3);
    M.at(0, 0) = LP_a() - LP_b();
    M.at(1, 1) = LP_one();
    M.at(2, 2) = LP_one();
    // Generic point: full rank.
    CHECK(rank_at_specialization(M, {Rational(2), Rational(3), Rational(5)}) == 3);
    // a == b kills the first pivot.
    CHECK(rank_at_specialization(M, {Rational(2), Rational(2), Rational(5)}) == 2);
}

TEST_CASE("parser round-trips canonical strings", "[ring]") {
    LaurentPoly p = LP_mono(2, -1, 0, 3) - LP_mono(0, 0, 0, 1) + LP_mono(0, 1, -2, -4);
    CHECK(lp_parse(p.str()) == p);
    CHECK(lp_parse("a + b + c") == LP_u());
    CHECK(lp_parse("0").is_zero());
    CHECK(lp_parse("-a^-1*b") == LP_mono(-1, 1, 0, -1));
}
