#include <catch2/catch_amalgamated.hpp>

#include "cubiq/weights.hpp"

using namespace cubiq;

namespace {
RatFn over_n(long c0, long c1, long c2 = 0) {
    return RatFn::over_n(NPoly{Int(c0), Int(c1), Int(c2)});
}
}  // namespace

TEST_CASE("rational functions of n", "[weights]") {
    RatFn a = over_n(-4, 0);        // -4/n
    RatFn b = over_n(-8, 0) * RatFn(NPoly{Int(1)}, NPoly{Int(2)});
    CHECK(a == b);
    CHECK(a != over_n(4, 0));
    CHECK(a.eval(Rational(8)) == Rational(-1, 2));
    CHECK(ratfn_distinct_for_n_ge(over_n(-4, 2), over_n(-4, -4), 7));
    // 2(n-2)/n equals -4(n+1)/n only at n = 0: distinct on n >= 7
    CHECK_FALSE(ratfn_distinct_for_n_ge(a, a, 7));
    // (n-10)/n vs 0 coincide at n = 10 >= 7
    CHECK_FALSE(ratfn_distinct_for_n_ge(over_n(-10, 1), RatFn(), 7));
    CHECK(np_integer_roots(NPoly{Int(-10), Int(1)}) == std::vector<Int>{Int(10)});
}

TEST_CASE("Casimir values", "[weights]") {
    // C(pi_2) = 2n - 2 - 4/n
    CHECK(casimir(Weight{{2, 1}}) == over_n(-4, -2, 2));
    // C(2 pi_2) = 4n - 16/n
    CHECK(casimir(Weight{{2, 2}}) == over_n(-16, 0, 4));
    CHECK(casimir(Weight{}) == RatFn());
    // C(pi_1 + pi_3) = 4n - 4 - 16/n
    CHECK(casimir(Weight{{1, 1}, {3, 1}}) == over_n(-16, -4, 4));
    CHECK(casimir(Weight{{2, 1}}).eval(Rational(9)) == Rational(16) - Rational(4, 9));
}

TEST_CASE("tau eigenvalues on the three level-2 components", "[weights]") {
    CHECK(tau_eigenvalue(Weight{{2, 2}}) == over_n(-4, 2));       // 2(n-2)/n
    CHECK(tau_eigenvalue(Weight{{4, 1}}) == over_n(-4, -4));      // -4(n+1)/n
    CHECK(tau_eigenvalue(Weight{{1, 1}, {3, 1}}) == over_n(-4, 0));  // -4/n
    // the embedded table stores n * tau
    const RatFn n_fn(NPoly{Int(0), Int(1)}, NPoly{Int(1)});
    for (const auto& [lambda, ntau] : tables::level2_tau())
        CHECK(n_fn * tau_eigenvalue(lambda) == ntau);
}

TEST_CASE("path W spectra match the listed values", "[weights]") {
    Weight p13{{1, 1}, {3, 1}}, p123{{1, 1}, {2, 1}, {3, 1}};
    Weight p2_14{{1, 2}, {4, 1}}, p2_124{{1, 2}, {2, 1}, {4, 1}};
    const RatFn n_fn(NPoly{Int(0), Int(1)}, NPoly{Int(1)});
    CHECK(n_fn * path_w_spectrum(p13, p123, p2_124) == over_n(0, -4, -2));  // -2(n+2)
    CHECK(n_fn * path_w_spectrum(p13, p123, p2_124) ==
          RatFn(NPoly{Int(-4), Int(-2)}, NPoly{Int(1)}));
    CHECK(n_fn * path_w_spectrum(p13, p2_14, p2_124) ==
          RatFn(NPoly{Int(-4), Int(4)}, NPoly{Int(1)}));  // 4(n-1)
    Weight p4{{4, 1}}, p24{{2, 1}, {4, 1}}, p26{{2, 1}, {6, 1}};
    CHECK(n_fn * path_w_spectrum(p4, p24, p26) ==
          RatFn(NPoly{Int(-4), Int(-10)}, NPoly{Int(1)}));  // -2(5n+2)
}

TEST_CASE("brick tables replay", "[weights]") {
    for (const auto& col : tables::bricks_dim2()) {
        auto chk = check_brick_column(col, 2, true);
        CHECK(chk.paths_valid);
        CHECK(chk.sp_u_matches);
        CHECK(chk.sp_w_matches);
        CHECK(chk.irreducible);
    }
    for (const auto& col : tables::bricks_dim3()) {
        auto chk = check_brick_column(col, 3, true);
        CHECK(chk.paths_valid);
        CHECK(chk.sp_u_matches);
        CHECK(chk.sp_w_matches);
        CHECK(chk.irreducible);
    }
    for (const auto& col : tables::bricks_w15()) {
        auto chk = check_brick_column(col, 2, true);
        CHECK(chk.paths_valid);
        CHECK(chk.sp_u_matches);
        CHECK(chk.sp_w_matches);
        CHECK(chk.irreducible);
    }
    CHECK(verify_weight_tables());
}

TEST_CASE("brick irreducibility criterion", "[weights]") {
    RatFn u1 = RatFn(NPoly{Int(-4)}, NPoly{Int(1)});
    RatFn u2 = RatFn(NPoly{Int(-4), Int(2)}, NPoly{Int(1)});
    RatFn w1 = RatFn(NPoly{Int(-4), Int(-2)}, NPoly{Int(1)});
    RatFn w2 = RatFn(NPoly{Int(-4), Int(4)}, NPoly{Int(1)});
    CHECK(brick_irreducibility(2, {u1, u2}, {w1, w2}, true));
    CHECK_FALSE(brick_irreducibility(2, {u1, u2}, {u1, u2}, true));     // Sp(u) = Sp(W)
    CHECK_FALSE(brick_irreducibility(2, {u1, u1}, {w1, w2}, true));     // repeated eigenvalue
    CHECK_FALSE(brick_irreducibility(2, {u1, u2}, {w1, w2}, false));    // not a reflection
    RatFn u3 = RatFn(NPoly{Int(-4), Int(-4)}, NPoly{Int(1)});
    RatFn w3 = RatFn(NPoly{Int(-4), Int(-8)}, NPoly{Int(1)});
    RatFn w4 = RatFn(NPoly{Int(-4), Int(8)}, NPoly{Int(1)});
    CHECK(brick_irreducibility(3, {u1, u2, u3}, {w3, w1, w4}, true));
    CHECK_FALSE(brick_irreducibility(3, {u1, u2, u3}, {w3, u2, w4}, true));  // overlap
}

TEST_CASE("exponent identity a^3 + b^2 c = 0", "[weights]") {
    CHECK(check_exp_identity());
    // -12 = (4n - 8) + (-4n - 4) as polynomials in n
    NPoly lhs{Int(-12)};
    NPoly rhs = np_add(NPoly{Int(-8), Int(4)}, NPoly{Int(-4), Int(-4)});
    CHECK(np_is_zero(np_sub(lhs, rhs)));
    CHECK(np_eval(rhs, Rational(9)) == Rational(-12));
}
