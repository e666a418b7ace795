#include <catch2/catch_amalgamated.hpp>

#include "cubiq/vogel.hpp"

using namespace cubiq;

namespace {
std::vector<std::pair<Rational, Rational>> test_pairs() {
    std::vector<std::pair<Rational, Rational>> pairs = {{Rational(3), Rational(-1)}};
    for (auto& p : generic_alpha_beta_pairs(20260826u, 2)) pairs.push_back(p);
    return pairs;
}
}  // namespace

TEST_CASE("Brauer diagram calculus", "[vogel]") {
    const int n = 3;
    auto id = BrauerDiagram::identity(n);
    auto p13 = BrauerDiagram::p_ij(n, 0, 2);
    auto p12 = BrauerDiagram::p_ij(n, 0, 1);
    auto s12 = BrauerDiagram::from_perm(detail_vogel::transposition(n, 0, 1));
    Rational m(7);

    SECTION("sample products") {
        auto [d, c] = brauer_mul(p13, p13, m);
        CHECK(d == p13);
        CHECK(c == m);
        auto [d2, c2] = brauer_mul(id, p12, m);
        CHECK(d2 == p12);
        CHECK(c2 == 1);
        auto [d3, c3] = brauer_mul(s12, p12, m);
        CHECK(d3 == p12);
        CHECK(c3 == 1);
    }

    SECTION("permutation diagrams multiply like permutations") {
        auto perms = detail_vogel::all_perms(n);
        for (const auto& p : perms)
            for (const auto& q : perms) {
                auto [d, c] = brauer_mul(BrauerDiagram::from_perm(p),
                                         BrauerDiagram::from_perm(q), m);
                CHECK(c == 1);
                CHECK(d == BrauerDiagram::from_perm(detail_vogel::perm_mul(q, p)));
            }
    }

    SECTION("associativity on random diagram triples") {
        std::mt19937 rng(42);
        auto random_diagram = [&]() {
            std::vector<int> pts(2 * n);
            std::iota(pts.begin(), pts.end(), 0);
            std::shuffle(pts.begin(), pts.end(), rng);
            std::vector<int> match(2 * n);
            for (int k = 0; k < n; ++k) {
                match[pts[2 * k]] = pts[2 * k + 1];
                match[pts[2 * k + 1]] = pts[2 * k];
            }
            return BrauerDiagram(n, std::move(match));
        };
        for (int trial = 0; trial < 40; ++trial) {
            BrauerElem a, b, c;
            a[random_diagram()] = 1;
            b[random_diagram()] = 1;
            c[random_diagram()] = 1;
            auto lhs = br_mul(br_mul(a, b, m), c, m);
            auto rhs = br_mul(a, br_mul(b, c, m), m);
            CHECK(br_is_zero(br_sub(lhs, rhs)));
        }
    }
}

TEST_CASE("V_2 scalar model", "[vogel]") {
    for (auto [alpha, beta] : test_pairs()) {
        auto rep = verify_v2(alpha, beta);
        CHECK(rep.relations);
        CHECK(rep.basis_1_t_t2);
        CHECK(rep.ok());
    }
    // degenerate points break the basis claim but not the relations
    CHECK_FALSE(verify_v2(Rational(2), Rational(2)).basis_1_t_t2);
    CHECK(verify_v2(Rational(2), Rational(2)).relations);
    CHECK_FALSE(verify_v2(Rational(0), Rational(5)).basis_1_t_t2);
}

TEST_CASE("3-dimensional model of V_3", "[vogel]") {
    for (auto [alpha, beta] : test_pairs()) {
        INFO("alpha=" << alpha << " beta=" << beta);
        auto rep = vogel_v3_3dim(alpha, beta);
        auto report = verify_vogel_relations(rep, alpha, beta);
        CHECK(report.coxeter_ok);
        CHECK(report.t_well_defined);
        CHECK(report.absorption);
        CHECK(report.quadratic);
        CHECK(report.infinitesimal);
        CHECK(report.cubic);
        CHECK(eigen_multiplicity(rep.t12, 0) == 1);
        CHECK(eigen_multiplicity(rep.t12, alpha) == 1);
        CHECK(eigen_multiplicity(rep.t12, beta) == 1);
    }
}

TEST_CASE("6-dimensional model of V_4", "[vogel]") {
    for (auto [alpha, beta] : test_pairs()) {
        INFO("alpha=" << alpha << " beta=" << beta);
        auto rep = vogel_v4_6dim(alpha, beta);
        auto report = verify_vogel_relations(rep, alpha, beta);
        CHECK(report.ok());
        // p12 = t12 - (alpha/2)(s1 + 1) has rank 1 and trace beta - alpha
        QMat p12 = rep.t12 - (alpha / 2) * (rep.coxeter[0] + QMat::identity(6));
        CHECK(qmat_rank(p12) == 1);
        CHECK(p12.trace() == beta - alpha);
        CHECK(eigen_multiplicity(rep.t12, 0) == 3);
        CHECK(eigen_multiplicity(rep.t12, alpha) == 2);
        CHECK(eigen_multiplicity(rep.t12, beta) == 1);
    }
}

TEST_CASE("8-dimensional model of V_4", "[vogel]") {
    for (auto [alpha, beta] : test_pairs()) {
        INFO("alpha=" << alpha << " beta=" << beta);
        auto rep = vogel_v4_8dim(alpha, beta);
        auto report = verify_vogel_relations(rep, alpha, beta);
        CHECK(report.ok());
        CHECK(eigen_multiplicity(rep.t12, 0) == 4);
        CHECK(eigen_multiplicity(rep.t12, alpha) == 2);
        CHECK(eigen_multiplicity(rep.t12, beta) == 2);
    }
}

TEST_CASE("factorization criteria for phi_uv and psi_uv", "[vogel]") {
    for (auto [alpha, beta] : test_pairs()) {
        INFO("alpha=" << alpha << " beta=" << beta);
        std::vector<Rational> uv_grid = {alpha / 2, beta / 2, Rational(0), alpha / 2 + 1};
        for (const Rational& u : uv_grid)
            for (const Rational& v : uv_grid) {
                bool phi_expected = (u == v) && (u == alpha / 2 || u == beta / 2);
                CHECK(morphism_factor_check(MorphKind::phi_uv, u, v, Rational(0), alpha, beta) ==
                      phi_expected);
                std::vector<Rational> m_grid;
                if (u != 0) {
                    Rational m_good = 4 - (alpha + beta) / u;  // u(m-4) = -(alpha+beta)
                    m_grid = {m_good, m_good + 1};
                } else {
                    m_grid = {Rational(2), Rational(5)};
                }
                for (const Rational& m : m_grid) {
                    bool psi_expected = (u == v) && (u == alpha / 2 || u == beta / 2) &&
                                        u * (m - 4) == -(alpha + beta);
                    CHECK(morphism_factor_check(MorphKind::psi_uv, u, v, m, alpha, beta) ==
                          psi_expected);
                }
            }
    }
}

TEST_CASE("the 20-word list spans V_3", "[vogel]") {
    for (auto [alpha, beta] : test_pairs()) {
        INFO("alpha=" << alpha << " beta=" << beta);
        auto rep = b3_span_check(alpha, beta);
        CHECK(rep.generic);
        CHECK(rep.rank == 20);
        CHECK(rep.closure);
        CHECK(rep.identity_xyx);
        CHECK(rep.identity_comm);
        CHECK(rep.ok());
    }
    // non-generic point is reported as such
    CHECK_FALSE(b3_span_check(Rational(1), Rational(1)).generic);
}

TEST_CASE("transposition-basis representation family", "[vogel]") {
    SECTION("n = 4, x = 1, generic (lambda, m)") {
        Rational lambda(3, 2), m(-5, 3);  // alpha = 3, beta = -1
        auto rep = verify_perm_rep(4, lambda, m, Rational(1));
        CHECK(rep.equivariance);
        CHECK(rep.infinitesimal);
        CHECK(rep.absorption);
        CHECK(rep.cubic);
        CHECK(rep.multiplicities);  // (1, 3, 2) on 6 = C(4,2) dimensions
        CHECK(rep.vogel_quadratic);
        CHECK(rep.ok());
    }
    SECTION("n = 5") {
        auto rep = verify_perm_rep(5, Rational(2), Rational(3), Rational(1));
        CHECK(rep.equivariance);
        CHECK(rep.infinitesimal);
        CHECK(rep.absorption);
        CHECK(rep.cubic);
        CHECK(rep.multiplicities);  // (1, 6, 3) on 10 dimensions
    }
    SECTION("x = 0 breaks absorption but keeps equivariance") {
        auto rep = verify_perm_rep(4, Rational(3, 2), Rational(-5, 3), Rational(0));
        CHECK(rep.equivariance);
        CHECK_FALSE(rep.absorption);
    }
}
