// Matrix models of Irr(H_3), the rank-24 embedding, ideal membership for the
// rank-20 quotient, express-in-basis, and the alternative-basis certificates.
#include <catch2/catch_amalgamated.hpp>

#include "cubiq/h3reps.hpp"
#include "cubiq/rewrite.hpp"

using namespace cubiq;

static SignedWord W(std::initializer_list<int> ls) {
    return SignedWord(std::vector<int>(ls), 3);
}
static AlgElem E(std::initializer_list<int> ls) { return AlgElem::from_word(W(ls)); }

TEST_CASE("every model satisfies inverse, braid, cubic", "[h3reps]") {
    for (const auto& r : h3_reps()) {
        INFO(r.name);
        RingMatrix I = RingMatrix::identity(r.dim);
        CHECK(r.gen1 * r.gen1inv == I);
        CHECK(r.gen2 * r.gen2inv == I);
        CHECK(r.gen1 * r.gen2 * r.gen1 == r.gen2 * r.gen1 * r.gen2);
        for (const RingMatrix* g : {&r.gen1, &r.gen2}) {
            RingMatrix cube = (*g) * (*g) * (*g) - LP_u() * ((*g) * (*g)) +
                              LP_v() * (*g) - LP_w() * I;
            CHECK(cube.is_zero());
        }
    }
}

TEST_CASE("embedding is unital and multiplicative", "[h3reps]") {
    CHECK(phi_h3_eval(AlgElem::one(3)) == Phi3Image::identity());
    AlgElem x = E({1, -2, 1}) + LP_b() * E({2});
    AlgElem y = E({-1, -1, 2}) - LP_mono(0, 0, -1) * AlgElem::one(3);
    CHECK(phi_h3_eval(x * y) == phi_h3_eval(x) * phi_h3_eval(y));
}

TEST_CASE("24 basis words give a full-rank image", "[h3reps]") {
    auto basis = h3_b1_basis();
    REQUIRE(basis.size() == 24);
    RingMatrix M(24, 24);
    for (std::size_t j = 0; j < 24; ++j) {
        auto col = phi_h3_word(basis[j]).coords();
        for (std::size_t i = 0; i < 24; ++i) M.at(i, j) = col[i];
    }
    // Full rank at three generic points (each avoiding the degeneracy locus);
    // full rank at any single point already certifies full symbolic rank.
    for (const auto& pt : generic_probe_points()) {
        REQUIRE(h3_semisimple_at(pt));
        CHECK(rank_at_specialization(M, pt) == 24);
    }
}

TEST_CASE("blocks of the defining relators", "[h3reps]") {
    auto [r1, r2] = defining_relations();
    Phi3Image p1 = phi_h3_eval(r1), p2 = phi_h3_eval(r2);
    for (std::size_t i = 0; i < 7; ++i) {
        if (i == kUbc) continue;
        INFO("block " << h3_reps()[i].name);
        CHECK(p1.blocks[i].is_zero());
        CHECK(p2.blocks[i].is_zero());
    }
    LaurentPoly d = LP_delta(), bmc = LP_b() - LP_c();
    RingMatrix e1(2, 2);
    e1.at(0, 0) = d * LP_mono(-1, -1, -1);
    e1.at(0, 1) = d * bmc * LP_mono(-1, -2, -1);
    e1.at(1, 0) = d * bmc * LP_mono(-1, -1, -2);
    e1.at(1, 1) = -(d * LP_mono(-1, -1, -1));
    CHECK(p1.blocks[kUbc] == e1);
    RingMatrix e2(2, 2);
    e2.at(0, 0) = d * bmc;
    e2.at(0, 1) = -(d * LP_c());
    e2.at(1, 0) = -(d * LP_b());
    e2.at(1, 1) = -(d * bmc);
    CHECK(p2.blocks[kUbc] == e2);
}

TEST_CASE("V-block of the tripled-Hecke defining element", "[h3reps]") {
    Phi3Image p = phi_h3_eval(k_defining_element());
    LaurentPoly amc = LP_a() - LP_c(), acb2 = LP_a() * LP_c() + LP_b() * LP_b();
    LaurentPoly two = LP_one() + LP_one();
    LaurentPoly inner = LP_a() * LP_a() + LP_b() * LP_c() - two * LP_a() * (LP_b() + LP_c());
    LaurentPoly corner = amc * acb2;
    LaurentPoly top = two * LP_c() * (LP_a() + LP_b()) - LP_a() * LP_b() - LP_c() * LP_c();
    RingMatrix e(3, 3);
    e.at(0, 0) = -corner;
    e.at(0, 1) = top;
    e.at(0, 2) = corner;
    e.at(1, 0) = -(acb2 * inner);
    e.at(1, 1) = two * corner;
    e.at(1, 2) = acb2 * inner;
    e.at(2, 0) = corner;
    e.at(2, 1) = -top;
    e.at(2, 2) = -corner;
    CHECK(p.blocks[kV] == e);
    // And it vanishes in every block that factors through a quadratic algebra.
    for (std::size_t i = 0; i < 7; ++i)
        if (i != kV) CHECK(p.blocks[i].is_zero());
}

TEST_CASE("ideal membership", "[h3reps]") {
    auto [r1, r2] = defining_relations();
    CHECK(ideal_membership(r1).member);
    CHECK(ideal_membership(r2).member);
    CHECK(ideal_membership(AlgElem::zero(3)).member);
    CHECK_FALSE(ideal_membership(E({1}) - E({2})).member);
    CHECK_FALSE(ideal_membership(AlgElem::one(3)).member);
    // Two-sided closure on sample words.
    CHECK(ideal_membership(E({2, -1}) * r1 * E({1, 1, -2})).member);
    CHECK(ideal_membership(E({-2}) * r2 * E({1, 2})).member);
    CHECK(ideal_membership(r1.scaled(LP_delta()) + E({1}) * r2).member);
}

TEST_CASE("structural identities of the quotient", "[h3reps]") {
    auto rep = verify_q3_identities();
    CHECK(rep.conj_r1_is_r2);
    CHECK(rep.phi_r1);
    CHECK(rep.psi_r1);
    CHECK(rep.comm_in_u1u2);
}

TEST_CASE("express-in-basis coordinates", "[h3reps]") {
    auto basis = parse_basis_list(data::kSigned1Basis);
    REQUIRE(basis.size() == 20);
    // The empty word has coordinate 1 on itself.
    auto res = express_in_basis(AlgElem::one(3), basis, true);
    REQUIRE(res.solvable);
    for (std::size_t j = 0; j < 20; ++j) {
        if (basis[j].size() == 0)
            CHECK((*res.in_R)[j] == LP_one());
        else
            CHECK((*res.in_R)[j].is_zero());
    }
    // s2^{-1} s1 s2^{-1}: coefficient of s2 s1^{-1} s2 is (bc)^{-1}.
    auto res2 = express_in_basis(E({-2, 1, -2}), basis, true);
    REQUIRE(res2.solvable);
    for (std::size_t j = 0; j < 20; ++j)
        if (basis[j] == W({2, -1, 2})) CHECK((*res2.in_R)[j] == LP_mono(0, -1, -1));
    // Basis expression agrees with the rewriting normal form.
    auto sys = build_system(SystemKind::signed1);
    AlgElem nf = normal_form(E({-2, 1, -2}), sys);
    AlgElem recon = AlgElem::zero(3);
    for (std::size_t j = 0; j < 20; ++j)
        recon += (*res2.in_R)[j] * AlgElem::from_word(basis[j]);
    CHECK(phi_h3_eval(nf - recon).is_zero());
}

TEST_CASE("rank-5 quotient lemma", "[h3reps]") {
    auto basis = parse_basis_list(data::kSigned1Basis);
    AlgElem w1 = (E({2}) - LP_a() * AlgElem::one(3)) * E({1});
    AlgElem w2 = (E({2}) - LP_a() * AlgElem::one(3)) *
                 (AlgElem::one(3) - LP_a() * E({-1}));
    std::vector<AlgElem> span;
    std::vector<SignedWord> five{W({}), W({1}), W({-1}), W({2}), W({-2})};
    for (const auto& v : five) span.push_back(AlgElem::from_word(v));
    for (const auto& q : basis) {
        span.push_back(AlgElem::from_word(q) * w1);
        span.push_back(AlgElem::from_word(q) * w2);
    }
    // Quotient coordinates are already taken modulo the defining ideal, so the
    // span consists of the five words plus the left-ideal directions.
    for (int g : {1, -1, 2, -2})
        for (const auto& v : five) {
            INFO("g=" << g << " |v|=" << v.size());
            CHECK(q3_in_span_elems(AlgElem::from_word(SignedWord({g}, 3)) * AlgElem::from_word(v),
                                   span));
        }
}

TEST_CASE("alternative basis certificates", "[h3reps]") {
    auto rep = verify_alt_basis(parse_basis_list(data::kSigned1Basis),
                                parse_basis_list(data::kAltBasis));
    CHECK(rep.change_R_valued);
    CHECK(rep.det_unit);
    CHECK(rep.inverse_R_valued);
    CHECK(rep.identity1);
    CHECK(rep.identity2);
}

TEST_CASE("semisimplicity guard", "[h3reps]") {
    CHECK(h3_semisimple_at({Rational(2), Rational(3), Rational(5)}));
    CHECK_FALSE(h3_semisimple_at({Rational(2), Rational(2), Rational(5)}));
    CHECK_FALSE(h3_semisimple_at({Rational(1), Rational(-4), Rational(2)}));  // ab+c^2 = 0
}
