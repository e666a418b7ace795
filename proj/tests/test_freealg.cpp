// Free R-algebra on signed words: arithmetic, the phi/psi symmetries, and the
// two defining relators of the rank-20 quotient.
#include <catch2/catch_amalgamated.hpp>

#include "cubiq/freealg.hpp"

using namespace cubiq;

static SignedWord W(std::initializer_list<int> ls, int n = 3) {
    return SignedWord(std::vector<int>(ls), n);
}

TEST_CASE("algebra arithmetic free-reduces words", "[freealg]") {
    AlgElem x = AlgElem::from_word(W({1, -1}));
    CHECK(x == AlgElem::one(3));
    AlgElem s1 = AlgElem::from_word(W({1}));
    AlgElem s1i = AlgElem::from_word(W({-1}));
    CHECK(s1 * s1i == AlgElem::one(3));
    CHECK((s1 - s1).terms.empty());
    AlgElem s2 = AlgElem::from_word(W({2}));
    CHECK((s1 + s2) * (s1 - s2) ==
          s1 * s1 - s1 * s2 + s2 * s1 - s2 * s2);
    CHECK(LP_u() * s1 == s1.scaled(LP_u()));
}

TEST_CASE("phi and psi are involutions, phipsi is their composite", "[freealg]") {
    AlgElem x = AlgElem::from_word(W({1, -2, 1}), LP_a() * LP_mono(0, -1, 0)) +
                AlgElem::from_word(W({2}), LP_v());
    CHECK(apply_symmetry(apply_symmetry(x, AlgSymmetry::phi), AlgSymmetry::phi) == x);
    CHECK(apply_symmetry(apply_symmetry(x, AlgSymmetry::psi), AlgSymmetry::psi) == x);
    CHECK(apply_symmetry(apply_symmetry(x, AlgSymmetry::phi), AlgSymmetry::psi) ==
          apply_symmetry(x, AlgSymmetry::phipsi));
}

TEST_CASE("phi is an automorphism, psi an anti-automorphism", "[freealg]") {
    AlgElem x = AlgElem::from_word(W({1, 2}), LP_b());
    AlgElem y = AlgElem::from_word(W({-2, 1}), LP_mono(1, 0, -1));
    CHECK(apply_symmetry(x * y, AlgSymmetry::phi) ==
          apply_symmetry(x, AlgSymmetry::phi) * apply_symmetry(y, AlgSymmetry::phi));
    CHECK(apply_symmetry(x * y, AlgSymmetry::psi) ==
          apply_symmetry(y, AlgSymmetry::psi) * apply_symmetry(x, AlgSymmetry::psi));
}

TEST_CASE("defining relators have the expected shape", "[freealg]") {
    auto [r1, r2] = defining_relations();
    CHECK(r1.terms.size() == 12);
    CHECK(r2.terms.size() == 12);
    CHECK(r1.coeff(W({-1, 2, 1})) == LP_one());
    CHECK(r1.coeff(W({1, 2, -1})) == -LP_one());
    CHECK(r1.coeff(W({-1, -2, 1})) == -LP_a() * LP_a());
    CHECK(r2.coeff(W({1, 2, 1, 1, 2})) == LP_one());
    CHECK(r2.coeff(W({1, 1, 2, 1, 1})) == -LP_one());
    CHECK(r2.coeff(W({1})) == LP_mono(4, 0, 0));
}

TEST_CASE("relators transform as claimed under phi and psi", "[freealg]") {
    auto [r1, r2] = defining_relations();
    // phi(r1) = a^-2 r1 and psi(r1) = -a^-2 r1.
    CHECK(apply_symmetry(r1, AlgSymmetry::phi) == r1.scaled(LP_mono(-2, 0, 0)));
    CHECK(apply_symmetry(r1, AlgSymmetry::psi) == r1.scaled(-LP_mono(-2, 0, 0)));
}

TEST_CASE("cubic relation element", "[freealg]") {
    AlgElem rel = cubic_relation(1, 3);
    AlgElem s1 = AlgElem::from_word(W({1}));
    CHECK(rel == s1 * s1 * s1 - LP_u() * (s1 * s1) + LP_v() * s1 - LP_w() * AlgElem::one(3));
    CHECK(rel.coeff(W({1, 1, 1})) == LP_one());
}
