// Quadratic Hecke algebras, the triple embedding, the fiber conditions, the
// ternary relation list, and the recursive basis of the tripled algebra.
#include <catch2/catch_amalgamated.hpp>

#include "cubiq/hecke.hpp"

using namespace cubiq;

static SignedWord W(std::initializer_list<int> ls, int n = 3) {
    return SignedWord(std::vector<int>(ls), n);
}

TEST_CASE("T_w calculus basics", "[hecke]") {
    LaurentPoly x = LP_a(), y = LP_b();
    // s_1^2 = (x+y) T_{s1} - xy T_e in H_2.
    HeckeElem sq = hecke_eval_word(SignedWord({1, 1}, 2), x, y);
    HeckeElem expect = HeckeElem::zero(2, x, y);
    expect.add(Perm::identity(2).right_s(1), x + y);
    expect.add(Perm::identity(2), -(x * y));
    CHECK(sq == expect);
    // s_1 s_1^{-1} = 1.
    CHECK(hecke_eval_word(SignedWord({1, -1}, 2), x, y) == HeckeElem::unit(2, x, y));
    // Braid relation in H_3.
    CHECK(hecke_eval_word(W({1, 2, 1}), x, y) == hecke_eval_word(W({2, 1, 2}), x, y));
    // Quadratic relation (T_s - x)(T_s - y) = 0 for each generator.
    for (int g : {1, 2}) {
        AlgElem rel = AlgElem::from_word(W({g, g})) -
                      (x + y) * AlgElem::from_word(W({g})) + (x * y) * AlgElem::one(3);
        CHECK(hecke_eval(rel, x, y).is_zero());
    }
}

TEST_CASE("Hecke product agrees with word evaluation", "[hecke]") {
    LaurentPoly x = LP_b(), y = LP_c();
    HeckeElem p = hecke_eval_word(W({1, 2, 1, 1}), x, y);
    HeckeElem q = hecke_eval_word(W({2, -1, 2}), x, y);
    CHECK(p * q == hecke_eval_word(W({1, 2, 1, 1, 2, -1, 2}), x, y));
}

TEST_CASE("defining element b dies in every quadratic Hecke algebra", "[hecke]") {
    TripleElem t = triple_embed(k_defining_element());
    CHECK(t.is_zero());
}

TEST_CASE("triple image of r2", "[hecke]") {
    auto [r1, r2] = defining_relations();
    TripleElem t = triple_embed(r2);
    CHECK(t.zc.is_zero());  // H_3(a,b)
    CHECK(t.zb.is_zero());  // H_3(a,c)
    // H_3(b,c): delta * (T_{s1} - T_{s2}).
    HeckeElem expect = HeckeElem::zero(3, LP_b(), LP_c());
    expect.add(Perm::identity(3).right_s(1), LP_delta());
    expect.add(Perm::identity(3).right_s(2), -LP_delta());
    CHECK(t.za == expect);
}

TEST_CASE("fiber conditions", "[hecke]") {
    CHECK(fiber_check(triple_embed(AlgElem::from_word(W({1, -2, 1, 1})))));
    CHECK(fiber_check(triple_embed(AlgElem::from_word(W({2, 2, -1})))));
    // q_a-killed element: s_1 - a has q_a-image 0 in both carrying components.
    AlgElem el = AlgElem::from_word(W({1})) - LP_a() * AlgElem::one(3);
    TripleElem t = triple_embed(el);
    CHECK(q_char(t.zc, LP_a()).is_zero());
    CHECK(q_char(t.zb, LP_a()).is_zero());
    // A mismatched triple fails.
    TripleElem bad{HeckeElem::unit(3, LP_a(), LP_b()), HeckeElem::unit(3, LP_a(), LP_c()),
                   HeckeElem::unit(3, LP_b(), LP_c()).scaled(LP_one() + LP_one())};
    CHECK_FALSE(fiber_check(bad));
    TripleElem zero{HeckeElem::zero(3, LP_a(), LP_b()), HeckeElem::zero(3, LP_a(), LP_c()),
                    HeckeElem::zero(3, LP_b(), LP_c())};
    CHECK(fiber_check(zero));
}

TEST_CASE("ternary relations vanish in all three quadratic algebras", "[hecke]") {
    auto rep = verify_ternary_relations();
    CHECK(rep.entries.size() == 8);  // 2 cubics + 2 more for n=3, 4 for n=4
    for (const auto& e : rep.entries) {
        INFO(e.label);
        CHECK(e.zero_ab);
        CHECK(e.zero_ac);
        CHECK(e.zero_bc);
    }
}

TEST_CASE("basis cardinalities 3(n!-1)", "[hecke]") {
    CHECK(k_basis(1).size() == 1);
    CHECK(k_basis(2).size() == 3);
    CHECK(k_basis(3).size() == 15);
    CHECK(k_basis(4).size() == 69);
    CHECK(k_basis(5).size() == 357);
    CHECK(k_basis(6).size() == 2157);
    CHECK_THROWS(k_basis(0));
    CHECK_THROWS(k_basis(7));
    CHECK(k_basis(2) == std::vector<SignedWord>{SignedWord({}, 2), SignedWord({1}, 2),
                                                SignedWord({-1}, 2)});
}

TEST_CASE("basis images are independent at a generic point", "[hecke]") {
    // Guard: reject points where (a-b)(a-c)(b-c)(ab+c^2)(ac+b^2)(bc+a^2) = 0.
    std::vector<Rational> pt{Rational(2), Rational(3), Rational(5)};
    LaurentPoly guard = (LP_a() - LP_b()) * (LP_a() - LP_c()) * (LP_b() - LP_c()) *
                        (LP_a() * LP_b() + LP_c() * LP_c()) *
                        (LP_a() * LP_c() + LP_b() * LP_b()) *
                        (LP_b() * LP_c() + LP_a() * LP_a());
    REQUIRE(guard.specialize(pt) != 0);
    CHECK(k_basis_rank_at(2, pt) == 3);
    CHECK(k_basis_rank_at(3, pt) == 15);
    CHECK(k_basis_rank_at(4, pt) == 69);
    // Second random-ish generic point for the small cases.
    std::vector<Rational> pt2{Rational(7, 2), Rational(-4), Rational(11, 3)};
    REQUIRE(guard.specialize(pt2) != 0);
    CHECK(k_basis_rank_at(3, pt2) == 15);
}

TEST_CASE("basis images independent for n=5", "[hecke][slow]") {
    std::vector<Rational> pt{Rational(2), Rational(3), Rational(5)};
    CHECK(k_basis_rank_at(5, pt) == 357);
}
