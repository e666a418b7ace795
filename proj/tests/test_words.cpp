// Signed braid words: free reduction, symmetries, the BFS equality oracle,
// and the handle-reduction identities.
#include <catch2/catch_amalgamated.hpp>

#include "cubiq/words.hpp"

using namespace cubiq;

static SignedWord W(std::initializer_list<int> ls, int n = 3) {
    return SignedWord(std::vector<int>(ls), n);
}

TEST_CASE("free reduction cancels adjacent inverse pairs", "[words]") {
    CHECK(free_reduce(W({1, -1})).size() == 0);
    CHECK(free_reduce(W({2, 1, -1, -2})).size() == 0);
    CHECK(free_reduce(W({1, 2, -2, -1, 1})) == W({1}));
    CHECK(free_reduce(W({1, 2, 1})) == W({1, 2, 1}));
    CHECK(free_reduce(word_concat(W({1, 2}), word_inverse(W({1, 2})))).size() == 0);
}

TEST_CASE("word symmetries", "[words]") {
    SignedWord w = W({1, -2, 1, 2});
    CHECK(apply_word_symmetry(w, WordSymmetry::mirror) == W({-1, 2, -1, -2}));
    CHECK(apply_word_symmetry(apply_word_symmetry(w, WordSymmetry::mirror),
                              WordSymmetry::mirror) == w);
    CHECK(apply_word_symmetry(w, WordSymmetry::inverse_rev) == W({-2, -1, 2, -1}));
    SignedWord v({1, -2}, 5);
    CHECK(apply_word_symmetry(v, WordSymmetry::shift, 2) == SignedWord({3, -4}, 5));
    CHECK_THROWS(apply_word_symmetry(v, WordSymmetry::shift, 3));
}

TEST_CASE("permutation image and writhe", "[words]") {
    CHECK(perm_image(W({})) == std::vector<int>{0, 1, 2});
    CHECK(perm_image(W({1})) == std::vector<int>{1, 0, 2});
    CHECK(perm_image(W({1, 2})) == perm_image(W({1, 2, 1, -1})));
    CHECK(perm_image(W({-1})) == perm_image(W({1})));  // sign-blind
    CHECK(writhe(W({1, -2, 1, 2})) == 2);
    CHECK(writhe(W({-1, -2})) == -2);
}

TEST_CASE("BFS oracle proves the defining braid relations", "[words]") {
    CHECK(braid_equal_bfs(W({1, 2, 1}), W({2, 1, 2})) == BraidEq::equal);
    CHECK(braid_equal_bfs(SignedWord({1, 3}, 4), SignedWord({3, 1}, 4)) == BraidEq::equal);
    CHECK(braid_equal_bfs(W({1, -1}), W({})) == BraidEq::equal);
    // Mixed-sign consequences of the braid relation.
    CHECK(braid_equal_bfs(W({-1, 2, 1}), W({2, 1, -2})) == BraidEq::equal);
    CHECK(braid_equal_bfs(W({1, 2, -1}), W({-2, 1, 2})) == BraidEq::equal);
    CHECK(braid_equal_bfs(W({-1, -2, -1}), W({-2, -1, -2})) == BraidEq::equal);
}

TEST_CASE("BFS oracle rejects distinguishable words fast", "[words]") {
    CHECK(braid_equal_bfs(W({1}), W({2})) == BraidEq::unknown);        // permutation filter
    CHECK(braid_equal_bfs(W({1}), W({-1})) == BraidEq::unknown);       // writhe filter
    CHECK(braid_equal_bfs(W({1, 2}), W({2, 1}), 20000) == BraidEq::unknown);
}

TEST_CASE("handle identities hold in the braid group", "[words]") {
    for (int n = 2; n <= 4; ++n) {
        for (HandleSide side : {HandleSide::A, HandleSide::B}) {
            auto [lhs, rhs] = handle_identity(n, side);
            INFO("n=" << n << " side=" << (side == HandleSide::A ? "A" : "B"));
            CHECK(braid_equal_bfs(lhs, rhs, 2000000) == BraidEq::equal);
        }
    }
}

TEST_CASE("handle reduction template agrees with its source word", "[words]") {
    // n = 2, interior letters must have index < 1, i.e. be empty.
    {
        std::vector<SignedWord> as(2, SignedWord({}, 4));
        SignedWord lhs = handle_reduce_template_lhs(2, as, 4);
        SignedWord rhs = handle_reduce_template(2, as, 4);
        CHECK(braid_equal_bfs(lhs, rhs, 2000000) == BraidEq::equal);
    }
    // n = 3 with one interior letter in {s_1^{+-1}}.
    for (int g : {1, -1}) {
        std::vector<SignedWord> as{SignedWord({g}, 4)};
        SignedWord lhs = handle_reduce_template_lhs(3, as, 4);
        SignedWord rhs = handle_reduce_template(3, as, 4);
        INFO("g=" << g);
        CHECK(braid_equal_bfs(lhs, rhs, 2000000) == BraidEq::equal);
    }
}

TEST_CASE("word parser accepts the documented syntaxes", "[words]") {
    CHECK(parse_word("1 2 -1", 3) == W({1, 2, -1}));
    CHECK(parse_word("1,2,-1", 3) == W({1, 2, -1}));
    CHECK(parse_word("1 2 1'", 3) == W({1, 2, -1}));
    CHECK(parse_word("2' 1", 3) == W({-2, 1}));
    CHECK_THROWS(parse_word("0", 3));
    CHECK_THROWS(parse_word("3", 3));
}
