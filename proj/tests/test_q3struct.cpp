// Bimodule filtration of the rank-20 quotient: layer partition, the top
// layer's double eigenvalue, kernel elements, and spanning decompositions.
#include <catch2/catch_amalgamated.hpp>

#include "cubiq/q3struct.hpp"

using namespace cubiq;

static SignedWord W(std::initializer_list<int> ls) {
    return SignedWord(std::vector<int>(ls), 3);
}
static AlgElem E(std::initializer_list<int> ls) { return AlgElem::from_word(W(ls)); }

TEST_CASE("layers partition the 20-word basis with ranks 3+9+7+1", "[q3struct]") {
    auto layers = filtration_layers();
    REQUIRE(layers.size() == 4);
    CHECK(layers[0].expected_rank == 3);
    CHECK(layers[1].expected_rank == 9);
    CHECK(layers[2].expected_rank == 7);
    CHECK(layers[3].expected_rank == 1);
    std::size_t total = 0;
    for (const auto& l : layers) {
        CHECK(l.words.size() == l.expected_rank);
        total += l.words.size();
    }
    CHECK(total == q3_basis2().size());
    auto rep = verify_filtration();
    CHECK(rep.partition_ok);
}

TEST_CASE("top layer carries the double eigenvalue a", "[q3struct]") {
    auto rep = verify_filtration();
    CHECK(rep.top_left_s1);
    CHECK(rep.top_right_s1);
    // Direct check of the coefficient: s1.(2 1' 2) == a.(2 1' 2) mod M_1.
    auto coords = q3_coords2(E({1}) * E({2, -1, 2}) - LP_a() * E({2, -1, 2}));
    REQUIRE(coords.has_value());
    const auto& basis = q3_basis2();
    for (std::size_t j = 0; j < basis.size(); ++j)
        if (basis[j] == W({2, -1, 2})) CHECK((*coords)[j].is_zero());
}

TEST_CASE("kernel elements of the surjection onto the rank-7 layer", "[q3struct]") {
    auto rep = verify_filtration();
    CHECK(rep.kernel1_ok);
    CHECK(rep.kernel2_ok);
    // A perturbed combination must NOT land in M_+ + M_2.
    auto layers = filtration_layers();
    std::vector<SignedWord> low = layers[0].words;
    low.insert(low.end(), layers[1].words.begin(), layers[1].words.end());
    AlgElem bad = E({-1, -2, 1}) - E({1, -2, -1});
    CHECK_FALSE(detail_q3struct::supported_on(bad, low));
}

TEST_CASE("both spanning decompositions hold", "[q3struct]") {
    auto rep = verify_filtration();
    CHECK(rep.decomposition_pos);
    CHECK(rep.decomposition_neg);
    CHECK(rep.ok());
}

TEST_CASE("exchange identity between the two top words", "[q3struct]") {
    // 2' 1 2' has coefficient (bc)^{-1} on 2 1' 2 (basis coordinates).
    auto coords = q3_coords2(E({-2, 1, -2}));
    REQUIRE(coords.has_value());
    const auto& basis = q3_basis2();
    for (std::size_t j = 0; j < basis.size(); ++j)
        if (basis[j] == W({2, -1, 2})) CHECK((*coords)[j] == LP_mono(0, -1, -1));
}
