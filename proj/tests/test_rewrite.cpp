// The three rewriting systems: parsing, normal forms, the 20-word avoiding
// sets, soundness against the defining relators, and local confluence.
#include <algorithm>
#include <catch2/catch_amalgamated.hpp>
#include <set>

#include "cubiq/rewrite.hpp"

using namespace cubiq;

static SignedWord W(std::initializer_list<int> ls) {
    return SignedWord(std::vector<int>(ls), 3);
}

static std::set<SignedWord> as_set(const std::vector<SignedWord>& v) {
    return std::set<SignedWord>(v.begin(), v.end());
}

TEST_CASE("rule tables parse with the expected counts", "[rewrite]") {
    CHECK(build_system(SystemKind::positive).rules.size() == 8);
    CHECK(build_system(SystemKind::signed1).rules.size() == 23);
    CHECK(build_system(SystemKind::signed2).rules.size() == 21);
}

TEST_CASE("avoiding sets are exactly the frozen 20-word lists", "[rewrite]") {
    auto check = [](SystemKind k, const char* frozen) {
        auto sys = build_system(k);
        auto words = enumerate_avoiding(sys);
        auto expect = parse_basis_list(frozen);
        INFO(sys.name);
        CHECK(words.size() == 20);
        CHECK(as_set(words) == as_set(expect));
    };
    check(SystemKind::positive, data::kPositiveBasis);
    check(SystemKind::signed1, data::kSigned1Basis);
    check(SystemKind::signed2, data::kSigned2Basis);
}

TEST_CASE("simple positive normal forms", "[rewrite]") {
    auto sys = build_system(SystemKind::positive);
    CHECK(normal_form(AlgElem::from_word(W({2, 1, 2})), sys) ==
          AlgElem::from_word(W({1, 2, 1})));
    AlgElem cube = normal_form(AlgElem::from_word(W({1, 1, 1})), sys);
    AlgElem expect = LP_u() * AlgElem::from_word(W({1, 1})) -
                     LP_v() * AlgElem::from_word(W({1})) + LP_w() * AlgElem::one(3);
    CHECK(cube == expect);
}

TEST_CASE("normal forms of avoiding words are fixed points", "[rewrite]") {
    for (SystemKind k : {SystemKind::positive, SystemKind::signed1, SystemKind::signed2}) {
        auto sys = build_system(k);
        for (const auto& w : enumerate_avoiding(sys)) {
            INFO(sys.name);
            CHECK(normal_form(AlgElem::from_word(w), sys) == AlgElem::from_word(w));
        }
    }
}

TEST_CASE("defining relators reduce to zero in every applicable system", "[rewrite]") {
    auto [r1, r2] = defining_relations();
    for (SystemKind k : {SystemKind::signed1, SystemKind::signed2}) {
        auto sys = build_system(k);
        INFO(sys.name);
        CHECK(normal_form(r1, sys).terms.empty());
        CHECK(normal_form(r2, sys).terms.empty());
    }
    // r2 involves only positive words.
    auto pos = build_system(SystemKind::positive);
    CHECK(normal_form(r2, pos).terms.empty());
}

TEST_CASE("cubic relations reduce to zero", "[rewrite]") {
    for (SystemKind k : {SystemKind::positive, SystemKind::signed1, SystemKind::signed2}) {
        auto sys = build_system(k);
        for (int g : {1, 2}) {
            INFO(sys.name << " generator " << g);
            CHECK(normal_form(cubic_relation(g, 3), sys).terms.empty());
        }
    }
}

TEST_CASE("signed systems respect group inverses and braid moves", "[rewrite]") {
    for (SystemKind k : {SystemKind::signed1, SystemKind::signed2}) {
        auto sys = build_system(k);
        INFO(sys.name);
        // s_i s_i^{-1} = 1 beyond free reduction: via the quadratic rules.
        AlgElem x = normal_form(AlgElem::from_word(W({2, 2})) *
                                    AlgElem::from_word(W({-2, -2})),
                                sys);
        CHECK(x == AlgElem::one(3));
        // Braid-derived identity s1^{-1} s2 s1 = s2 s1 s2^{-1}.
        CHECK(normal_form(AlgElem::from_word(W({-1, 2, 1})), sys) ==
              normal_form(AlgElem::from_word(W({2, 1, -2})), sys));
        // The braid relation itself.
        CHECK(normal_form(AlgElem::from_word(W({1, 2, 1})), sys) ==
              normal_form(AlgElem::from_word(W({2, 1, 2})), sys));
    }
}

TEST_CASE("normal form is linear and multiplicative into the quotient", "[rewrite]") {
    auto sys = build_system(SystemKind::signed2);
    AlgElem x = AlgElem::from_word(W({2, -1}), LP_a()) + AlgElem::from_word(W({1, 2}));
    AlgElem y = AlgElem::from_word(W({-2, 1, -1, 2, 1}));
    CHECK(normal_form(x * y, sys) == normal_form(normal_form(x, sys) * normal_form(y, sys), sys));
    CHECK(normal_form(x + y, sys) == normal_form(x, sys) + normal_form(y, sys));
}

TEST_CASE("local confluence: leftmost and rightmost strategies agree", "[rewrite]") {
    // Positive system: all positive words up to length 6.
    {
        auto sys = build_system(SystemKind::positive);
        std::vector<SignedWord> samples{SignedWord({}, 3)};
        std::vector<SignedWord> layer = samples;
        for (int len = 1; len <= 6; ++len) {
            std::vector<SignedWord> next;
            for (const auto& w : layer)
                for (int g : {1, 2}) {
                    auto ls = w.letters;
                    ls.push_back(g);
                    next.emplace_back(std::move(ls), 3);
                }
            samples.insert(samples.end(), next.begin(), next.end());
            layer = std::move(next);
        }
        auto rep = check_local_confluence(sys, samples);
        CHECK(rep.ok());
    }
    // Signed systems: all signed words up to length 3 plus the rule overlaps
    // extended by one letter on each side.
    for (SystemKind k : {SystemKind::signed1, SystemKind::signed2}) {
        auto sys = build_system(k);
        std::vector<SignedWord> samples{SignedWord({}, 3)};
        std::vector<SignedWord> layer = samples;
        for (int len = 1; len <= 3; ++len) {
            std::vector<SignedWord> next;
            for (const auto& w : layer)
                for (int g : sys.alphabet) {
                    auto ls = w.letters;
                    ls.push_back(g);
                    next.emplace_back(std::move(ls), 3);
                }
            samples.insert(samples.end(), next.begin(), next.end());
            layer = std::move(next);
        }
        for (const auto& r : sys.rules)
            for (int g : sys.alphabet) {
                std::vector<int> left{g};
                left.insert(left.end(), r.lhs.letters.begin(), r.lhs.letters.end());
                samples.emplace_back(std::move(left), 3);
                std::vector<int> right = r.lhs.letters;
                right.push_back(g);
                samples.emplace_back(std::move(right), 3);
            }
        auto rep = check_local_confluence(sys, samples);
        INFO(sys.name);
        if (!rep.ok()) {
            std::ostringstream os;
            for (const auto& w : rep.divergent) {
                for (int x : w.letters) os << x << " ";
                os << "| ";
            }
            INFO("divergent: " << os.str());
        }
        CHECK(rep.ok());
    }
}
