/**
 * @file words.hpp
 * @brief Signed braid words, their symmetries, Dehornoy handle-reduction
 *        identities, and a bounded-search equality oracle for braid groups.
 *
 * A signed word is a sequence of nonzero integers: letter i stands for the
 * Artin generator s_i and -i for its inverse.  Magnitudes are bounded by the
 * strand count.  The equality oracle searches the rewriting graph generated
 * by free reduction, far commutation, the braid relation and its mixed-sign
 * consequences, plus bounded insertion of cancelling pairs; it never reports
 * a false "equal" and answers "unknown" when the budget runs out.
 */
#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace cubiq {

/// Signed braid word on a fixed number of strands.
struct SignedWord {
    std::vector<int> letters;
    int strands = 3;

    SignedWord() = default;
    SignedWord(std::vector<int> ls, int n) : letters(std::move(ls)), strands(n) {
        for (int x : letters)
            if (x == 0 || std::abs(x) >= strands)
                throw std::invalid_argument("SignedWord: letter out of range");
    }

    std::size_t size() const { return letters.size(); }
    bool empty() const { return letters.empty(); }
    bool operator==(const SignedWord& o) const {
        return strands == o.strands && letters == o.letters;
    }
    bool operator!=(const SignedWord& o) const { return !(*this == o); }
    bool operator<(const SignedWord& o) const {
        if (strands != o.strands) return strands < o.strands;
        if (letters.size() != o.letters.size()) return letters.size() < o.letters.size();
        return letters < o.letters;
    }

    std::string str() const {
        std::ostringstream os;
        for (std::size_t i = 0; i < letters.size(); ++i) {
            if (i) os << " ";
            os << letters[i];
        }
        return os.str();
    }
};

/// Remove all adjacent cancelling pairs i, -i (idempotent).
inline SignedWord free_reduce(const SignedWord& w) {
    std::vector<int> out;
    out.reserve(w.letters.size());
    for (int x : w.letters) {
        if (!out.empty() && out.back() == -x)
            out.pop_back();
        else
            out.push_back(x);
    }
    return SignedWord(std::move(out), w.strands);
}

/// Concatenate then freely reduce.
inline SignedWord word_concat(const SignedWord& x, const SignedWord& y) {
    if (x.strands != y.strands) throw std::invalid_argument("word_concat: strand mismatch");
    std::vector<int> ls = x.letters;
    ls.insert(ls.end(), y.letters.begin(), y.letters.end());
    return free_reduce(SignedWord(std::move(ls), x.strands));
}

/// Group inverse: reverse order and negate letters.
inline SignedWord word_inverse(const SignedWord& w) {
    std::vector<int> ls(w.letters.rbegin(), w.letters.rend());
    for (int& x : ls) x = -x;
    return SignedWord(std::move(ls), w.strands);
}

enum class WordSymmetry { mirror, inverse_rev, shift };

/**
 * @brief Word-level symmetries.
 *
 * mirror      : letterwise negation  (word part of the automorphism phi)
 * inverse_rev : reverse and negate   (word part of the anti-automorphism psi)
 * shift       : s_i -> s_{i+k}       (the shift morphism on more strands)
 */
inline SignedWord apply_word_symmetry(const SignedWord& w, WordSymmetry kind, int k = 0) {
    switch (kind) {
        case WordSymmetry::mirror: {
            std::vector<int> ls = w.letters;
            for (int& x : ls) x = -x;
            return SignedWord(std::move(ls), w.strands);
        }
        case WordSymmetry::inverse_rev:
            return word_inverse(w);
        case WordSymmetry::shift: {
            std::vector<int> ls = w.letters;
            for (int& x : ls) x = (x > 0 ? x + k : x - k);
            for (int x : ls)
                if (x == 0 || std::abs(x) >= w.strands)
                    throw std::out_of_range("apply_word_symmetry: shift out of range");
            return SignedWord(std::move(ls), w.strands);
        }
    }
    throw std::logic_error("unreachable");
}

/// Image of the word in the symmetric group S_n (one-line notation).
inline std::vector<int> perm_image(const SignedWord& w) {
    std::vector<int> p(w.strands);
    std::iota(p.begin(), p.end(), 0);
    for (int x : w.letters) {
        int i = std::abs(x) - 1;
        std::swap(p[i], p[i + 1]);
    }
    return p;
}

/// Writhe: sum of letter signs (abelianization image).
inline int writhe(const SignedWord& w) {
    int s = 0;
    for (int x : w.letters) s += (x > 0 ? 1 : -1);
    return s;
}

enum class BraidEq { equal, unknown };

/**
 * @brief Bounded BFS equality oracle over the Artin presentation.
 *
 * Reduces the question w1 = w2 to reaching the empty word from the free
 * reduction of w1 * w2^{-1}.  Moves: far commutation, the braid relation and
 * its mixed-sign variants (all length-preserving), and insertion of
 * cancelling pairs up to a small slack above the initial length.  Permutation
 * image and writhe pre-filters reject inequality cheaply.
 */
inline BraidEq braid_equal_bfs(const SignedWord& w1, const SignedWord& w2,
                               std::size_t node_budget = 1000000, int length_slack = 2) {
    if (w1.strands != w2.strands) throw std::invalid_argument("braid_equal_bfs: strand mismatch");
    SignedWord start = word_concat(w1, word_inverse(w2));
    if (start.empty()) return BraidEq::equal;
    // Sound pre-filters: distinct permutation image or writhe means not equal.
    SignedWord empty({}, w1.strands);
    if (perm_image(start) != perm_image(empty)) return BraidEq::unknown;
    if (writhe(start) != 0) return BraidEq::unknown;

    const std::size_t max_len = start.size() + static_cast<std::size_t>(length_slack);
    std::set<std::vector<int>> seen;
    std::queue<std::vector<int>> frontier;
    seen.insert(start.letters);
    frontier.push(start.letters);
    const int n = w1.strands;

    auto push = [&](std::vector<int>&& cand) -> bool {
        SignedWord r = free_reduce(SignedWord(std::move(cand), n));
        if (r.empty()) return true;
        if (r.size() > max_len) return false;
        if (seen.size() >= node_budget) return false;
        if (seen.insert(r.letters).second) frontier.push(r.letters);
        return false;
    };

    while (!frontier.empty() && seen.size() < node_budget) {
        std::vector<int> cur = frontier.front();
        frontier.pop();
        const std::size_t L = cur.size();
        // Far commutation swaps.
        for (std::size_t i = 0; i + 1 < L; ++i) {
            if (std::abs(std::abs(cur[i]) - std::abs(cur[i + 1])) >= 2) {
                std::vector<int> c = cur;
                std::swap(c[i], c[i + 1]);
                if (push(std::move(c))) return BraidEq::equal;
            }
        }
        // Braid relation and mixed-sign consequences on adjacent triples.
        // Valid identities for |i - j| = 1 (x = s_i, y = s_j):
        //   x y x     = y x y
        //   x' y' x'  = y' x' y'
        //   x' y x    = y x y'        x y x'  = y' x y
        //   x y' x'   = y' x' y       x' y' x = y x' y'
        for (std::size_t i = 0; i + 2 < L; ++i) {
            int p = cur[i], q = cur[i + 1], r = cur[i + 2];
            if (std::abs(std::abs(p) - std::abs(q)) != 1) continue;
            if (std::abs(r) != std::abs(p)) continue;
            auto try_replace = [&](int a, int b, int c) {
                std::vector<int> w = cur;
                w[i] = a; w[i + 1] = b; w[i + 2] = c;
                return push(std::move(w));
            };
            bool hit = false;
            if (p == r && ((p > 0) == (q > 0)))
                hit = try_replace(q, p, q);           // x y x   = y x y  (and all-inverse)
            else if (r == -p && ((q > 0) == (r > 0)))
                hit = try_replace(q, -p, -q);         // x' y x  = y x y' (and its inverse)
            else if (r == -p && ((p > 0) == (q > 0)))
                hit = try_replace(-q, -r, q);         // x y x'  = y' x y (and its inverse)
            if (hit) return BraidEq::equal;
        }
        // Bounded insertion of cancelling pairs (lets BFS pass through
        // slightly longer intermediate words).
        if (L + 2 <= max_len) {
            for (std::size_t i = 0; i <= L; ++i) {
                for (int g = 1; g < n; ++g) {
                    for (int s : {g, -g}) {
                        std::vector<int> c;
                        c.reserve(L + 2);
                        c.insert(c.end(), cur.begin(), cur.begin() + i);
                        c.push_back(s);
                        c.push_back(-s);
                        c.insert(c.end(), cur.begin() + i, cur.end());
                        if (push(std::move(c))) return BraidEq::equal;
                    }
                }
            }
        }
    }
    return BraidEq::unknown;
}

enum class HandleSide { A, B };

/**
 * @brief The two handle-reduction word identities.
 *
 * Side A:
 *   s_n^{-1} (s_{n-1}^{-1} ... s_2^{-1} s_1 s_2^{-1} ... s_{n-1}^{-1}) s_n
 *     = (s_{n-1} ... s_1)(s_n^{-1} ... s_3^{-1} s_2 s_3^{-1} ... s_n^{-1})(s_{n-1} ... s_1)^{-1}
 * Side B is the mirror image (all letters negated).
 */
inline std::pair<SignedWord, SignedWord> handle_identity(int n, HandleSide side) {
    if (n < 2) throw std::invalid_argument("handle_identity: n < 2");
    const int strands = n + 1;
    std::vector<int> lhs;
    lhs.push_back(-n);
    for (int i = n - 1; i >= 2; --i) lhs.push_back(-i);
    lhs.push_back(1);
    for (int i = 2; i <= n - 1; ++i) lhs.push_back(-i);
    lhs.push_back(n);

    std::vector<int> conj;  // s_{n-1} ... s_1
    for (int i = n - 1; i >= 1; --i) conj.push_back(i);
    std::vector<int> rhs = conj;
    for (int i = n; i >= 3; --i) rhs.push_back(-i);
    rhs.push_back(2);
    for (int i = 3; i <= n; ++i) rhs.push_back(-i);
    for (int i = 1; i <= n - 1; ++i) rhs.push_back(-i);  // conj^{-1}

    SignedWord L(lhs, strands), R(rhs, strands);
    if (side == HandleSide::B) {
        L = apply_word_symmetry(L, WordSymmetry::mirror);
        R = apply_word_symmetry(R, WordSymmetry::mirror);
    }
    return {L, R};
}

/**
 * @brief One basic handle-reduction step (the Fig. 1 template).
 *
 * Rewrites  s_n s_{n-1} a_1 s_{n-1} a_2 ... s_{n-1} a_k s_{n-1} s_n^{-1}
 * into      s_{n-1}^{-1} ( s_n (^{s_{n-1}} a_1) s_n ... s_n (^{s_{n-1}} a_k) s_n ) s_{n-1}
 * where the a_i are words in generators of index < n-1 and ^{s_{n-1}} a means
 * conjugation s_{n-1} a s_{n-1}^{-1}.
 */
inline SignedWord handle_reduce_template(int n, const std::vector<SignedWord>& as, int strands) {
    if (n < 2) throw std::invalid_argument("handle_reduce_template: n < 2");
    std::vector<int> out;
    out.push_back(-(n - 1));
    out.push_back(n);
    for (const auto& a : as) {
        out.push_back(n - 1);
        out.insert(out.end(), a.letters.begin(), a.letters.end());
        out.push_back(-(n - 1));
        out.push_back(n);
    }
    out.push_back(n - 1);
    return free_reduce(SignedWord(std::move(out), strands));
}

/// Left-hand side of the same template, for verification against the output.
inline SignedWord handle_reduce_template_lhs(int n, const std::vector<SignedWord>& as,
                                             int strands) {
    std::vector<int> out;
    out.push_back(n);
    for (const auto& a : as) {
        out.push_back(n - 1);
        out.insert(out.end(), a.letters.begin(), a.letters.end());
    }
    out.push_back(n - 1);
    out.push_back(-n);
    return free_reduce(SignedWord(std::move(out), strands));
}

/// Parse CLI word syntax: "1 2 -1", "1,2,-1", or bar syntax "1 2 1'" where a
/// trailing apostrophe means inverse.
inline SignedWord parse_word(const std::string& text, int strands) {
    std::vector<int> ls;
    std::string tok;
    auto flush = [&] {
        if (tok.empty()) return;
        bool inv = false;
        if (tok.back() == '\'') {
            inv = true;
            tok.pop_back();
        }
        if (tok.empty()) throw std::invalid_argument("parse_word: dangling apostrophe");
        int v = std::stoi(tok);
        ls.push_back(inv ? -v : v);
        tok.clear();
    };
    for (char ch : text) {
        if (ch == ' ' || ch == ',' || ch == '\t')
            flush();
        else if (std::isdigit((unsigned char)ch) || ch == '-' || ch == '+' || ch == '\'')
            tok += ch;
        else
            throw std::invalid_argument(std::string("parse_word: bad character '") + ch + "'");
    }
    flush();
    return SignedWord(std::move(ls), strands);
}

}  // namespace cubiq
