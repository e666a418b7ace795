/**
 * @file rewrite.hpp
 * @brief The three Groebner-style rewriting systems for the rank-20 cubic
 *        quotient on 3 strands, with normal forms and pattern-avoidance
 *        enumeration.
 *
 * Systems:
 *   - positive : 8 rules on the alphabet {1, 2}
 *   - signed1  : 23 rules, generator ordering 1 < 2 < 1' < 2'
 *   - signed2  : 21 rules, generator ordering 1 < 1' < 2 < 2'
 * Rule data is embedded verbatim in rewrite_data.hpp so the transcription is
 * reviewable line by line.  Strategy: leftmost redex; among patterns matching
 * at the same position the longest wins, then table order.  The systems are
 * expected terminating; hitting the step cap signals a transcription bug.
 */
#pragma once

#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "coeffexpr.hpp"
#include "freealg.hpp"
#include "rewrite_data.hpp"

namespace cubiq {

/// One rewriting rule: fixed pattern word -> R-linear combination.
struct RewriteRule {
    SignedWord lhs;
    AlgElem rhs;
};

enum class SystemKind { positive, signed1, signed2 };

struct RewriteSystem {
    std::string name;
    std::vector<RewriteRule> rules;     // priority = index order
    std::vector<SignedWord> forbidden_patterns;
    std::vector<int> alphabet;          // letters usable in avoiding words

    bool word_avoids(const SignedWord& w) const {
        for (const auto& p : forbidden_patterns) {
            if (p.size() > w.size()) continue;
            for (std::size_t i = 0; i + p.size() <= w.size(); ++i) {
                bool hit = true;
                for (std::size_t j = 0; j < p.size(); ++j)
                    if (w.letters[i + j] != p.letters[j]) { hit = false; break; }
                if (hit) return false;
            }
        }
        return true;
    }
};

namespace detail {

/// Parse a space-separated token word ("1 2' e") on 3 strands.
inline SignedWord parse_token_word(const std::string& s) {
    std::vector<int> ls;
    std::istringstream is(s);
    std::string tok;
    while (is >> tok) {
        if (tok == "e") continue;
        bool inv = tok.back() == '\'';
        if (inv) tok.pop_back();
        int g = std::stoi(tok);
        ls.push_back(inv ? -g : g);
    }
    return SignedWord(std::move(ls), 3);
}

/// Split a rule RHS into signed terms at top-level '+'/'-'.
inline std::vector<std::pair<int, std::string>> split_terms(const std::string& rhs) {
    std::vector<std::pair<int, std::string>> out;
    int depth = 0;
    std::string cur;
    int sign = 1;
    char prev = 0;
    auto flush = [&](int next_sign) {
        // trim
        std::size_t b = cur.find_first_not_of(" \t");
        std::size_t e = cur.find_last_not_of(" \t");
        if (b != std::string::npos) out.emplace_back(sign, cur.substr(b, e - b + 1));
        cur.clear();
        sign = next_sign;
    };
    for (char ch : rhs) {
        if (ch == '(') ++depth;
        if (ch == ')') --depth;
        bool splitter = (ch == '+' || ch == '-') && depth == 0 &&
                        prev != '^' && prev != '*' && prev != '/' && prev != '(' && prev != 0;
        if (splitter) {
            flush(ch == '-' ? -1 : 1);
        } else {
            if (ch == '-' && (prev == 0) && cur.empty()) { sign = -sign; }
            else cur += ch;
        }
        if (!std::isspace((unsigned char)ch)) prev = ch;
    }
    flush(1);
    return out;
}

/// Parse one term "coeff . word" (coefficient optional) into an AlgElem.
inline AlgElem parse_term(int sign, const std::string& term) {
    std::size_t dot = std::string::npos;
    int depth = 0;
    for (std::size_t i = 0; i < term.size(); ++i) {
        if (term[i] == '(') ++depth;
        if (term[i] == ')') --depth;
        if (term[i] == '.' && depth == 0) { dot = i; break; }
    }
    LaurentPoly coeff = LP_one();
    std::string wordpart = term;
    if (dot != std::string::npos) {
        coeff = parse_coeff(term.substr(0, dot));
        wordpart = term.substr(dot + 1);
    }
    if (sign < 0) coeff = -coeff;
    return AlgElem::from_word(parse_token_word(wordpart), coeff);
}

inline std::vector<RewriteRule> parse_rule_table(const char* text) {
    std::vector<RewriteRule> rules;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        std::size_t b = line.find_first_not_of(" \t");
        if (b == std::string::npos || line[b] == '#') continue;
        std::size_t arrow = line.find("~>");
        if (arrow == std::string::npos)
            throw std::invalid_argument("rule table: missing '~>' in: " + line);
        SignedWord lhs = parse_token_word(line.substr(0, arrow));
        AlgElem rhs = AlgElem::zero(3);
        for (const auto& [sg, term] : split_terms(line.substr(arrow + 2)))
            rhs += parse_term(sg, term);
        // No trivial loop: the pattern must not occur inside its own RHS.
        for (const auto& [w, c] : rhs.terms) {
            for (std::size_t i = 0; i + lhs.size() <= w.size(); ++i) {
                bool hit = true;
                for (std::size_t j = 0; j < lhs.size(); ++j)
                    if (w.letters[i + j] != lhs.letters[j]) { hit = false; break; }
                if (hit) throw std::logic_error("rule table: lhs occurs in rhs: " + line);
            }
        }
        rules.push_back(RewriteRule{lhs, rhs});
    }
    return rules;
}

}  // namespace detail

/// Build one of the three systems from its embedded table.
inline RewriteSystem build_system(SystemKind kind) {
    RewriteSystem sys;
    switch (kind) {
        case SystemKind::positive:
            sys.name = "positive";
            sys.rules = detail::parse_rule_table(data::kPositiveRules);
            sys.alphabet = {1, 2};
            break;
        case SystemKind::signed1:
            sys.name = "signed1";
            sys.rules = detail::parse_rule_table(data::kSigned1Rules);
            sys.alphabet = {1, 2, -1, -2};
            break;
        case SystemKind::signed2:
            sys.name = "signed2";
            sys.rules = detail::parse_rule_table(data::kSigned2Rules);
            sys.alphabet = {1, -1, 2, -2};
            break;
    }
    for (const auto& r : sys.rules) sys.forbidden_patterns.push_back(r.lhs);
    return sys;
}

enum class RedexStrategy { leftmost, rightmost };

namespace detail {

/// Find a redex in w: (position, rule index) per the strategy, or nullopt.
inline std::optional<std::pair<std::size_t, std::size_t>> find_redex(
    const RewriteSystem& sys, const SignedWord& w, RedexStrategy strat) {
    auto match_at = [&](std::size_t pos) -> std::optional<std::size_t> {
        std::optional<std::size_t> best;
        for (std::size_t r = 0; r < sys.rules.size(); ++r) {
            const auto& p = sys.rules[r].lhs;
            if (pos + p.size() > w.size()) continue;
            bool hit = true;
            for (std::size_t j = 0; j < p.size(); ++j)
                if (w.letters[pos + j] != p.letters[j]) { hit = false; break; }
            if (!hit) continue;
            // Longest pattern wins; ties go to the earlier table entry.
            if (!best || p.size() > sys.rules[*best].lhs.size()) best = r;
        }
        return best;
    };
    if (strat == RedexStrategy::leftmost) {
        for (std::size_t i = 0; i < w.size(); ++i)
            if (auto r = match_at(i)) return std::make_pair(i, *r);
    } else {
        for (std::size_t i = w.size(); i-- > 0;)
            if (auto r = match_at(i)) return std::make_pair(i, *r);
    }
    return std::nullopt;
}

}  // namespace detail

/**
 * @brief Reduce an element to its normal form: no forbidden pattern occurs in
 *        any surviving word.  Deterministic; throws if step_cap is exhausted
 *        (the systems are expected terminating).
 */
inline AlgElem normal_form(const AlgElem& x, const RewriteSystem& sys, long step_cap = 100000,
                           RedexStrategy strat = RedexStrategy::leftmost) {
    AlgElem cur = x;
    for (long step = 0; step < step_cap; ++step) {
        // Pick the first word (in map order) containing a redex.
        const SignedWord* target = nullptr;
        std::pair<std::size_t, std::size_t> redex;
        for (const auto& [w, c] : cur.terms) {
            if (auto r = detail::find_redex(sys, w, strat)) {
                target = &w;
                redex = *r;
                break;
            }
        }
        if (!target) return cur;
        const SignedWord w = *target;
        const LaurentPoly coeff = cur.terms.at(w);
        const auto& rule = sys.rules[redex.second];
        cur.terms.erase(w);
        // prefix * rhs * suffix, scaled by the old coefficient
        SignedWord prefix(std::vector<int>(w.letters.begin(), w.letters.begin() + redex.first),
                          w.strands);
        SignedWord suffix(
            std::vector<int>(w.letters.begin() + redex.first + rule.lhs.size(), w.letters.end()),
            w.strands);
        for (const auto& [rw, rc] : rule.rhs.terms)
            cur.add(word_concat(word_concat(prefix, rw), suffix), coeff * rc);
    }
    throw std::runtime_error("normal_form: step cap exhausted (nontermination bug?)");
}

/**
 * @brief Enumerate all words over the system's alphabet avoiding every
 *        forbidden pattern, breadth-first by length.  Errors if new avoiding
 *        words still appear at length_cap (non-finiteness signal).
 */
inline std::vector<SignedWord> enumerate_avoiding(const RewriteSystem& sys, int length_cap = 12) {
    std::vector<SignedWord> out;
    std::vector<SignedWord> layer{SignedWord({}, 3)};
    out.push_back(layer[0]);
    for (int len = 1; !layer.empty(); ++len) {
        if (len > length_cap)
            throw std::runtime_error("enumerate_avoiding: length cap exceeded (set not finite?)");
        std::vector<SignedWord> next;
        for (const auto& w : layer) {
            for (int g : sys.alphabet) {
                std::vector<int> ls = w.letters;
                ls.push_back(g);
                SignedWord cand(std::move(ls), 3);
                if (sys.word_avoids(cand)) next.push_back(cand);
            }
        }
        for (const auto& w : next) out.push_back(w);
        layer = std::move(next);
    }
    return out;
}

/// Empirical local-confluence check: leftmost vs rightmost strategies agree.
struct ConfluenceReport {
    std::vector<SignedWord> divergent;
    bool ok() const { return divergent.empty(); }
};

inline ConfluenceReport check_local_confluence(const RewriteSystem& sys,
                                               const std::vector<SignedWord>& samples) {
    ConfluenceReport rep;
    for (const auto& w : samples) {
        AlgElem x = AlgElem::from_word(w);
        if (normal_form(x, sys, 100000, RedexStrategy::leftmost) !=
            normal_form(x, sys, 100000, RedexStrategy::rightmost))
            rep.divergent.push_back(w);
    }
    return rep;
}

/// Parse one of the embedded basis lists ("w | w | ...").
inline std::vector<SignedWord> parse_basis_list(const char* text) {
    std::vector<SignedWord> out;
    std::string s(text);
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t bar = s.find('|', pos);
        std::string piece = s.substr(pos, bar == std::string::npos ? std::string::npos : bar - pos);
        out.push_back(detail::parse_token_word(piece));
        if (bar == std::string::npos) break;
        pos = bar + 1;
    }
    return out;
}

}  // namespace cubiq
