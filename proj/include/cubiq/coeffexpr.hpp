/**
 * @file coeffexpr.hpp
 * @brief Tiny expression language for Laurent coefficients appearing in the
 *        embedded rule/action tables.
 *
 * Grammar (recursive descent):
 *   expr   := term (('+'|'-') term)*
 *   term   := factor (('*'|'/') factor)*
 *   factor := '-' factor | atom ('^' signed-int)?
 *   atom   := integer | variable | '(' expr ')'
 * Variables: a, b, c and the symmetric sums u = a+b+c, v = ab+bc+ac, w = abc.
 *
 * Evaluation happens in the fraction field; the result must lie in the
 * Laurent ring (all denominators that occur are monomials), and a
 * failed exact division signals a transcription bug loudly.
 */
#pragma once

#include <cctype>
#include <stdexcept>
#include <string>

#include "ring.hpp"

namespace cubiq {

namespace detail {

class CoeffParser {
public:
    explicit CoeffParser(const std::string& s) : text_(s) {}

    Frac parse() {
        Frac r = expr();
        skip();
        if (pos_ != text_.size())
            throw std::invalid_argument("coeff expr: trailing input in '" + text_ + "'");
        return r;
    }

private:
    const std::string& text_;
    std::size_t pos_ = 0;

    void skip() {
        while (pos_ < text_.size() && std::isspace((unsigned char)text_[pos_])) ++pos_;
    }
    bool peek(char c) {
        skip();
        return pos_ < text_.size() && text_[pos_] == c;
    }
    bool eat(char c) {
        if (peek(c)) { ++pos_; return true; }
        return false;
    }

    Frac expr() {
        Frac r = term();
        while (true) {
            if (eat('+')) r = r + term();
            else if (eat('-')) r = r - term();
            else return r;
        }
    }
    Frac term() {
        Frac r = factor();
        while (true) {
            if (eat('*')) r = r * factor();
            else if (eat('/')) r = r / factor();
            else return r;
        }
    }
    Frac factor() {
        if (eat('-')) return -factor();
        Frac base = atom();
        skip();
        if (eat('^')) {
            skip();
            int sign = 1;
            if (eat('-')) sign = -1;
            std::string num;
            while (pos_ < text_.size() && std::isdigit((unsigned char)text_[pos_])) num += text_[pos_++];
            if (num.empty()) throw std::invalid_argument("coeff expr: bad exponent");
            int k = sign * std::stoi(num);
            Frac r(LP_one());
            Frac b = k >= 0 ? base : Frac(LP_one()) / base;
            for (int i = 0; i < std::abs(k); ++i) r = r * b;
            return r;
        }
        return base;
    }
    Frac atom() {
        skip();
        if (pos_ >= text_.size()) throw std::invalid_argument("coeff expr: unexpected end");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Frac r = expr();
            if (!eat(')')) throw std::invalid_argument("coeff expr: missing ')'");
            return r;
        }
        if (std::isdigit((unsigned char)c)) {
            std::string num;
            while (pos_ < text_.size() && std::isdigit((unsigned char)text_[pos_])) num += text_[pos_++];
            return Frac(LaurentPoly::constant(Int(num)));
        }
        ++pos_;
        switch (c) {
            case 'a': return Frac(LP_a());
            case 'b': return Frac(LP_b());
            case 'c': return Frac(LP_c());
            case 'u': return Frac(LP_u());
            case 'v': return Frac(LP_v());
            case 'w': return Frac(LP_w());
        }
        throw std::invalid_argument(std::string("coeff expr: unknown symbol '") + c + "'");
    }
};

}  // namespace detail

/// Parse a coefficient expression; the value must lie in the Laurent ring.
inline LaurentPoly parse_coeff(const std::string& s) {
    Frac f = detail::CoeffParser(s).parse();
    auto p = f.as_poly();
    if (!p)
        throw std::invalid_argument("coeff expr: value not in the Laurent ring: '" + s + "'");
    return *p;
}

}  // namespace cubiq
