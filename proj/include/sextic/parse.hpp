#pragma once

#include <cctype>
#include <string>

#include "sextic/error.hpp"
#include "sextic/mpoly.hpp"

namespace sextic {

namespace detail {

class Parser {
public:
    Parser(std::string text, RingPtr ring) : s_(std::move(text)), R_(std::move(ring)) {}

    MPoly parse() {
        MPoly p = expr();
        skip_ws();
        if (pos_ < s_.size()) fail("unexpected character '" + std::string(1, s_[pos_]) + "'");
        return p;
    }

private:
    std::string s_;
    RingPtr R_;
    std::size_t pos_ = 0;
    int line_ = 1, col_ = 1;

    [[noreturn]] void fail(const std::string& msg) {
        throw AnalyzerError("SyntaxError", msg + " at line " + std::to_string(line_) + ", column " +
                                               std::to_string(col_));
    }
    void advance() {
        if (pos_ < s_.size()) {
            if (s_[pos_] == '\n') {
                ++line_;
                col_ = 1;
            } else {
                ++col_;
            }
            ++pos_;
        }
    }
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) advance();
    }
    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    bool eat(char c) {
        if (peek() == c) {
            advance();
            return true;
        }
        return false;
    }

    MPoly expr() {
        MPoly p = eat('-') ? MPoly(R_) - term() : (eat('+'), term());
        while (true) {
            if (eat('+'))
                p += term();
            else if (eat('-'))
                p -= term();
            else
                return p;
        }
    }

    MPoly term() {
        MPoly p = factor();
        while (eat('*')) p = p * factor();
        return p;
    }

    Int integer() {
        skip_ws();
        std::string digits;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            digits += s_[pos_];
            advance();
        }
        if (digits.empty()) fail("expected a number");
        return Int(digits);
    }

    MPoly factor() {
        char c = peek();
        if (c == '(') {
            advance();
            MPoly p = expr();
            if (!eat(')')) fail("expected ')'");
            return maybe_power(p);
        }
        if (c == '-') {
            advance();
            return MPoly(R_) - factor();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Int n = integer();
            Int d = 1;
            if (eat('/')) d = integer();
            if (d == 0) fail("division by zero in coefficient");
            return maybe_power(MPoly(R_, FElem(Rational(n, d))));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::string name;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
                name += s_[pos_];
                advance();
            }
            if (!R_->has_var(name))
                throw AnalyzerError("UnknownVariable",
                                    "'" + name + "' is not a coordinate (line " +
                                        std::to_string(line_) + ", column " + std::to_string(col_) +
                                        ")");
            return maybe_power(MPoly::variable(R_, name));
        }
        fail("expected a term");
    }

    MPoly maybe_power(MPoly base) {
        if (!eat('^')) return base;
        Int k = integer();
        if (k < 0 || k > 64) fail("exponent out of range");
        MPoly r(R_, FElem(1));
        for (Int i = 0; i < k; ++i) r = r * base;
        return r;
    }
};

} // namespace detail

/// Parse an exact-coefficient polynomial expression over the given ring.
/// Grammar: signed sums of '*'-separated factors; factors are rationals
/// ("3", "1/2"), variables with optional "^k", or parenthesized sums.
inline MPoly parse_polynomial(const std::string& text, RingPtr ring = wps_ring()) {
    return detail::Parser(text, std::move(ring)).parse();
}

} // namespace sextic
