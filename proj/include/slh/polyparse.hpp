#pragma once

#include "slh/ratpoly.hpp"

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace slh {

namespace detail {

class PolyParser {
public:
    PolyParser(std::string_view text, const std::vector<std::string>& vars) : text_(text), vars_(vars) {}

    RatPoly parse() {
        RatPoly r = expression();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected character");
        return r;
    }

private:
    // expression := ['+'|'-'] term { ('+'|'-') term }
    RatPoly expression() {
        skip_ws();
        bool negate = false;
        if (peek() == '+' || peek() == '-') negate = text_[pos_++] == '-';
        RatPoly acc = term();
        if (negate) acc = -acc;
        while (true) {
            skip_ws();
            char c = peek();
            if (c != '+' && c != '-') return acc;
            ++pos_;
            RatPoly t = term();
            if (c == '+') acc += t;
            else acc -= t;
        }
    }

    // term := power { ('*'|'/') power }   (division only by rational constants)
    RatPoly term() {
        RatPoly acc = power();
        while (true) {
            skip_ws();
            char c = peek();
            if (c == '*') {
                ++pos_;
                acc *= power();
            } else if (c == '/') {
                ++pos_;
                RatPoly d = power();
                if (d.total_degree() != 0 || d.is_zero()) fail("division by a non-constant or zero");
                acc *= RatPoly(Rational(1) / d.terms().begin()->second);
            } else {
                return acc;
            }
        }
    }

    // power := primary ['^' integer]
    RatPoly power() {
        RatPoly base = primary();
        skip_ws();
        if (peek() == '^') {
            ++pos_;
            skip_ws();
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            if (start == pos_) fail("expected exponent");
            base = base.pow(static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start)))));
        }
        return base;
    }

    RatPoly primary() {
        skip_ws();
        char c = peek();
        if (c == '(') {
            ++pos_;
            RatPoly inner = expression();
            skip_ws();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
            return inner;
        }
        if (c == '-') {
            ++pos_;
            return -power();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.'))
                ++pos_;
            return RatPoly(parse_rational(text_.substr(start, pos_ - start)));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            std::string name(text_.substr(start, pos_ - start));
            for (const auto& v : vars_)
                if (v == name) return RatPoly::variable(name);
            fail("unknown variable '" + name + "'");
        }
        fail("unexpected token");
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("parse_ratpoly: " + what + " at offset " + std::to_string(pos_) + " in '" +
                                    std::string(text_) + "'");
    }

    std::string_view text_;
    const std::vector<std::string>& vars_;
    std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses an infix expression such as "(4-p^2)*(1-x^2)*(3456*p^2 + 4608*x)".
/// Multiplication must be explicit. The result is expressed over `vars`.
inline RatPoly parse_ratpoly(std::string_view text, const std::vector<std::string>& vars) {
    return detail::PolyParser(text, vars).parse().with_vars(vars);
}

}  // namespace slh
