#pragma once

#include "folia/mpoly.hpp"

#include <cctype>
#include <string_view>

namespace folia {

// Recursive-descent parser for the shared expression grammar:
//   expr   := term (('+'|'-') term)*
//   term   := unary ('*' unary)*
//   unary  := '-' unary | power
//   power  := atom ('^' nat)?
//   atom   := rational | variable | '(' expr ')'
//   rational := digits ('/' digits)?
//   variable := [a-z][a-z0-9]*
// '^' takes nonnegative integer exponents only. Errors carry a 0-based offset.
class ExprParser {
public:
    ExprParser(std::string_view text, std::vector<std::string> vars)
        : text_(text), vars_(std::move(vars)) {}

    MPoly parse() {
        MPoly p = parse_expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw input_error("syntax error at offset " + std::to_string(pos_) + ": " + what);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool peek_is(char c) {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    bool eat(char c) {
        if (peek_is(c)) {
            ++pos_;
            return true;
        }
        return false;
    }

    MPoly parse_expr() {
        MPoly acc = parse_term();
        for (;;) {
            if (eat('+'))
                acc += parse_term();
            else if (eat('-'))
                acc -= parse_term();
            else
                return acc;
        }
    }

    MPoly parse_term() {
        MPoly acc = parse_unary();
        while (eat('*')) acc = acc * parse_unary();
        return acc;
    }

    MPoly parse_unary() {
        if (eat('-')) return -parse_unary();
        return parse_power();
    }

    MPoly parse_power() {
        MPoly base = parse_atom();
        if (eat('^')) {
            skip_ws();
            if (pos_ >= text_.size() || text_[pos_] == '-')
                fail("nonnegative integer exponent expected");
            if (!std::isdigit(static_cast<unsigned char>(text_[pos_])))
                fail("nonnegative integer exponent expected");
            long e = 0;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                e = e * 10 + (text_[pos_] - '0');
                if (e > 1'000'000) fail("exponent too large");
                ++pos_;
            }
            return base.pow(static_cast<int>(e));
        }
        return base;
    }

    MPoly parse_atom() {
        skip_ws();
        if (pos_ >= text_.size()) fail("operand expected");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            MPoly inner = parse_expr();
            if (!eat(')')) fail("')' expected");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return parse_rational();
        if (c >= 'a' && c <= 'z') return parse_variable();
        fail("operand expected");
    }

    MPoly parse_rational() {
        Int num = parse_digits();
        if (pos_ < text_.size() && text_[pos_] == '/') {
            ++pos_;
            skip_ws();
            if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
                fail("denominator expected");
            Int den = parse_digits();
            if (den == 0) fail("zero denominator");
            return MPoly::constant(vars_, Rational(num, den));
        }
        return MPoly::constant(vars_, Rational(num));
    }

    Int parse_digits() {
        std::string s;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            s += text_[pos_];
            ++pos_;
        }
        return Int(s);
    }

    MPoly parse_variable() {
        size_t start = pos_;
        std::string name;
        name += text_[pos_++];
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if ((c >= 'a' && c <= 'z') || (c >= '0' && c <= '9'))
                name += text_[pos_++];
            else
                break;
        }
        if (std::find(vars_.begin(), vars_.end(), name) == vars_.end()) {
            pos_ = start;
            throw input_error("unknown variable '" + name + "' at offset " + std::to_string(start));
        }
        return MPoly::variable(vars_, name);
    }

    std::string_view text_;
    std::vector<std::string> vars_;
    size_t pos_ = 0;
};

inline MPoly parse_expression(std::string_view text, std::vector<std::string> vars) {
    return ExprParser(text, std::move(vars)).parse();
}

inline bool valid_variable_name(const std::string& s) {
    if (s.empty() || s[0] < 'a' || s[0] > 'z') return false;
    for (char c : s)
        if (!((c >= 'a' && c <= 'z') || (c >= '0' && c <= '9'))) return false;
    return true;
}

}  // namespace folia
