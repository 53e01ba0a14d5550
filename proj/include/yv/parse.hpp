/**
 * @file parse.hpp
 * @brief Text grammar for elements.
 *
 * term   := rational | [rational "*"] gen ("*" gen)*
 * gen    := ["@" slot ":"] "T[" i "," j ";" r "]"     (Yangian)
 *         | "E[" s ";" i "," j "]"                    (enveloping)
 * input  := [sign] term (sign term)*
 *
 * Whitespace is insignificant.  The canonical printer (Element::str)
 * round-trips through this parser.
 */
#pragma once

#include "yv/element.hpp"

#include <cctype>
#include <string>
#include <string_view>

namespace yv {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, std::size_t pos)
        : std::runtime_error("parse error at position " + std::to_string(pos) + ": " + msg),
          position(pos) {}
    std::size_t position;
};

namespace detail {

class ElementParser {
public:
    ElementParser(ContextPtr ctx, std::string_view text) : ctx_(std::move(ctx)), text_(text) {}

    Element parse() {
        Element result(ctx_);
        skip_ws();
        if (at_end()) throw ParseError("empty input", pos_);
        bool negative = false;
        if (peek() == '+' || peek() == '-') negative = (next() == '-');
        parse_term(result, negative);
        skip_ws();
        while (!at_end()) {
            char s = next();
            if (s != '+' && s != '-') throw ParseError("expected '+' or '-'", pos_ - 1);
            parse_term(result, s == '-');
            skip_ws();
        }
        return result;
    }

private:
    void parse_term(Element& out, bool negative) {
        skip_ws();
        Rational coeff(1);
        Word w;
        bool have_any = false;
        if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            coeff = parse_rational();
            have_any = true;
            skip_ws();
            if (!at_end() && peek() == '*') {
                next();
                parse_factors(w);
            }
        } else {
            parse_factors(w);
            have_any = true;
        }
        if (!have_any) throw ParseError("expected term", pos_);
        if (negative) coeff = -coeff;
        out.add_term(std::move(w), coeff);
    }

    void parse_factors(Word& w) {
        w.push_back(parse_gen());
        skip_ws();
        while (!at_end() && peek() == '*') {
            std::size_t mark = pos_;
            next();
            skip_ws();
            // A '*' may also precede a rational only at term start; inside
            // factors we require a generator.
            if (at_end() || (peek() != 'T' && peek() != 'E' && peek() != '@'))
                throw ParseError("expected generator after '*'", mark + 1);
            w.push_back(parse_gen());
            skip_ws();
        }
    }

    GenSym parse_gen() {
        skip_ws();
        if (at_end()) throw ParseError("expected generator", pos_);
        std::size_t start = pos_;
        int slot = 1;
        if (peek() == '@') {
            next();
            slot = parse_int();
            expect(':');
        }
        char kind = next();
        GenSym g;
        if (kind == 'T') {
            expect('[');
            int i = parse_int();
            expect(',');
            int j = parse_int();
            expect(';');
            int r = parse_int();
            expect(']');
            try {
                g = GenSym::yangian(slot, i, j, r);
            } catch (const std::invalid_argument& e) {
                throw ParseError(e.what(), start);
            }
        } else if (kind == 'E') {
            expect('[');
            int s = parse_int();
            expect(';');
            int i = parse_int();
            expect(',');
            int j = parse_int();
            expect(']');
            try {
                g = GenSym::enveloping(s, i, j);
            } catch (const std::invalid_argument& e) {
                throw ParseError(e.what(), start);
            }
        } else {
            throw ParseError("expected 'T' or 'E'", pos_ - 1);
        }
        try {
            ctx_->validate(g);
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what(), start);
        }
        if (ctx_->kind() == AlgebraKind::yangian && kind == 'E')
            throw ParseError("enveloping generator in a Yangian context", start);
        if (ctx_->kind() == AlgebraKind::enveloping && kind == 'T')
            throw ParseError("Yangian generator in an enveloping context", start);
        return g;
    }

    Rational parse_rational() {
        std::size_t start = pos_;
        std::string num = parse_digits();
        skip_ws();
        if (!at_end() && peek() == '/') {
            next();
            skip_ws();
            std::string den = parse_digits();
            try {
                return Rational::parse(num + "/" + den);
            } catch (const std::invalid_argument& e) {
                throw ParseError(e.what(), start);
            }
        }
        return Rational::parse(num);
    }

    int parse_int() {
        skip_ws();
        std::string d = parse_digits();
        if (d.size() > 6) throw ParseError("integer too large", pos_ - d.size());
        return std::stoi(d);
    }

    std::string parse_digits() {
        skip_ws();
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
            throw ParseError("expected digits", pos_);
        std::string d;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) d.push_back(next());
        return d;
    }

    void expect(char c) {
        skip_ws();
        if (at_end() || peek() != c)
            throw ParseError(std::string("expected '") + c + "'", pos_);
        next();
    }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    char next() { return text_[pos_++]; }

    ContextPtr ctx_;
    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses the element grammar; throws ParseError with a position on bad
/// syntax or out-of-range indices.  Special case: a bare "0" is the zero
/// element.
inline Element parse_element(const ContextPtr& ctx, std::string_view text) {
    return detail::ElementParser(ctx, text).parse();
}

}  // namespace yv
