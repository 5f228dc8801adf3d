#include <cctype>

#include "fgrade/poly.hpp"
#include "lexer.hpp"

namespace fgrade {

namespace detail {

std::vector<Token> lex(const std::string& text)
{
    std::vector<Token> out;
    int line = 1, col = 1;
    size_t i = 0;
    auto push = [&](Tok k, std::string s) { out.push_back(Token{k, std::move(s), line, col}); };
    while (i < text.size()) {
        char c = text[i];
        if (c == '\n') {
            ++line;
            col = 1;
            ++i;
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++col;
            ++i;
            continue;
        }
        if (c == '#') {
            while (i < text.size() && text[i] != '\n')
                ++i;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t j = i;
            while (j < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_'))
                ++j;
            push(Tok::ident, text.substr(i, j - i));
            col += static_cast<int>(j - i);
            i = j;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t j = i;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])))
                ++j;
            push(Tok::integer, text.substr(i, j - i));
            col += static_cast<int>(j - i);
            i = j;
            continue;
        }
        switch (c) {
            case '(': push(Tok::lparen, "("); break;
            case ')': push(Tok::rparen, ")"); break;
            case '[': push(Tok::lbracket, "["); break;
            case ']': push(Tok::rbracket, "]"); break;
            case ',': push(Tok::comma, ","); break;
            case ';': push(Tok::semicolon, ";"); break;
            case '=': push(Tok::equals, "="); break;
            case '-': push(Tok::minus, "-"); break;
            case '*': push(Tok::star, "*"); break;
            case '^': push(Tok::caret, "^"); break;
            case '/': push(Tok::slash, "/"); break;
            case '+':
                if (i + 1 < text.size() && text[i + 1] == '+') {
                    push(Tok::plusplus, "++");
                    ++i;
                    ++col;
                } else {
                    push(Tok::plus, "+");
                }
                break;
            default:
                throw parse_error(line, col, std::string("unexpected character '") + c + "'");
        }
        ++i;
        ++col;
    }
    out.push_back(Token{Tok::end, "", line, col});
    return out;
}

namespace {

long parse_long(const Token& t)
{
    try {
        return std::stol(t.text);
    } catch (const std::exception&) {
        throw parse_error(t.line, t.col, "integer literal out of range");
    }
}

class PolyParser {
public:
    PolyParser(const PolyRing& ring, TokenStream& ts) : ring_(ring), ts_(ts) {}

    Polynomial expression()
    {
        bool neg = false;
        if (ts_.accept(Tok::minus))
            neg = true;
        else
            ts_.accept(Tok::plus);
        Polynomial acc = termexpr();
        if (neg)
            acc = -acc;
        while (ts_.at(Tok::plus) || ts_.at(Tok::minus)) {
            bool sub = ts_.next().kind == Tok::minus;
            Polynomial t = termexpr();
            acc = sub ? acc - t : acc + t;
        }
        return acc;
    }

private:
    Polynomial termexpr()
    {
        Polynomial acc = factor();
        while (ts_.accept(Tok::star))
            acc = acc * factor();
        return acc;
    }

    Polynomial factor()
    {
        Polynomial base = atom();
        if (ts_.accept(Tok::caret)) {
            Token e = ts_.expect(Tok::integer, "as exponent");
            return base.pow(static_cast<int>(parse_long(e)));
        }
        return base;
    }

    Polynomial atom()
    {
        const Token& t = ts_.peek();
        if (t.kind == Tok::integer) {
            ts_.next();
            long num = parse_long(t);
            if (ts_.accept(Tok::slash)) {
                Token d = ts_.expect(Tok::integer, "as denominator");
                return Polynomial::constant(ring_, ring_.field().from_fraction(num, parse_long(d)));
            }
            return Polynomial::from_int(ring_, num);
        }
        if (t.kind == Tok::ident) {
            int idx = ring_.var_index(t.text);
            if (idx < 0)
                throw parse_error(t.line, t.col, "unknown variable '" + t.text + "'");
            ts_.next();
            return Polynomial::variable(ring_, idx);
        }
        if (ts_.accept(Tok::lparen)) {
            Polynomial inner = expression();
            ts_.expect(Tok::rparen, "to close expression");
            return inner;
        }
        if (ts_.accept(Tok::minus))
            return -factor();
        ts_.fail("expected a polynomial term, found " +
                 (t.kind == Tok::end ? tok_name(Tok::end) : "'" + t.text + "'"));
    }

    const PolyRing& ring_;
    TokenStream& ts_;
};

}  // namespace

Polynomial parse_polynomial_expr(const PolyRing& ring, TokenStream& ts)
{
    return PolyParser(ring, ts).expression();
}

}  // namespace detail

Polynomial parse_polynomial(const PolyRing& ring, const std::string& text)
{
    detail::TokenStream ts(detail::lex(text));
    Polynomial p = detail::parse_polynomial_expr(ring, ts);
    if (!ts.at(detail::Tok::end))
        ts.fail("trailing input after polynomial");
    return p;
}

}  // namespace fgrade
