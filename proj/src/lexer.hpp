#pragma once

#include <string>
#include <vector>

#include "fgrade/errors.hpp"

namespace fgrade::detail {

enum class Tok {
    ident,
    integer,
    lparen,
    rparen,
    lbracket,
    rbracket,
    comma,
    semicolon,
    equals,
    plus,
    plusplus,
    minus,
    star,
    caret,
    slash,
    end
};

struct Token {
    Tok kind;
    std::string text;
    int line;
    int col;
};

inline std::string tok_name(Tok k)
{
    switch (k) {
        case Tok::ident: return "identifier";
        case Tok::integer: return "integer";
        case Tok::lparen: return "'('";
        case Tok::rparen: return "')'";
        case Tok::lbracket: return "'['";
        case Tok::rbracket: return "']'";
        case Tok::comma: return "','";
        case Tok::semicolon: return "';'";
        case Tok::equals: return "'='";
        case Tok::plus: return "'+'";
        case Tok::plusplus: return "'++'";
        case Tok::minus: return "'-'";
        case Tok::star: return "'*'";
        case Tok::caret: return "'^'";
        case Tok::slash: return "'/'";
        case Tok::end: return "end of input";
    }
    return "?";
}

/// Tokenizes the whole input up front; `#` starts a comment to end of line.
std::vector<Token> lex(const std::string& text);

/// Token cursor with location-aware error reporting.
class TokenStream {
public:
    explicit TokenStream(std::vector<Token> toks) : toks_(std::move(toks)) {}

    const Token& peek(int ahead = 0) const
    {
        size_t i = pos_ + static_cast<size_t>(ahead);
        return i < toks_.size() ? toks_[i] : toks_.back();
    }
    const Token& next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
    bool at(Tok k) const { return peek().kind == k; }
    bool accept(Tok k)
    {
        if (!at(k))
            return false;
        next();
        return true;
    }
    Token expect(Tok k, const std::string& context)
    {
        if (!at(k)) {
            const Token& t = peek();
            throw parse_error(t.line, t.col,
                              "expected " + tok_name(k) + " " + context + ", found " +
                                  (t.kind == Tok::end ? tok_name(Tok::end) : "'" + t.text + "'"));
        }
        return next();
    }
    [[noreturn]] void fail(const std::string& msg) const
    {
        const Token& t = peek();
        throw parse_error(t.line, t.col, msg);
    }

private:
    std::vector<Token> toks_;
    size_t pos_ = 0;
};

}  // namespace fgrade::detail
