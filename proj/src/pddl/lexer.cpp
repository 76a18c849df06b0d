#include "fleetplan/pddl/lexer.hpp"

#include <cctype>
#include <cstdlib>

namespace fleetplan::pddl {

namespace {

bool is_symbol_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_' ||
           c == '*' || c == '.';
}

bool is_operator_start(char c) {
    return c == '<' || c == '>' || c == '=' || c == '+' || c == '-' || c == '*' ||
           c == '/';
}

std::string lowered(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    return out;
}

}  // namespace

Lexer::Lexer(std::string_view text) {
    int line = 1;
    int col = 1;
    size_t i = 0;
    const size_t n = text.size();

    auto advance = [&](size_t count) {
        for (size_t k = 0; k < count; ++k) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
            ++i;
        }
    };

    while (i < n) {
        char c = text[i];
        if (c == ';') {
            while (i < n && text[i] != '\n') advance(1);
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance(1);
            continue;
        }

        Token tok;
        tok.pos = {line, col};
        if (c == '(') {
            tok.kind = Token::Kind::LParen;
            advance(1);
        } else if (c == ')') {
            tok.kind = Token::Kind::RParen;
            advance(1);
        } else if (c == ':') {
            size_t start = i + 1;
            size_t len = 0;
            while (start + len < n && is_symbol_char(text[start + len])) ++len;
            if (len == 0) throw SyntaxError(tok.pos, "expected keyword after ':'");
            tok.kind = Token::Kind::Keyword;
            tok.text = lowered(text.substr(start, len));
            advance(len + 1);
        } else if (c == '?') {
            size_t start = i + 1;
            size_t len = 0;
            while (start + len < n && is_symbol_char(text[start + len])) ++len;
            if (len == 0) throw SyntaxError(tok.pos, "expected variable name after '?'");
            tok.kind = Token::Kind::Variable;
            tok.text = lowered(text.substr(start, len));
            advance(len + 1);
        } else if (std::isdigit(static_cast<unsigned char>(c)) ||
                   (c == '-' && i + 1 < n &&
                    std::isdigit(static_cast<unsigned char>(text[i + 1])))) {
            size_t len = (c == '-') ? 1 : 0;
            bool seen_dot = false;
            while (i + len < n) {
                char d = text[i + len];
                if (std::isdigit(static_cast<unsigned char>(d))) {
                    ++len;
                } else if (d == '.' && !seen_dot) {
                    seen_dot = true;
                    ++len;
                } else {
                    break;
                }
            }
            tok.kind = Token::Kind::Number;
            tok.text = std::string(text.substr(i, len));
            tok.number = std::strtod(tok.text.c_str(), nullptr);
            advance(len);
        } else if (is_operator_start(c) && !is_symbol_char(c)) {
            // <, <=, >, >=, =, +, /
            size_t len = 1;
            if ((c == '<' || c == '>') && i + 1 < n && text[i + 1] == '=') len = 2;
            tok.kind = Token::Kind::Symbol;
            tok.text = std::string(text.substr(i, len));
            advance(len);
        } else if (is_symbol_char(c)) {
            size_t len = 0;
            while (i + len < n && is_symbol_char(text[i + len])) ++len;
            tok.kind = Token::Kind::Symbol;
            tok.text = lowered(text.substr(i, len));
            advance(len);
        } else {
            throw SyntaxError(tok.pos, std::string("unexpected character '") + c + "'");
        }
        tokens_.push_back(std::move(tok));
    }

    Token end;
    end.kind = Token::Kind::End;
    end.pos = {line, col};
    tokens_.push_back(std::move(end));
}

const Token& Lexer::next() {
    const Token& t = tokens_[index_];
    if (t.kind != Token::Kind::End) ++index_;
    return t;
}

}  // namespace fleetplan::pddl
