#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "fleetplan/pddl/errors.hpp"

namespace fleetplan::pddl {

struct Token {
    enum class Kind { LParen, RParen, Symbol, Keyword, Variable, Number, End };

    Kind kind = Kind::End;
    std::string text;    // normalized: lowercase, no ':' / '?' prefix
    double number = 0.0; // Kind::Number
    SourcePos pos;
};

// Tokenizes PDDL text. Comments run from ';' to end of line. Symbols,
// keywords and variables are lowercased here so the rest of the library
// never sees mixed case.
class Lexer {
public:
    explicit Lexer(std::string_view text);

    const Token& peek() const { return tokens_[index_]; }
    const Token& next();
    bool at_end() const { return tokens_[index_].kind == Token::Kind::End; }

private:
    std::vector<Token> tokens_;
    size_t index_ = 0;
};

}  // namespace fleetplan::pddl
