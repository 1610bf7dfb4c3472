#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "polynorm/laurent.hpp"

namespace polynorm {

enum class TokenKind {
  kInteger,
  kVariable,
  kPlus,
  kMinus,
  kStar,
  kCaret,
  kLParen,
  kRParen,
  kEnd,
};

struct Token {
  TokenKind kind;
  std::string_view lexeme;  // slice of the tokenized source
  std::size_t position;     // byte offset of the first character

  friend bool operator==(const Token&, const Token&) = default;
};

const char* token_kind_name(TokenKind kind);

// Maximal-munch lexer. The returned lexemes point into source. The stream
// always ends with a kEnd token positioned at source.size(). Throws
// ParseError at the offset of the first unrecognized byte.
std::vector<Token> tokenize(std::string_view source);

// Grammar:
//   expr   := term (('+' | '-') term)*
//   term   := factor ('*'? factor)*     juxtaposition only before a
//                                       variable or '('
//   factor := '-' factor | atom ('^' ['-'|'+'] integer)?
//   atom   := integer | variable | '(' expr ')'
//
// '^' binds tighter than unary minus. Negative exponents are allowed only on
// unit monomials (coefficient +-1). Throws ParseError on syntax errors,
// undeclared variables, empty input and non-invertible bases.
LaurentPolynomial parse(std::string_view source,
                        const std::vector<std::string>& variables);

// Distinct identifiers occurring in source, sorted lexicographically.
std::vector<std::string> infer_variables(std::string_view source);

// parse(source, infer_variables(source)).
LaurentPolynomial parse(std::string_view source);

}  // namespace polynorm
