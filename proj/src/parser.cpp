#include "polynorm/parser.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

#include "polynorm/error.hpp"

namespace polynorm {
namespace {

constexpr int kMaxDepth = 512;
constexpr unsigned long kMaxPolynomialPower = 4096;

bool is_ident_start(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
}

bool is_ident_char(char c) {
  return is_ident_start(c) || (c >= '0' && c <= '9');
}

bool is_digit(char c) { return c >= '0' && c <= '9'; }

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

class Parser {
 public:
  Parser(std::string_view source, const std::vector<std::string>& variables)
      : tokens_(tokenize(source)) {
    for (std::size_t i = 0; i < variables.size(); ++i) {
      if (!index_.emplace(variables[i], i).second) {
        throw ParseError("variable '" + variables[i] + "' declared twice", 0);
      }
    }
    num_vars_ = variables.size();
  }

  LaurentPolynomial run() {
    if (peek().kind == TokenKind::kEnd) {
      throw ParseError("empty expression", peek().position);
    }
    LaurentPolynomial value = expr();
    if (peek().kind != TokenKind::kEnd) {
      throw ParseError(std::string("unexpected '") +
                           std::string(peek().lexeme) + "'",
                       peek().position);
    }
    return value;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& advance() { return tokens_[pos_++]; }

  bool starts_juxtaposed_factor() const {
    return peek().kind == TokenKind::kVariable ||
           peek().kind == TokenKind::kLParen;
  }

  LaurentPolynomial expr() {
    Depth guard(*this);
    LaurentPolynomial value = term();
    while (peek().kind == TokenKind::kPlus ||
           peek().kind == TokenKind::kMinus) {
      const bool minus = advance().kind == TokenKind::kMinus;
      LaurentPolynomial rhs = term();
      value = minus ? subtract(value, rhs) : add(value, rhs);
    }
    return value;
  }

  LaurentPolynomial term() {
    LaurentPolynomial value = factor();
    while (true) {
      if (peek().kind == TokenKind::kStar) {
        advance();
      } else if (!starts_juxtaposed_factor()) {
        break;
      }
      value = multiply(value, factor());
    }
    return value;
  }

  LaurentPolynomial factor() {
    Depth guard(*this);
    if (peek().kind == TokenKind::kMinus) {
      advance();
      return negate(factor());
    }
    if (peek().kind == TokenKind::kPlus) {
      advance();
      return factor();
    }
    LaurentPolynomial base = atom();
    if (peek().kind != TokenKind::kCaret) return base;
    const std::size_t caret_at = advance().position;
    bool negative = false;
    if (peek().kind == TokenKind::kMinus || peek().kind == TokenKind::kPlus) {
      negative = advance().kind == TokenKind::kMinus;
    }
    if (peek().kind != TokenKind::kInteger) {
      throw ParseError("exponent must be an integer literal", peek().position);
    }
    const Token& exp_token = advance();
    Integer exponent(std::string(exp_token.lexeme), 10);
    if (negative) exponent = -exponent;
    return raise(base, exponent, caret_at);
  }

  LaurentPolynomial atom() {
    const Token& tok = peek();
    switch (tok.kind) {
      case TokenKind::kInteger: {
        advance();
        return LaurentPolynomial::constant(num_vars_,
                                           Integer(std::string(tok.lexeme), 10));
      }
      case TokenKind::kVariable: {
        advance();
        const auto it = index_.find(std::string(tok.lexeme));
        if (it == index_.end()) {
          throw ParseError("undeclared variable '" + std::string(tok.lexeme) +
                               "'",
                           tok.position);
        }
        ExponentVector e(num_vars_);
        e[it->second] = 1;
        return LaurentPolynomial::monomial(std::move(e));
      }
      case TokenKind::kLParen: {
        advance();
        LaurentPolynomial inner = expr();
        if (peek().kind != TokenKind::kRParen) {
          throw ParseError("expected ')'", peek().position);
        }
        advance();
        return inner;
      }
      case TokenKind::kEnd:
        throw ParseError("unexpected end of input", tok.position);
      default:
        throw ParseError("unexpected '" + std::string(tok.lexeme) + "'",
                         tok.position);
    }
  }

  LaurentPolynomial raise(const LaurentPolynomial& base,
                          const Integer& exponent, std::size_t at) const {
    if (base.is_monomial()) {
      const auto& [e, c] = *base.terms().begin();
      if (exponent < 0 && abs(c) != 1) {
        throw ParseError("negative power of a non-unit monomial", at);
      }
      // c is +-1 when the exponent is large or negative, so only its parity
      // matters there.
      Integer coeff = 1;
      if (abs(c) == 1) {
        coeff = (c < 0 && mpz_odd_p(exponent.get_mpz_t())) ? -1 : 1;
      } else {
        if (!exponent.fits_ulong_p() ||
            exponent.get_ui() > kMaxPolynomialPower) {
          throw ParseError("exponent too large", at);
        }
        mpz_pow_ui(coeff.get_mpz_t(), c.get_mpz_t(), exponent.get_ui());
      }
      ExponentVector scaled(e.size());
      for (std::size_t i = 0; i < e.size(); ++i) scaled[i] = e[i] * exponent;
      return LaurentPolynomial(num_vars_, {{std::move(scaled), coeff}});
    }
    if (exponent < 0) {
      throw ParseError(
          "negative power of a polynomial that is not a single monomial", at);
    }
    if (base.is_zero()) {
      return exponent == 0 ? LaurentPolynomial::constant(num_vars_, 1) : base;
    }
    if (!exponent.fits_ulong_p() || exponent.get_ui() > kMaxPolynomialPower) {
      throw ParseError("exponent too large", at);
    }
    return power(base, exponent.get_ui());
  }

  struct Depth {
    explicit Depth(Parser& p) : parser(p) {
      if (++parser.depth_ > kMaxDepth) {
        throw ParseError("expression nested too deeply",
                         parser.peek().position);
      }
    }
    ~Depth() { --parser.depth_; }
    Parser& parser;
  };

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  int depth_ = 0;
  std::size_t num_vars_ = 0;
  std::unordered_map<std::string, std::size_t> index_;
};

}  // namespace

const char* token_kind_name(TokenKind kind) {
  switch (kind) {
    case TokenKind::kInteger: return "INT";
    case TokenKind::kVariable: return "VAR";
    case TokenKind::kPlus: return "PLUS";
    case TokenKind::kMinus: return "MINUS";
    case TokenKind::kStar: return "STAR";
    case TokenKind::kCaret: return "CARET";
    case TokenKind::kLParen: return "LPAREN";
    case TokenKind::kRParen: return "RPAREN";
    case TokenKind::kEnd: return "END";
  }
  return "?";
}

std::vector<Token> tokenize(std::string_view source) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < source.size()) {
    const char c = source[i];
    if (is_space(c)) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    TokenKind kind;
    if (is_digit(c)) {
      while (i < source.size() && is_digit(source[i])) ++i;
      kind = TokenKind::kInteger;
    } else if (is_ident_start(c)) {
      while (i < source.size() && is_ident_char(source[i])) ++i;
      kind = TokenKind::kVariable;
    } else {
      switch (c) {
        case '+': kind = TokenKind::kPlus; break;
        case '-': kind = TokenKind::kMinus; break;
        case '*': kind = TokenKind::kStar; break;
        case '^': kind = TokenKind::kCaret; break;
        case '(': kind = TokenKind::kLParen; break;
        case ')': kind = TokenKind::kRParen; break;
        default:
          throw ParseError("unexpected character '" + std::string(1, c) + "'",
                           start);
      }
      ++i;
    }
    tokens.push_back({kind, source.substr(start, i - start), start});
  }
  tokens.push_back({TokenKind::kEnd, source.substr(source.size()),
                    source.size()});
  return tokens;
}

LaurentPolynomial parse(std::string_view source,
                        const std::vector<std::string>& variables) {
  return Parser(source, variables).run();
}

std::vector<std::string> infer_variables(std::string_view source) {
  std::set<std::string> names;
  for (const Token& t : tokenize(source)) {
    if (t.kind == TokenKind::kVariable) names.emplace(t.lexeme);
  }
  return {names.begin(), names.end()};
}

LaurentPolynomial parse(std::string_view source) {
  return parse(source, infer_variables(source));
}

}  // namespace polynorm
