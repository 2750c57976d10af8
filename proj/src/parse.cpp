#include "hyperzero/parse.hpp"

#include <cctype>
#include <cstdlib>
#include <map>

#include "hyperzero/errors.hpp"

namespace hz {
namespace {

const std::map<std::string, std::size_t>& basis_tokens() {
  static const std::map<std::string, std::size_t> table = {
      {"i", 1}, {"j", 2}, {"ij", 3}, {"k", 4}, {"ik", 5}, {"jk", 6}, {"ijk", 7}};
  return table;
}

struct Token {
  enum Kind { Number, Basis, Var, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };
  Kind kind = End;
  double value = 0.0;
  std::size_t basis = 0;
  std::size_t pos = 0;
};

class Lexer {
public:
  explicit Lexer(const std::string& text) : text_(text) { advance(); }

  const Token& peek() const { return current_; }

  Token take() {
    Token t = current_;
    advance();
    return t;
  }

private:
  void advance() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    current_ = Token{};
    current_.pos = pos_;
    if (pos_ >= text_.size()) {
      current_.kind = Token::End;
      return;
    }
    const char c = text_[pos_];
    switch (c) {
      case '+': current_.kind = Token::Plus; ++pos_; return;
      case '-': current_.kind = Token::Minus; ++pos_; return;
      case '*': current_.kind = Token::Star; ++pos_; return;
      case '/': current_.kind = Token::Slash; ++pos_; return;
      case '^': current_.kind = Token::Caret; ++pos_; return;
      case '(': current_.kind = Token::LParen; ++pos_; return;
      case ')': current_.kind = Token::RParen; ++pos_; return;
      default: break;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      const char* begin = text_.c_str() + pos_;
      char* end = nullptr;
      current_.value = std::strtod(begin, &end);
      if (end == begin) throw ParseError("malformed number", pos_);
      pos_ += static_cast<std::size_t>(end - begin);
      current_.kind = Token::Number;
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t len = 0;
      while (pos_ + len < text_.size() &&
             std::isalpha(static_cast<unsigned char>(text_[pos_ + len])))
        ++len;
      const std::string word = text_.substr(pos_, len);
      pos_ += len;
      if (word == "w") {
        current_.kind = Token::Var;
        return;
      }
      const auto it = basis_tokens().find(word);
      if (it == basis_tokens().end())
        throw ParseError("unknown symbol '" + word + "', expected w or a basis token",
                         current_.pos);
      current_.kind = Token::Basis;
      current_.basis = it->second;
      return;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", pos_);
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  Token current_;
};

class Parser {
public:
  Parser(const std::string& text, const Tolerances& tol) : lex_(text), tol_(tol) {}

  OctPoly parse() {
    OctPoly p = expr();
    if (lex_.peek().kind != Token::End)
      throw ParseError("trailing input, expected end of expression", lex_.peek().pos);
    return p;
  }

private:
  OctPoly expr() {
    bool negate = false;
    if (lex_.peek().kind == Token::Plus) lex_.take();
    else if (lex_.peek().kind == Token::Minus) { lex_.take(); negate = true; }
    OctPoly acc = prod();
    if (negate) acc = sub(OctPoly(), acc, tol_);
    while (lex_.peek().kind == Token::Plus || lex_.peek().kind == Token::Minus) {
      const bool minus = lex_.take().kind == Token::Minus;
      const OctPoly rhs = prod();
      acc = minus ? sub(acc, rhs, tol_) : add(acc, rhs, tol_);
    }
    return acc;
  }

  // Left-associative star products; juxtaposition of a factor with a basis
  // token, w, or a parenthesized expression also multiplies.
  OctPoly prod() {
    OctPoly acc = factor();
    for (;;) {
      const Token::Kind kind = lex_.peek().kind;
      if (kind == Token::Star) {
        lex_.take();
        acc = star_mul(acc, factor(), tol_);
      } else if (kind == Token::Slash) {
        const std::size_t pos = lex_.take().pos;
        const OctPoly rhs = factor();
        if (rhs.degree() > 0)
          throw ParseError("can only divide by a constant", pos);
        if (rhs.is_zero() || norm(rhs.coeff(0)) <= tol_.abs)
          throw ParseError("division by zero", pos);
        acc = scale(acc, inverse(rhs.coeff(0), tol_), Side::Right, tol_);
      } else if (kind == Token::Basis || kind == Token::Var || kind == Token::LParen) {
        acc = star_mul(acc, factor(), tol_);
      } else {
        return acc;
      }
    }
  }

  OctPoly factor() {
    const Token t = lex_.take();
    switch (t.kind) {
      case Token::Number:
        return OctPoly::constant(Octonion(t.value));
      case Token::Basis:
        return OctPoly::constant(Octonion::basis(t.basis));
      case Token::Var: {
        std::size_t exponent = 1;
        if (lex_.peek().kind == Token::Caret) {
          lex_.take();
          const Token e = lex_.take();
          if (e.kind != Token::Number || e.value < 0.0 ||
              e.value != static_cast<double>(static_cast<std::size_t>(e.value)))
            throw ParseError("expected a non-negative integer exponent", e.pos);
          exponent = static_cast<std::size_t>(e.value);
        }
        std::vector<Octonion> c(exponent + 1);
        c[exponent] = Octonion(1.0);
        return OctPoly(std::move(c));
      }
      case Token::LParen: {
        OctPoly inner = expr();
        const Token close = lex_.take();
        if (close.kind != Token::RParen)
          throw ParseError("expected ')'", close.pos);
        return inner;
      }
      default:
        throw ParseError("expected a number, basis token, w, or '('", t.pos);
    }
  }

  Lexer lex_;
  const Tolerances& tol_;
};

}  // namespace

OctPoly parse_poly(const std::string& text, const Tolerances& tol) {
  return Parser(text, tol).parse();
}

Octonion parse_octonion(const std::string& text, const Tolerances& tol) {
  const OctPoly p = parse_poly(text, tol);
  if (p.degree() > 0)
    throw ParseError("expected a constant octonion expression, found w", 0);
  return p.coeff(0);
}

}  // namespace hz
