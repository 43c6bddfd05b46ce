#pragma once
#include <cctype>
#include <cstdint>
#include <string>

#include "fsig/errors.hpp"
#include "fsig/poly.hpp"

namespace fsig {

// Parses polynomial expressions over a fixed ring.  Grammar:
//
//   expr   := term (('+' | '-') term)*
//   term   := factor ('*' factor)*
//   factor := base ('^' nat)?
//   base   := integer | variable | '(' expr ')' | '-' factor
//
// Multiplication is always explicit: "2*x*y", never "2xy".
class ExprParser {
 public:
  static Poly parse(const RingPtr& ring, const std::string& text) {
    ExprParser p(ring, text);
    Poly r = p.parse_expr();
    p.skip_ws();
    if (!p.at_end()) p.fail("unexpected trailing input");
    return r;
  }

 private:
  ExprParser(RingPtr ring, const std::string& text)
      : ring_(std::move(ring)), text_(text) {}

  Poly parse_expr() {
    Poly acc = parse_term();
    for (;;) {
      skip_ws();
      if (consume('+')) {
        acc = acc + parse_term();
      } else if (consume('-')) {
        acc = acc - parse_term();
      } else {
        return acc;
      }
    }
  }

  Poly parse_term() {
    Poly acc = parse_factor();
    for (;;) {
      skip_ws();
      if (consume('*'))
        acc = acc * parse_factor();
      else
        return acc;
    }
  }

  Poly parse_factor() {
    Poly base = parse_base();
    skip_ws();
    if (consume('^')) {
      std::uint64_t n = parse_nat("exponent");
      if (n > kMaxExponent) fail("exponent too large");
      return base.pow(n);
    }
    return base;
  }

  Poly parse_base() {
    skip_ws();
    if (at_end()) fail("unexpected end of expression");
    char c = text_[pos_];
    if (c == '(') {
      advance();
      Poly inner = parse_expr();
      skip_ws();
      if (!consume(')')) fail("expected ')'");
      return inner;
    }
    if (c == '-') {
      advance();
      return -parse_factor();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::uint64_t n = parse_nat("integer literal");
      skip_ws();
      if (!at_end() && is_ident_start(text_[pos_]))
        fail("implicit multiplication is not allowed; write '*' explicitly");
      return Poly::constant(ring_, static_cast<long long>(n % ring_->field().p()));
    }
    if (is_ident_start(c)) {
      std::size_t start_line = line_, start_col = col_;
      std::string name;
      while (!at_end() && is_ident_char(text_[pos_])) {
        name += text_[pos_];
        advance();
      }
      int idx = ring_->var_index(name);
      if (idx < 0)
        throw parse_error(start_line, start_col, "unknown variable '" + name + "'");
      return Poly::variable(ring_, static_cast<std::size_t>(idx));
    }
    fail(std::string("unexpected character '") + c + "'");
    return Poly();  // unreachable
  }

  std::uint64_t parse_nat(const char* what) {
    skip_ws();
    if (at_end() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      fail(std::string("expected ") + what);
    std::uint64_t v = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
      if (v > kMaxLiteral) fail(std::string(what) + " out of range");
      advance();
    }
    return v;
  }

  static bool is_ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
  }
  static bool is_ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  }

  void skip_ws() {
    while (!at_end() &&
           (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n' ||
            text_[pos_] == '\r'))
      advance();
  }

  bool consume(char c) {
    if (!at_end() && text_[pos_] == c) {
      advance();
      return true;
    }
    return false;
  }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  bool at_end() const { return pos_ >= text_.size(); }

  [[noreturn]] void fail(const std::string& msg) const {
    throw parse_error(line_, col_, msg);
  }

  static constexpr std::uint64_t kMaxExponent = 1u << 20;
  static constexpr std::uint64_t kMaxLiteral = 1'000'000'000ull;

  RingPtr ring_;
  const std::string& text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

inline Poly parse_poly(const RingPtr& ring, const std::string& text) {
  return ExprParser::parse(ring, text);
}

}  // namespace fsig
