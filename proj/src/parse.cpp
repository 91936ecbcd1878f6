#include "leray/parse.hpp"

#include <cctype>
#include <string>

#include "leray/errors.hpp"

namespace leray {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const Ring& ring) : text_(text), ring_(ring) {}

  MultiPoly parse() {
    skip();
    if (at_end()) fail(ErrorCode::SyntaxError, "empty expression");
    MultiPoly p = expr();
    skip();
    if (!at_end()) fail(ErrorCode::SyntaxError, std::string("unexpected '") + peek() + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(ErrorCode code, const std::string& msg) const {
    int line = 1, col = 1;
    for (std::size_t i = 0; i < pos_ && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw Error(code, msg + " at line " + std::to_string(line) + ", column " + std::to_string(col));
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  void skip() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  MultiPoly expr() {
    MultiPoly acc = term();
    for (;;) {
      if (accept('+')) acc += term();
      else if (accept('-')) acc -= term();
      else return acc;
    }
  }

  MultiPoly term() {
    MultiPoly acc = unary();
    for (;;) {
      if (accept('*')) {
        acc *= unary();
      } else if (accept('/')) {
        std::size_t at = pos_;
        MultiPoly d = unary();
        if (!d.is_constant() || d.constant_term() == 0) {
          pos_ = at;
          fail(ErrorCode::SyntaxError, "division only by a nonzero constant");
        }
        acc *= Rational(1 / d.constant_term());
      } else {
        return acc;
      }
    }
  }

  MultiPoly unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  MultiPoly power() {
    MultiPoly base = primary();
    if (!accept('^')) return base;
    skip();
    if (peek() == '-') fail(ErrorCode::NegativeExponent, "negative exponent");
    if (peek() == '(') {
      // Allow ^(k) with a literal k.
      ++pos_;
      skip();
      if (peek() == '-') fail(ErrorCode::NegativeExponent, "negative exponent");
      unsigned e = integer();
      if (!accept(')')) fail(ErrorCode::SyntaxError, "expected ')'");
      return base.pow(e);
    }
    return base.pow(integer());
  }

  unsigned integer() {
    skip();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail(ErrorCode::SyntaxError, "expected integer exponent");
    unsigned long v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + static_cast<unsigned long>(peek() - '0');
      if (v > 100000) fail(ErrorCode::SyntaxError, "exponent too large");
      ++pos_;
    }
    return static_cast<unsigned>(v);
  }

  MultiPoly primary() {
    skip();
    char c = peek();
    if (c == '(') {
      ++pos_;
      MultiPoly p = expr();
      if (!accept(')')) fail(ErrorCode::SyntaxError, "expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      return MultiPoly::constant(ring_, Rational(Integer(std::string(text_.substr(start, pos_ - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      auto idx = ring_.index(name);
      if (!idx) {
        pos_ = start;
        fail(ErrorCode::UnknownVariable, "unknown variable '" + name + "'");
      }
      return MultiPoly::variable(ring_, *idx);
    }
    if (at_end()) fail(ErrorCode::SyntaxError, "unexpected end of input");
    fail(ErrorCode::SyntaxError, std::string("unexpected '") + c + "'");
  }

  std::string_view text_;
  const Ring& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

MultiPoly parse_poly(std::string_view text, const Ring& ring) { return Parser(text, ring).parse(); }

}  // namespace leray
