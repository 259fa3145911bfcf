#pragma once

#include <gmpxx.h>

#include <cctype>
#include <string>
#include <string_view>

#include "reflekt/error.hpp"

namespace reflekt::detail {

// Recursive-descent reader for sums of products such as
// "-1/2*z(8)^3 + X1^2*(X2 - z(3))". Values are built through Ops:
//   V Ops::number(const mpz_class&)
//   V Ops::zeta(long n)
//   V Ops::variable(std::string_view name)      // throws if unknown
//   V Ops::divide(const V&, const V&)
//   V Ops::power(const V&, long e)
template <class V, class Ops>
class ExprParser {
public:
  ExprParser(std::string_view text, Ops& ops) : s_(text), ops_(ops) {}

  V parse() {
    V v = expr();
    skip();
    if (pos_ != s_.size()) fail("trailing input");
    return v;
  }

private:
  std::string_view s_;
  std::size_t pos_ = 0;
  Ops& ops_;

  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorCode::ParseError,
                why + " at offset " + std::to_string(pos_) + " in \"" + std::string(s_) + "\"");
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  long integer() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return std::stol(std::string(s_.substr(start, pos_ - start)));
  }

  V expr() {
    bool neg = false;
    if (eat('-')) neg = true;
    else eat('+');
    V acc = term();
    if (neg) acc = -acc;
    for (;;) {
      if (eat('+')) acc = acc + term();
      else if (eat('-')) acc = acc - term();
      else return acc;
    }
  }

  V term() {
    V acc = factor();
    for (;;) {
      if (eat('*')) acc = acc * factor();
      else if (eat('/')) acc = ops_.divide(acc, factor());
      else return acc;
    }
  }

  V factor() {
    V base = primary();
    if (eat('^')) {
      bool neg = eat('-');
      long e = integer();
      base = ops_.power(base, neg ? -e : e);
    }
    return base;
  }

  V primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      V v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (c == '-') {
      ++pos_;
      return -factor();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return ops_.number(mpz_class(std::string(s_.substr(start, pos_ - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      std::string_view name = s_.substr(start, pos_ - start);
      if (name == "z" && eat('(')) {
        long n = integer();
        if (!eat(')')) fail("expected ')' after z(n");
        return ops_.zeta(n);
      }
      return ops_.variable(name);
    }
    fail(std::string("unexpected character '") + c + "'");
  }
};

}  // namespace reflekt::detail
