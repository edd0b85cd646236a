#include "qsymm/expr.hpp"

#include <cctype>
#include <stdexcept>
#include <string>

namespace qsymm {

namespace {

class Parser {
 public:
  Parser(std::string_view s, const VarTablePtr& t) : s_(s), t_(t) {}

  RatFunc parse() {
    RatFunc r = sum();
    skip();
    if (i_ != s_.size()) fail("unexpected '" + std::string(1, s_[i_]) + "'");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("expression \"" + std::string(s_) + "\": " + what);
  }
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool eat(char c) {
    skip();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }

  RatFunc sum() {
    RatFunc r = product();
    for (;;) {
      if (eat('+'))
        r += product();
      else if (eat('-'))
        r -= product();
      else
        return r;
    }
  }
  RatFunc product() {
    RatFunc r = unary();
    for (;;) {
      if (eat('*')) {
        r *= unary();
      } else if (eat('/')) {
        RatFunc d = unary();
        if (d.is_zero()) fail("division by zero");
        r /= d;
      } else {
        return r;
      }
    }
  }
  RatFunc unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }
  RatFunc power() {
    RatFunc b = atom();
    if (!eat('^')) return b;
    bool neg = eat('-');
    if (!neg && eat('(')) {
      neg = eat('-');
      long e = integer();
      if (!eat(')')) fail("expected ')'");
      return raise(b, neg ? -e : e);
    }
    long e = integer();
    return raise(b, neg ? -e : e);
  }
  RatFunc raise(const RatFunc& b, long e) {
    if (b.is_zero() && e < 0) fail("zero to a negative power");
    return b.pow(static_cast<int>(e));
  }
  long integer() {
    skip();
    std::size_t st = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (st == i_) fail("expected an integer exponent");
    return std::stol(std::string(s_.substr(st, i_ - st)));
  }
  RatFunc atom() {
    skip();
    if (eat('(')) {
      RatFunc r = sum();
      if (!eat(')')) fail("expected ')'");
      return r;
    }
    if (i_ >= s_.size()) fail("unexpected end");
    char c = s_[i_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t st = i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      return RatFunc(t_, ExactScalar(std::string(s_.substr(st, i_ - st))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t st = i_;
      while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) ++i_;
      std::string name(s_.substr(st, i_ - st));
      try {
        return LaurentPoly::variable(t_, name);
      } catch (const std::exception&) {
        fail("unknown variable '" + name + "'");
      }
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  const VarTablePtr& t_;
  std::size_t i_ = 0;
};

}  // namespace

RatFunc parse_expression(std::string_view text, const VarTablePtr& table) { return Parser(text, table).parse(); }

}  // namespace qsymm
