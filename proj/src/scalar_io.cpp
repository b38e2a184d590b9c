#include <cctype>

#include "necklace/errors.hpp"
#include "necklace/scalar.hpp"
#include "necklace/variables.hpp"

namespace necklace {
namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  Scalar parse_all() {
    Scalar v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return v;
  }

 private:
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
  [[noreturn]] void fail(const std::string& msg) {
    throw ParseError(msg + " at offset " + std::to_string(pos_) + " in \"" + std::string(s_) + "\"");
  }

  Scalar expr() {
    Scalar v = term();
    for (;;) {
      if (eat('+'))
        v += term();
      else if (eat('-'))
        v -= term();
      else
        return v;
    }
  }
  Scalar term() {
    Scalar v = unary();
    for (;;) {
      if (eat('*'))
        v *= unary();
      else if (eat('/')) {
        Scalar d = unary();
        if (d.is_zero()) fail("division by zero");
        v /= d;
      } else
        return v;
    }
  }
  Scalar unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }
  Scalar power() {
    Scalar b = primary();
    if (eat('^')) {
      skip();
      bool neg = false;
      if (eat('-'))
        neg = true;
      else
        eat('+');
      long e = integer_long();
      if (neg) e = -e;
      if (e < 0 && b.is_zero()) fail("negative power of zero");
      return b.pow(e);
    }
    return b;
  }
  long integer_long() {
    mpz_class z = integer();
    if (!z.fits_slong_p()) fail("exponent too large");
    return z.get_si();
  }
  mpz_class integer() {
    skip();
    size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return mpz_class(std::string(s_.substr(start, pos_ - start)));
  }
  Scalar primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Scalar v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return Scalar(Cyclotomic(mpq_class(integer())));
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string name(s_.substr(start, pos_ - start));
      if (name == "zeta") {
        if (!eat('(')) fail("expected '(' after zeta");
        long n = integer_long();
        if (n < 1) fail("zeta order must be positive");
        if (!eat(')')) fail("expected ')'");
        return Scalar::root_of_unity(static_cast<int>(n), 1);
      }
      if (name == "sqrt") {
        if (!eat('(')) fail("expected '(' after sqrt");
        long n = integer_long();
        if (n < 1) fail("sqrt argument must be a positive integer");
        if (!eat(')')) fail("expected ')'");
        return Scalar(sqrt_integer(n));
      }
      return Scalar::var(name);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  size_t pos_ = 0;
};

}  // namespace

Scalar Scalar::parse(std::string_view text) { return Parser(text).parse_all(); }

}  // namespace necklace
