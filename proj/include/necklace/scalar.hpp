#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "necklace/laurent.hpp"

namespace necklace {

// Element of the fraction field of Laurent polynomials over Q(zeta_N).
// Canonical form: gcd removed, denominator a polynomial without monomial
// factor whose lex-leading coefficient is 1; denominator 1 when possible.
class Scalar {
 public:
  Scalar() : num_(), den_(1) {}
  Scalar(long v) : num_(v), den_(1) {}  // NOLINT
  Scalar(const Cyclotomic& c) : num_(c), den_(1) {}  // NOLINT
  Scalar(Laurent num) : num_(std::move(num)), den_(1) {}  // NOLINT
  Scalar(const Laurent& num, const Laurent& den);

  static Scalar var(std::string_view name, int power = 1);
  static Scalar var(int id, int power = 1);
  static Scalar root_of_unity(int N, long k = 1);
  static Scalar rational(long p, long q);
  static Scalar parse(std::string_view text);

  const Laurent& num() const { return num_; }
  const Laurent& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return den_.is_one() && num_.is_one(); }
  bool is_laurent() const { return den_.is_one(); }
  bool is_constant() const { return den_.is_one() && num_.is_constant(); }
  bool is_monomial() const { return den_.is_one() && num_.is_monomial(); }
  Cyclotomic constant_value() const;  // requires is_constant

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o) { return *this += -o; }
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o) { return *this *= o.inv(); }
  Scalar operator-() const;
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  Scalar inv() const;
  Scalar pow(long k) const;

  Scalar substitute(const std::map<int, Scalar>& values) const;
  Scalar substitute_monomial(int v, int fresh, int k) const;

  int field_order() const;
  std::vector<int> vars() const;
  std::string str() const;

 private:
  struct Raw {};
  Scalar(Laurent num, Laurent den, Raw) : num_(std::move(num)), den_(std::move(den)) {}
  Laurent num_, den_;
};

inline std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

// Fractional powers realized as variable substitution var := fresh^k.
struct RootContext {
  int var = -1;
  int k = 1;
  int fresh = -1;
  Scalar apply(const Scalar& s) const { return k == 1 ? s : s.substitute_monomial(var, fresh, k); }
  Scalar root() const { return Scalar::var(fresh); }  // var^{1/k}
  std::string describe() const;
};
RootContext adjoin_formal_root(int var, int k);
RootContext adjoin_formal_root(std::string_view var, int k);

// Exact k-th root of a monomial scalar u*r*x^E (u root of unity, r > 0 rational perfect
// k-th power, k | E); the principal branch takes exponent-wise roots. `branch` multiplies
// the result by zeta_k^branch. Returns false if no such root exists in the current field.
bool monomial_root(const Scalar& c, int k, int branch, Scalar* out);

// Returns the square root of a positive integer m as an element of a cyclotomic field.
Cyclotomic sqrt_integer(long m);

}  // namespace necklace
