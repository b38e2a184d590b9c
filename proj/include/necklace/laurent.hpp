#pragma once

#include <boost/container/small_vector.hpp>
#include <map>
#include <string>
#include <vector>

#include "necklace/cyclotomic.hpp"

namespace necklace {

// Exponent vector indexed by variable id, trailing zeros trimmed.
using Exps = boost::container::small_vector<int, 4>;

int exps_cmp(const Exps& a, const Exps& b);
Exps exps_add(const Exps& a, const Exps& b);
Exps exps_sub(const Exps& a, const Exps& b);
void exps_trim(Exps& e);
inline int exps_at(const Exps& e, int v) { return v < static_cast<int>(e.size()) ? e[v] : 0; }

struct Term {
  Exps e;
  Cyclotomic c;
};

// Sparse Laurent polynomial, terms sorted ascending in lex order on exponent vectors.
class Laurent {
 public:
  Laurent() = default;
  Laurent(const Cyclotomic& c);  // NOLINT
  Laurent(long v) : Laurent(Cyclotomic(v)) {}  // NOLINT

  static Laurent var(int id, int power = 1);
  static Laurent monomial(Exps e, Cyclotomic c);
  static Laurent from_terms(std::vector<Term> terms);  // sorts and combines

  const std::vector<Term>& terms() const { return t_; }
  size_t size() const { return t_.size(); }
  bool is_zero() const { return t_.empty(); }
  bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_[0].e.empty()); }
  bool is_one() const { return t_.size() == 1 && t_[0].e.empty() && t_[0].c.is_one(); }
  bool is_monomial() const { return t_.size() == 1; }
  bool has_vars() const;
  Cyclotomic constant_value() const;  // requires is_constant
  const Term& leading() const { return t_.back(); }

  Laurent& operator+=(const Laurent& o);
  Laurent& operator-=(const Laurent& o);
  Laurent& operator*=(const Laurent& o) { return *this = *this * o; }
  Laurent operator-() const;
  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator*(const Laurent& a, const Laurent& b);
  friend bool operator==(const Laurent& a, const Laurent& b);
  friend bool operator!=(const Laurent& a, const Laurent& b) { return !(a == b); }

  Laurent scaled(const Cyclotomic& c) const;
  Laurent shifted(const Exps& e) const;  // multiply by x^e
  Laurent pow(unsigned k) const;

  Exps min_exps() const;
  int max_deg(int v) const;
  int min_deg(int v) const;
  std::vector<int> vars() const;
  std::map<int, Laurent> coeffs_in(int v) const;  // coefficient of v^k with v removed
  int field_order() const;

  Laurent substitute_monomial(int v, int fresh, int k) const;  // v -> fresh^k
  std::string str() const;

 private:
  std::vector<Term> t_;
};

// Polynomial helpers for polynomials with nonnegative exponents.
// Exact division; throws std::logic_error if b does not divide a.
Laurent poly_divide_exact(const Laurent& a, const Laurent& b);
// Monic-normalized gcd (leading coefficient 1, no monomial factor).
Laurent poly_gcd(const Laurent& a, const Laurent& b);
// Splits p = x^m * q with q free of monomial factors (q has min exponent 0 in every variable).
Laurent strip_monomial(const Laurent& p, Exps* m = nullptr);

}  // namespace necklace
