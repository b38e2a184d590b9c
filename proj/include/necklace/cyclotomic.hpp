#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace necklace {

// Element of Q(zeta_N) in the power basis 1, zeta_N, ..., zeta_N^{phi(N)-1},
// reduced modulo the N-th cyclotomic polynomial. Rationals always carry N = 1.
class Cyclotomic {
 public:
  Cyclotomic() : order_(1), c_(1) {}
  Cyclotomic(long v) : order_(1), c_{mpq_class(v)} {}  // NOLINT: implicit by design
  Cyclotomic(const mpq_class& v) : order_(1), c_{v} {}  // NOLINT
  Cyclotomic(int order, std::vector<mpq_class> coords);

  static Cyclotomic zeta(int N, long k = 1);

  int order() const { return order_; }
  const std::vector<mpq_class>& coords() const { return c_; }
  bool is_zero() const { return order_ == 1 && c_[0] == 0; }
  bool is_rational() const { return order_ == 1; }
  bool is_one() const { return order_ == 1 && c_[0] == 1; }
  const mpq_class& rational() const { return c_[0]; }

  Cyclotomic lifted(int N) const;
  Cyclotomic galois(long a) const;  // zeta_N -> zeta_N^a, gcd(a, N) = 1
  Cyclotomic inv() const;
  Cyclotomic pow(long k) const;

  // If this equals r * zeta_M^j with r rational and M = lcm(2, order), returns (M, j, r).
  struct UnitForm {
    int M;
    int j;
    mpq_class r;
  };
  std::optional<UnitForm> unit_form() const;

  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  Cyclotomic& operator/=(const Cyclotomic& o) { return *this *= o.inv(); }
  Cyclotomic operator-() const;

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

  // Number of power-basis terms that are nonzero.
  int support() const;
  std::string str() const;

 private:
  void normalize();
  int order_;
  std::vector<mpq_class> c_;
};

long euler_phi(long n);
long lcm_order(long a, long b);
// Integer coefficients of the N-th cyclotomic polynomial, low degree first.
const std::vector<long>& cyclotomic_polynomial(int N);

}  // namespace necklace
