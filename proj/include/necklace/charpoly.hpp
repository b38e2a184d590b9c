#pragma once

#include "necklace/matrix.hpp"

namespace necklace {

// Univariate polynomial in a formal variable x with Scalar coefficients, low degree first.
struct ScalarPoly {
  std::vector<Scalar> c;

  int degree() const { return static_cast<int>(c.size()) - 1; }
  Scalar eval(const Scalar& x) const;
  // Divides by (x - root); returns the remainder through *rem.
  ScalarPoly divide_linear(const Scalar& root, Scalar* rem) const;
  std::string str(const std::string& var = "x") const;
  friend bool operator==(const ScalarPoly& a, const ScalarPoly& b) { return a.c == b.c; }
};

ScalarPoly poly_from_roots(const std::vector<Scalar>& roots);

// det(xI - M) by the division-free Berkowitz recursion.
ScalarPoly char_poly(const Matrix& m);

}  // namespace necklace
