#include "necklace/charpoly.hpp"

#include <sstream>

namespace necklace {

Scalar ScalarPoly::eval(const Scalar& x) const {
  Scalar acc;
  for (size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
  return acc;
}

ScalarPoly ScalarPoly::divide_linear(const Scalar& root, Scalar* rem) const {
  ScalarPoly q;
  if (c.empty()) {
    if (rem) *rem = Scalar();
    return q;
  }
  q.c.assign(c.size() - 1, Scalar());
  Scalar carry;
  for (size_t i = c.size(); i-- > 0;) {
    Scalar v = c[i] + carry * root;
    if (i == 0) {
      if (rem) *rem = v;
    } else {
      q.c[i - 1] = v;
    }
    carry = v;
  }
  return q;
}

std::string ScalarPoly::str(const std::string& var) const {
  std::ostringstream os;
  bool first = true;
  for (size_t i = c.size(); i-- > 0;) {
    if (c[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << c[i].str() << ")";
    if (i > 0) os << "*" << var;
    if (i > 1) os << "^" << i;
  }
  return first ? "0" : os.str();
}

ScalarPoly poly_from_roots(const std::vector<Scalar>& roots) {
  ScalarPoly p;
  p.c = {Scalar(1)};
  for (auto& r : roots) {
    std::vector<Scalar> n(p.c.size() + 1);
    for (size_t i = 0; i < p.c.size(); ++i) {
      n[i + 1] += p.c[i];
      n[i] -= r * p.c[i];
    }
    p.c = std::move(n);
  }
  return p;
}

ScalarPoly char_poly(const Matrix& a) {
  size_t n = a.dim();
  if (n == 0) return ScalarPoly{{Scalar(1)}};
  // coefficient vector, highest degree first
  std::vector<Scalar> vect = {Scalar(1), -a(n - 1, n - 1)};
  for (size_t k = n - 1; k-- > 0;) {
    size_t s = n - 1 - k;  // size of trailing block
    std::vector<Scalar> col;
    col.reserve(s + 2);
    col.push_back(Scalar(1));
    col.push_back(-a(k, k));
    Vector v(s);
    for (size_t i = 0; i < s; ++i) v[i] = a(k + 1 + i, k);
    for (size_t p = 0; p < s; ++p) {
      Scalar rv;
      for (size_t j = 0; j < s; ++j)
        if (!a(k, k + 1 + j).is_zero() && !v[j].is_zero()) rv += a(k, k + 1 + j) * v[j];
      col.push_back(-rv);
      if (p + 1 < s) {
        Vector w(s);
        for (size_t i = 0; i < s; ++i)
          for (size_t j = 0; j < s; ++j)
            if (!a(k + 1 + i, k + 1 + j).is_zero() && !v[j].is_zero()) w[i] += a(k + 1 + i, k + 1 + j) * v[j];
        v = std::move(w);
      }
    }
    std::vector<Scalar> next(s + 2);
    for (size_t i = 0; i < s + 2; ++i)
      for (size_t j = 0; j <= i && j < vect.size(); ++j)
        if (!col[i - j].is_zero() && !vect[j].is_zero()) next[i] += col[i - j] * vect[j];
    vect = std::move(next);
  }
  ScalarPoly p;
  p.c.assign(vect.rbegin(), vect.rend());
  return p;
}

}  // namespace necklace
