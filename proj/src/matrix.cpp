#include "necklace/matrix.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "necklace/errors.hpp"

namespace necklace {

Matrix Matrix::identity(size_t n) {
  Matrix m(n);
  for (size_t i = 0; i < n; ++i) m(i, i) = Scalar(1);
  return m;
}

Matrix Matrix::diag(const std::vector<Scalar>& d) {
  Matrix m(d.size());
  for (size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Scalar>>& rows) {
  Matrix m(rows.size());
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) throw std::invalid_argument("matrix must be square");
    for (size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Matrix Matrix::parse_rows(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::vector<Scalar>> s;
  for (auto& r : rows) {
    s.emplace_back();
    for (auto& x : r) s.back().push_back(Scalar::parse(x));
  }
  return from_rows(s);
}

Matrix Matrix::permutation(const std::vector<size_t>& image) {
  Matrix m(image.size());
  for (size_t j = 0; j < image.size(); ++j) m(image[j], j) = Scalar(1);
  return m;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  for (size_t i = 0; i < a_.size(); ++i)
    if (!o.a_[i].is_zero()) a_[i] += o.a_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  for (size_t i = 0; i < a_.size(); ++i)
    if (!o.a_[i].is_zero()) a_[i] -= o.a_[i];
  return *this;
}

Matrix Matrix::operator-() const {
  Matrix r = *this;
  for (auto& x : r.a_) x = -x;
  return r;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("dimension mismatch in matrix product");
  size_t n = a.n_;
  std::vector<std::vector<size_t>> nzb(n);
  for (size_t k = 0; k < n; ++k)
    for (size_t j = 0; j < n; ++j)
      if (!b(k, j).is_zero()) nzb[k].push_back(j);
  Matrix c(n);
  bool rational = false;
  for (auto* m : {&a, &b})
    for (auto& x : m->a_) rational = rational || !x.is_laurent();
  if (rational) {
    // Sum numerators per unreduced denominator; reduce each distinct denominator once.
    std::vector<std::pair<Laurent, Laurent>> groups;
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) {
        groups.clear();
        for (size_t k = 0; k < n; ++k) {
          const Scalar& x = a(i, k);
          const Scalar& y = b(k, j);
          if (x.is_zero() || y.is_zero()) continue;
          Laurent den = x.den().is_one() ? y.den() : (y.den().is_one() ? x.den() : x.den() * y.den());
          Laurent num = x.num() * y.num();
          auto it = std::find_if(groups.begin(), groups.end(), [&](auto& g) { return g.first == den; });
          if (it == groups.end()) groups.emplace_back(std::move(den), std::move(num));
          else it->second += num;
        }
        Scalar acc;
        for (auto& [den, num] : groups)
          if (!num.is_zero()) acc += Scalar(num, den);
        c(i, j) = std::move(acc);
      }
    return c;
  }
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k < n; ++k) {
      const Scalar& x = a(i, k);
      if (x.is_zero()) continue;
      if (x.is_one()) {
        for (size_t j : nzb[k]) c(i, j) += b(k, j);
      } else {
        for (size_t j : nzb[k]) c(i, j) += x * b(k, j);
      }
    }
  return c;
}

Matrix operator*(const Scalar& s, const Matrix& m) {
  if (s.is_one()) return m;
  Matrix r = m;
  for (auto& x : r.a_)
    if (!x.is_zero()) x *= s;
  return r;
}

Vector Matrix::apply(const Vector& v) const {
  Vector r(n_);
  for (size_t i = 0; i < n_; ++i)
    for (size_t j = 0; j < n_; ++j)
      if (!(*this)(i, j).is_zero() && !v[j].is_zero()) r[i] += (*this)(i, j) * v[j];
  return r;
}

Vector Matrix::column(size_t j) const {
  Vector r(n_);
  for (size_t i = 0; i < n_; ++i) r[i] = (*this)(i, j);
  return r;
}

Matrix Matrix::pow(long k) const {
  if (k < 0) return inverse().pow(-k);
  Matrix result = identity(n_), base = *this;
  bool first = true;
  while (k) {
    if (k & 1) {
      result = first ? base : result * base;
      first = false;
    }
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

Matrix Matrix::transpose() const {
  Matrix r(n_);
  for (size_t i = 0; i < n_; ++i)
    for (size_t j = 0; j < n_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

namespace {

// Prefer pivots that are cheap to divide by.
size_t pivot_cost(const Scalar& s) {
  if (s.is_zero()) return SIZE_MAX;
  return s.num().size() + s.den().size();
}

}  // namespace

Matrix Matrix::inverse() const {
  size_t n = n_;
  Matrix a = *this, inv = identity(n);
  for (size_t col = 0; col < n; ++col) {
    size_t best = n, cost = SIZE_MAX;
    for (size_t r = col; r < n; ++r) {
      size_t c = pivot_cost(a(r, col));
      if (c < cost) {
        cost = c;
        best = r;
      }
    }
    if (best == n) throw DivisionByZero("matrix is singular");
    if (best != col)
      for (size_t j = 0; j < n; ++j) {
        std::swap(a(best, j), a(col, j));
        std::swap(inv(best, j), inv(col, j));
      }
    Scalar p = a(col, col).inv();
    for (size_t j = 0; j < n; ++j) {
      if (!a(col, j).is_zero()) a(col, j) *= p;
      if (!inv(col, j).is_zero()) inv(col, j) *= p;
    }
    for (size_t r = 0; r < n; ++r) {
      if (r == col || a(r, col).is_zero()) continue;
      Scalar f = a(r, col);
      for (size_t j = 0; j < n; ++j) {
        if (!a(col, j).is_zero()) a(r, j) -= f * a(col, j);
        if (!inv(col, j).is_zero()) inv(r, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

Scalar Matrix::det() const {
  size_t n = n_;
  Matrix a = *this;
  Scalar d(1);
  for (size_t col = 0; col < n; ++col) {
    size_t best = n, cost = SIZE_MAX;
    for (size_t r = col; r < n; ++r) {
      size_t c = pivot_cost(a(r, col));
      if (c < cost) {
        cost = c;
        best = r;
      }
    }
    if (best == n) return Scalar(0);
    if (best != col) {
      for (size_t j = 0; j < n; ++j) std::swap(a(best, j), a(col, j));
      d = -d;
    }
    d *= a(col, col);
    Scalar p = a(col, col).inv();
    for (size_t r = col + 1; r < n; ++r) {
      if (a(r, col).is_zero()) continue;
      Scalar f = a(r, col) * p;
      for (size_t j = col; j < n; ++j)
        if (!a(col, j).is_zero()) a(r, j) -= f * a(col, j);
    }
  }
  return d;
}

Scalar det_bareiss(const Matrix& m) {
  size_t n = m.dim();
  if (n == 0) return Scalar(1);
  Matrix a = m;
  Scalar prev(1);
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k).is_zero()) {
      size_t r = k + 1;
      while (r < n && a(r, k).is_zero()) ++r;
      if (r == n) return Scalar(0);
      for (size_t j = 0; j < n; ++j) std::swap(a(r, j), a(k, j));
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return sign > 0 ? a(n - 1, n - 1) : -a(n - 1, n - 1);
}

Scalar Matrix::trace() const {
  Scalar t;
  for (size_t i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

bool Matrix::is_identity() const {
  for (size_t i = 0; i < n_; ++i)
    for (size_t j = 0; j < n_; ++j) {
      const Scalar& x = (*this)(i, j);
      if (i == j ? !x.is_one() : !x.is_zero()) return false;
    }
  return true;
}

bool Matrix::is_zero() const {
  for (auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

bool Matrix::is_scalar_multiple_of_identity(Scalar* c) const {
  if (n_ == 0) return false;
  const Scalar& d = (*this)(0, 0);
  for (size_t i = 0; i < n_; ++i)
    for (size_t j = 0; j < n_; ++j) {
      const Scalar& x = (*this)(i, j);
      if (i == j ? x != d : !x.is_zero()) return false;
    }
  if (c) *c = d;
  return true;
}

bool Matrix::is_constant() const {
  for (auto& x : a_)
    if (!x.is_constant()) return false;
  return true;
}

size_t Matrix::nnz() const {
  size_t k = 0;
  for (auto& x : a_) k += !x.is_zero();
  return k;
}

int Matrix::field_order() const {
  long o = 1;
  for (auto& x : a_) o = std::lcm(o, static_cast<long>(x.field_order()));
  return static_cast<int>(o);
}

std::vector<int> Matrix::vars() const {
  std::vector<int> vs;
  for (auto& x : a_) {
    auto v = x.vars();
    vs.insert(vs.end(), v.begin(), v.end());
  }
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

Matrix Matrix::substitute(const std::map<int, Scalar>& values) const {
  return map([&](const Scalar& s) { return s.is_constant() ? s : s.substitute(values); });
}

Matrix Matrix::restrict_to(const std::vector<size_t>& idx) const {
  Matrix r(idx.size());
  for (size_t i = 0; i < idx.size(); ++i)
    for (size_t j = 0; j < idx.size(); ++j) r(i, j) = (*this)(idx[i], idx[j]);
  return r;
}

std::vector<std::vector<std::string>> Matrix::to_strings() const {
  std::vector<std::vector<std::string>> out(n_);
  for (size_t i = 0; i < n_; ++i)
    for (size_t j = 0; j < n_; ++j) out[i].push_back((*this)(i, j).str());
  return out;
}

std::string Matrix::str() const {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < n_; ++i) {
    os << (i ? ", [" : "[");
    for (size_t j = 0; j < n_; ++j) os << (j ? ", " : "") << (*this)(i, j).str();
    os << "]";
  }
  os << "]";
  return os.str();
}

Matrix kron(const Matrix& a, const Matrix& b) {
  size_t n = a.dim(), m = b.dim();
  Matrix r(n * m);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      const Scalar& x = a(i, j);
      if (x.is_zero()) continue;
      for (size_t k = 0; k < m; ++k)
        for (size_t l = 0; l < m; ++l)
          if (!b(k, l).is_zero()) r(i * m + k, j * m + l) = x * b(k, l);
    }
  return r;
}

bool commute(const Matrix& a, const Matrix& b) { return a * b == b * a; }

size_t rank(std::vector<Vector> rows) {
  size_t r = 0;
  if (rows.empty()) return 0;
  size_t cols = rows[0].size();
  for (size_t c = 0; c < cols && r < rows.size(); ++c) {
    size_t p = r;
    while (p < rows.size() && rows[p][c].is_zero()) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    Scalar inv = rows[r][c].inv();
    for (size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][c].is_zero()) continue;
      Scalar f = rows[i][c] * inv;
      for (size_t j = c; j < cols; ++j)
        if (!rows[r][j].is_zero()) rows[i][j] -= f * rows[r][j];
    }
    ++r;
  }
  return r;
}

}  // namespace necklace
