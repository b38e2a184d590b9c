#pragma once

#include <map>
#include <string>
#include <vector>

#include "necklace/scalar.hpp"

namespace necklace {

using Vector = std::vector<Scalar>;

// Dense square matrix over Scalar.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(size_t n) : n_(n), a_(n * n) {}

  static Matrix identity(size_t n);
  static Matrix diag(const std::vector<Scalar>& d);
  static Matrix from_rows(const std::vector<std::vector<Scalar>>& rows);
  static Matrix parse_rows(const std::vector<std::vector<std::string>>& rows);
  static Matrix permutation(const std::vector<size_t>& image);  // e_j -> e_{image[j]}

  size_t dim() const { return n_; }
  Scalar& operator()(size_t i, size_t j) { return a_[i * n_ + j]; }
  const Scalar& operator()(size_t i, size_t j) const { return a_[i * n_ + j]; }

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix operator-() const;
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Scalar& s, const Matrix& m);
  friend bool operator==(const Matrix& a, const Matrix& b) { return a.n_ == b.n_ && a.a_ == b.a_; }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  Vector apply(const Vector& v) const;
  Vector column(size_t j) const;
  Matrix pow(long k) const;  // negative k uses inverse()
  Matrix transpose() const;
  Matrix inverse() const;     // Gauss-Jordan; DivisionByZero if singular
  Scalar det() const;
  Scalar trace() const;
  bool is_identity() const;
  bool is_zero() const;
  bool is_scalar_multiple_of_identity(Scalar* c = nullptr) const;
  bool is_constant() const;  // entries free of indeterminates
  size_t nnz() const;
  int field_order() const;
  std::vector<int> vars() const;

  Matrix substitute(const std::map<int, Scalar>& values) const;
  template <class F>
  Matrix map(F f) const {
    Matrix r(n_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = f(a_[i]);
    return r;
  }

  // Rectangular block of rows/cols given by index lists.
  Matrix restrict_to(const std::vector<size_t>& idx) const;

  std::vector<std::vector<std::string>> to_strings() const;
  std::string str() const;

 private:
  size_t n_ = 0;
  std::vector<Scalar> a_;
};

Matrix kron(const Matrix& a, const Matrix& b);
bool commute(const Matrix& a, const Matrix& b);

// Bareiss fraction-free determinant (used as independent oracle for char_poly).
Scalar det_bareiss(const Matrix& m);

// Rank over the fraction field.
size_t rank(std::vector<Vector> rows);

}  // namespace necklace
