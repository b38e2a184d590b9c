#include "necklace/local_operator.hpp"

#include "necklace/errors.hpp"

namespace necklace {

size_t ipow(size_t base, size_t exp) {
  size_t r = 1;
  while (exp--) r *= base;
  return r;
}

namespace {

size_t block_sites(size_t block_dim, size_t m) {
  size_t k = 0, d = 1;
  while (d < block_dim) {
    d *= m;
    ++k;
  }
  if (d != block_dim) throw std::invalid_argument("block dimension is not a power of the site dimension");
  return k;
}

}  // namespace

LocalOperator LocalOperator::block(const Matrix& b, size_t m, size_t n, size_t position) {
  size_t k = block_sites(b.dim(), m);
  if (position < 1 || position + k - 1 > n) throw std::invalid_argument("block position out of range");
  LocalOperator op;
  op.kind = Kind::Block;
  op.site_dim = m;
  op.sites = n;
  op.position = position;
  op.op = b;
  return op;
}

LocalOperator LocalOperator::shift(size_t m, size_t n) {
  LocalOperator op;
  op.kind = Kind::CyclicShift;
  op.site_dim = m;
  op.sites = n;
  return op;
}

LocalOperator LocalOperator::dense(const Matrix& d, size_t m, size_t n) {
  if (d.dim() != ipow(m, n)) throw std::invalid_argument("dense operator has wrong dimension");
  LocalOperator op;
  op.kind = Kind::Dense;
  op.site_dim = m;
  op.sites = n;
  op.op = d;
  return op;
}

Matrix materialize(const LocalOperator& op, size_t budget) {
  size_t m = op.site_dim, n = op.sites;
  size_t dim = ipow(m, n);
  if (dim > budget)
    throw SizeBudgetExceeded("dimension " + std::to_string(dim) + " exceeds budget " + std::to_string(budget));
  switch (op.kind) {
    case LocalOperator::Kind::Dense:
      return op.op;
    case LocalOperator::Kind::CyclicShift: {
      std::vector<size_t> image(dim);
      size_t top = ipow(m, n - 1);
      for (size_t idx = 0; idx < dim; ++idx) image[idx] = (idx % m) * top + idx / m;
      return Matrix::permutation(image);
    }
    case LocalOperator::Kind::Block: {
      size_t bd = op.op.dim();
      size_t k = block_sites(bd, m);
      size_t left = ipow(m, op.position - 1);
      size_t right = ipow(m, n - op.position - k + 1);
      Matrix r(dim);
      for (size_t i = 0; i < bd; ++i)
        for (size_t j = 0; j < bd; ++j) {
          const Scalar& x = op.op(i, j);
          if (x.is_zero()) continue;
          for (size_t l = 0; l < left; ++l)
            for (size_t rr = 0; rr < right; ++rr) r((l * bd + i) * right + rr, (l * bd + j) * right + rr) = x;
        }
      return r;
    }
  }
  return Matrix();
}

}  // namespace necklace
