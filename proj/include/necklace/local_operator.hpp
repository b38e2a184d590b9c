#pragma once

#include "necklace/matrix.hpp"

namespace necklace {

constexpr size_t kDefaultBudgetDim = 4096;

size_t ipow(size_t base, size_t exp);

// Operator on V^{(x)n}, dim V = site_dim. Basis index of e_{i_1}(x)...(x)e_{i_n}
// is sum_k i_k m^{n-k} (first factor most significant), matching kron.
struct LocalOperator {
  enum class Kind { Block, CyclicShift, Dense };
  Kind kind = Kind::Dense;
  size_t site_dim = 2;
  size_t sites = 1;
  size_t position = 1;  // 1-based first factor of a block
  Matrix op;            // block or dense matrix

  static LocalOperator block(const Matrix& b, size_t m, size_t n, size_t position);
  static LocalOperator shift(size_t m, size_t n);
  static LocalOperator dense(const Matrix& d, size_t m, size_t n);
};

Matrix materialize(const LocalOperator& op, size_t budget = kDefaultBudgetDim);

}  // namespace necklace
