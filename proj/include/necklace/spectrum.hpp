#pragma once

#include <optional>

#include "necklace/charpoly.hpp"

namespace necklace {

struct Eigen {
  Scalar value;
  int multiplicity = 0;
};
using Spectrum = std::vector<Eigen>;

// Eigenvalues of M when its characteristic polynomial splits into monomial scalars
// (root of unity times rational times Laurent monomial). Throws SpectrumNotResolved.
Spectrum monomial_spectrum(const Matrix& m, const std::vector<Scalar>& candidates = {});
// Same, starting from a known characteristic polynomial.
Spectrum monomial_roots(const ScalarPoly& p, const std::vector<Scalar>& candidates,
                        const std::vector<Scalar>& hints = {});

// P_j = prod_{k != j} (M - c_k)/(c_j - c_k); requires prod_j (M - c_j) = 0.
std::vector<Matrix> spectral_projectors(const Matrix& m, const Spectrum& spec);

struct NilpotencyReport {
  bool is_identity = false;
  std::optional<int> index;  // smallest k with (M - I)^k = 0
};
NilpotencyReport nilpotency_probe(const Matrix& m);

}  // namespace necklace
