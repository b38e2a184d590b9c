#pragma once

#include "necklace/classical_reps.hpp"
#include "necklace/closure.hpp"
#include "necklace/local_operator.hpp"

namespace necklace {

struct BVS {
  std::string name;
  size_t m = 2;
  Matrix R, R_inv;
};

struct YbeResult {
  bool holds = false;
  std::optional<Witness> witness;
};
// (R x I)(I x R)(R x I) = (I x R)(R x I)(I x R) on V^{(x)3}.
YbeResult ybe_check(const Matrix& R);

// Verifies invertibility and the YBE.
BVS make_bvs(std::string name, const Matrix& R);
BVS bvs_ising();
BVS bvs_flip(size_t m = 2);
BVS bvs_identity(size_t m = 2);
BVS bvs_catalog(const std::string& name);  // ising | flip | identity
// {"m": 2, "R": [["1","0",...],...]} with scalar strings.
BVS bvs_from_json(const std::string& text, const std::string& name = "custom");
BVS bvs_from_file(const std::string& path);

Matrix flip_operator(size_t m);

// sigma_i -> R at (i, i+1), tau -> cyclic shift X, sigma_n := X sigma_{n-1} X^-1.
NecklaceExtension local_necklace_rep(const BVS& bvs, int n, size_t budget = kDefaultBudgetDim);
// Order of the shift X on V^{(x)n} (expected n).
int shift_order(size_t m, int n);
// X (R x I) X^-1 = I x R checked on every pure basis tensor e_a (x) e_b (x) e_c.
bool key_identity_on_pure_tensors(const BVS& bvs);

struct N2SymmetricResult {
  bool symmetric = false;  // P R P = R
  bool passes = false;
  VerifyReport report;
  std::optional<PairResult> failure;
  // Images of e_2 (x) e_1 (basis index m) under sigma1 sigma2 sigma1 and sigma2 sigma1 sigma2.
  Vector braid_lhs_e21, braid_rhs_e21;
};
// sigma_1 -> R, tau -> P on V (x) V.
N2SymmetricResult n2_symmetric_extension(const Matrix& R);

struct ConjectureReport {
  int n = 0;
  ClosureResult braid, affine, necklace;
  size_t expected_factor = 0;  // n 2^n
  bool ratio_nb_over_b = false;      // |NB| = n 2^n |B|
  bool ratio_nb_over_affine = false; // |NB| = n |affine|
  bool verdict = false;
  std::string to_json() const;
};
// Closures of {sigma_1..sigma_{n-1}}, {sigma_1..sigma_n}, {sigma_1..sigma_n, tau}.
// With a checkpoint path p, the runs use p.B, p.affine, p.NB.
ConjectureReport conjecture_ratio(const BVS& bvs, int n, const ClosureOptions& opts = {});

}  // namespace necklace
