#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "necklace/burnside.hpp"
#include "necklace/spectrum.hpp"
#include "necklace/verify.hpp"

namespace necklace {

// Images of sigma_1..sigma_{n-1} (index 0 is sigma_1).
struct BraidRep {
  std::string name;
  int n = 0;
  std::vector<Matrix> sigma, sigma_inv;
  std::map<std::string, Scalar> params;

  size_t degree() const { return sigma.empty() ? 0 : sigma[0].dim(); }
  RepAssignment<Matrix> assignment() const;
  // Returns a copy with every entry passed through f.
  template <class F>
  BraidRep mapped(F f) const {
    BraidRep r = *this;
    for (auto& m : r.sigma) m = m.map(f);
    for (auto& m : r.sigma_inv) m = m.map(f);
    for (auto& [k, v] : r.params) v = f(v);
    return r;
  }
};

BraidRep make_braid_rep(std::string name, int n, std::vector<Matrix> sigma);

BraidRep standard_rep(int n, const Scalar& z);
BraidRep burau_reduced(int n, const Scalar& t);
BraidRep burau_unreduced(int n, const Scalar& t);
BraidRep lkb(int n, const Scalar& q, const Scalar& t);
std::vector<std::pair<int, int>> lkb_basis(int n);  // v_{i,j}, i<j, lexicographic

Matrix twist(const BraidRep& rep);          // sigma_1 ... sigma_{n-1}
Matrix twist_inverse(const BraidRep& rep);
// gamma^k sigma_1 gamma^-k = sigma_{k+1} for 1 <= k <= n-2.
bool conjugator_identity(const BraidRep& rep);
// gamma from the closed form: gamma v_{i,j} = q^2 v_{i+1,j+1} (j<n), gamma v_{i,n} = t q^2 v_{1,i+1}.
Matrix lkb_twist_closed_form(int n, const Scalar& q, const Scalar& t);

// Formal roots adjoined so that chosen monomial scalars acquire exact k-th roots.
struct RootPlan {
  std::vector<RootContext> contexts;
  Scalar apply(const Scalar& s) const;
  Matrix apply(const Matrix& m) const;
  BraidRep apply(const BraidRep& r) const;
  std::vector<std::string> describe() const;
};
// Plans roots making every value c in `values` admit c^{1/k}. Throws SpectrumNotResolved
// when a value is not a monomial with perfect-power coefficient.
RootPlan plan_roots(const std::vector<Scalar>& values, int k);
// k-th root of a monomial after plan.apply; branch multiplies by zeta_k^branch.
Scalar exact_root(const Scalar& c, int k, int branch);

struct NecklaceExtension {
  std::string name;
  std::string kind;  // standard | nonstandard
  BraidRep base;     // after any root substitution
  Matrix tau, tau_inv, sigma_n, sigma_n_inv;
  std::optional<Matrix> D;
  std::optional<Scalar> scalar;  // tau = scalar * gamma when D is scalar
  RootPlan roots;
  std::map<std::string, bool> flags;
  std::map<std::string, std::string> values;
  std::vector<std::string> notes;

  int n() const { return base.n; }
  RepAssignment<Matrix> assignment() const;
  VerifyReport verify_full() const;
};

// Builds sigma_n = tau sigma_{n-1} tau^-1.
NecklaceExtension make_extension(std::string name, std::string kind, BraidRep base, Matrix tau, Matrix tau_inv);

// tau = D gamma with D = sum_j c_j^{-1/2n} P_j over the spectrum of gamma^{2n}.
NecklaceExtension standard_extension(const BraidRep& rep, int branch = 0);
// Same construction with an arbitrary translator Y (Y sigma_i Y^-1 = sigma_{i+1}) in place of gamma.
// A known spectrum of Y^{2n} skips the characteristic polynomial; it is still checked to annihilate Y^{2n}.
NecklaceExtension translator_extension(std::string name, const BraidRep& rep, const Matrix& Y, const Matrix& Y_inv,
                                        int branch = 0, const Spectrum* known = nullptr);

// tau e_j = s e_{j+1} (j<n), tau e_n = s^{1-n} e_1.
NecklaceExtension nonstandard_block_tau(int n, const Scalar& z, const Scalar& s);

struct TauCandidate {
  std::string label;
  Matrix tau;
  bool commutes = false;       // tau Z = Z tau
  bool order_four = false;     // tau^4 = I
  bool conjugation = false;    // tau^2 Z tau^-2 = Z
  bool relations_pass = false; // full NB_2 suite
  bool valid() const { return commutes && order_four && conjugation && relations_pass; }
};
struct TauList {
  RootPlan roots;  // z = w^2
  Matrix Z;
  std::vector<TauCandidate> listed;
  std::vector<TauCandidate> extra;  // +-iI, absent from the printed list
};
TauList n2_tau_list(const Scalar& z);

// n=3: 6 branches (alpha = zeta_6^b t^{-1/3}); n=4: 8 branches (beta = zeta_8^b t^{1/2}).
NecklaceExtension lkb_nonstandard_tau(int n, const Scalar& q, const Scalar& t, int branch);
int lkb_nonstandard_branches(int n);

struct IrreducibilityReport {
  GenericIrreducibility necklace, braid;
};
NecklaceExtension unreduced_burau_extension(int n, const Scalar& t, const Scalar& a, IrreducibilityReport* irr = nullptr,
                                            uint64_t seed = 20261015);

struct Dim2Params {
  Scalar a = Scalar(1), d = Scalar(2), c = Scalar(1), t2 = Scalar(1);
  int tau_choice = 0;    // index into dim2_tau_options(row)
  int omega_power = 1;   // row 4: omega = zeta_3^omega_power
};
std::vector<Matrix> dim2_tau_options(int row);
NecklaceExtension dim2_family(int n, int row, const Dim2Params& p, GenericIrreducibility* irr = nullptr,
                              uint64_t seed = 20261015);

// sigma_i -> transposition (i i+1) mod n, tau -> n-cycle.
NecklaceExtension symmetric_model(int n);
// sigma_i -> [[1,1],[0,1]], tau -> I.
NecklaceExtension jordan_example(int n);

}  // namespace necklace
