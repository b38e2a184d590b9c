#pragma once

#include "necklace/classical_reps.hpp"
#include "necklace/spectrum.hpp"
#include "necklace/twisted_algebras.hpp"

namespace necklace {

// XXZ chain on (C^2)^{(x)n}: cup u = (0, t, t^-1, 0), U = u^t u, g_i = 1 - q U_i, q = t^2.
struct TLChain {
  int n = 2;
  Scalar t, q;
  std::vector<Scalar> cup;  // u as a row of length 4
  Scalar loop;              // u u^t
  std::vector<Matrix> U, g, g_inv;  // index i-1 for site pair (i, i+1)
  Matrix H;                         // sum of U_i
  IdentityReport checks;

  Matrix gamma() const;  // g_1 ... g_{n-1}
  Matrix gamma_inverse() const;
  BraidRep braid_rep() const;
};

TLChain build_chain(int n, const Scalar& t, bool run_checks = true);
// The 4x4 matrix displayed for rho(g_1^2) at n = 2.
Matrix g1_squared_display(const Scalar& q);

struct SpectrumRow {
  int n = 0, l = 0;
  Scalar eigenvalue;   // computed
  Scalar expected;     // table entry
  int multiplicity = 0;  // in the full tensor space
  bool match = false;
};
struct SpectrumTable {
  std::vector<SpectrumRow> rows;
  std::map<int, bool> set_match;   // per n: computed eigenvalue set equals the table's
  std::map<int, bool> sectors_commute;
  bool all_match() const;
  std::string to_json() const;
};
// Table entry exponents e with eigenvalue q^e, per n and charge l.
std::vector<std::pair<int, int>> gamma_spectrum_expected(int n);
SpectrumTable gamma_spectrum_table(int n_min, int n_max, const Scalar& t = Scalar::var("t"));

struct DichotomyReport {
  int n = 0;
  bool gamma_2n_identity = false, gamma_n_identity = false;
  bool flat_extension_passes = false;
  bool unipotent = false;
  std::optional<int> nilpotency_index;
  bool matches_prediction = false;
  std::string to_json() const;
};
// At q = i (t = zeta_8).
DichotomyReport dichotomy_probe(int n);

struct SeamedChain {
  TLChain base;
  Scalar a, y_f, x;
  Matrix f;            // 2x2 blob
  Matrix f1;           // blob on site 1
  Matrix beta, beta_inv, g0;
  IdentityReport checks;
  VerifyReport circular;  // CB_n suite with sigma_i -> g_i, sigma_n -> g_0, tau -> beta
  RepAssignment<Matrix> assignment() const;
};
Matrix blob(const Scalar& a);
SeamedChain build_seam(const TLChain& chain, const Scalar& a);
// Candidate spectrum of beta^{2n}: t^{8k(n-k)} a^{-4k} with multiplicity C(n,k), k = 0..n.
// Coinciding values are merged.
Spectrum seam_spectrum(int n, const Scalar& t, const Scalar& a);

// D-matrix method on (g_i, beta) with the candidate spectrum. Throws SpectrumNotResolved or
// NotDiagonalizable. Intended for specialized t, a; symbolic parameters go through the certificate.
NecklaceExtension seamed_standard_extension(const SeamedChain& s, int branch = 0);

// Exact evidence that tau = D beta extends the seamed chain to NB_n at symbolic t, a:
// with M = beta^{2n} central and prod_k (M - c_k) = 0, D = sum_k lambda_k P_k (lambda_k^{2n} c_k = 1)
// is central and (D beta)^{2n} = D^{2n} M = 1, so every NB_n relation follows from the CB_n suite.
// The literal NB_n suite is also run on the extension at sampled points t = T^n, a = A^n.
struct SeamSample {
  Scalar T, A;
  VerifyReport report;
  std::vector<int> multiplicities;  // dim ker(M - c_k) at the point
};
struct SeamCertificate {
  int n = 0;
  Spectrum spectrum;
  bool circular = false;          // CB_n suite at symbolic t, a
  bool central = false;           // M commutes with g_1..g_{n-1}, g_0 and beta
  bool minimal_polynomial = false;
  bool roots_exact = false;
  bool multiplicities = false;    // sample kernels match C(n,k)
  std::vector<SeamSample> samples;
  bool all_pass() const;
  std::string to_json() const;
};
SeamCertificate seamed_nb_certificate(const SeamedChain& s, int samples = 2);

}  // namespace necklace
