#pragma once

#include <map>
#include <memory>
#include <random>

#include "necklace/verify.hpp"

namespace necklace {

enum class AlgebraKind { NES, Quat };

// NES(m,n): t^a u_1^{e_1}...u_n^{e_n}, u_i u_{i+1} = q^2 u_{i+1} u_i (mod n), u^m = t^n = 1.
// Q_n: t^a u_1^{e_1}...u_n^{e_n} v_1^{f_1}...v_n^{f_n}, e,f in {0,1}, u^2 = v^2 = -1,
// u_i v_j = -v_j u_i when i, j are cyclically adjacent or equal, all else commute.
// Both: u_j t = t u_{j-1} (indices mod n).
struct AlgebraContext {
  AlgebraKind kind = AlgebraKind::NES;
  int m = 2, n = 3;
  int q_order = 4;  // q = zeta_{q_order}
  Scalar q;
  int phase_order = 4;              // reordering phases are powers of zeta_{phase_order}
  std::vector<Scalar> phase_pows;
  int letters() const { return kind == AlgebraKind::NES ? n : 2 * n; }
  std::string tag() const;
  size_t basis_size() const;
};
using AlgebraPtr = std::shared_ptr<const AlgebraContext>;

AlgebraPtr nes_algebra(int m, int n);  // q = zeta_m (m odd), zeta_2m (m even)
AlgebraPtr quat_algebra(int n);        // q = zeta_6

using MonoKey = std::vector<int8_t>;  // [t exponent, u exponents..., (v exponents...)]

class AlgebraElement {
 public:
  AlgebraElement() = default;
  explicit AlgebraElement(AlgebraPtr a) : alg_(std::move(a)) {}

  static AlgebraElement one(AlgebraPtr a);
  static AlgebraElement scalar(AlgebraPtr a, const Scalar& c);
  static AlgebraElement t(AlgebraPtr a, int power = 1);
  static AlgebraElement u(AlgebraPtr a, int i, int power = 1);  // i taken mod n
  static AlgebraElement v(AlgebraPtr a, int i, int power = 1);  // Q_n only
  static AlgebraElement monomial(AlgebraPtr a, MonoKey k, const Scalar& c = Scalar(1));

  const AlgebraPtr& algebra() const { return alg_; }
  const std::map<MonoKey, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  // Single monomial with root-of-unity coefficient.
  bool is_monomial() const { return terms_.size() == 1; }

  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);
  friend AlgebraElement operator*(const Scalar& c, const AlgebraElement& a);
  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b);
  friend bool operator!=(const AlgebraElement& a, const AlgebraElement& b) { return !(a == b); }

  AlgebraElement pow(long k) const;
  // From the minimal polynomial of the element; throws DivisionByZero for non-units.
  AlgebraElement inverse() const;
  std::string str() const;
  static std::string key_str(const AlgebraContext& a, const MonoKey& k);

 private:
  void add_term(const MonoKey& k, const Scalar& c);
  AlgebraPtr alg_;
  std::map<MonoKey, Scalar> terms_;
};

template <>
struct TargetTraits<AlgebraElement> {
  static constexpr const char* kind = "algebra";
  static AlgebraElement identity_like(const AlgebraElement& a) { return AlgebraElement::one(a.algebra()); }
  static AlgebraElement mul(const AlgebraElement& a, const AlgebraElement& b) { return a * b; }
  static AlgebraElement inverse(const AlgebraElement& a) { return a.inverse(); }
  static bool equal(const AlgebraElement& a, const AlgebraElement& b) { return a == b; }
  static Witness witness(const AlgebraElement& a, const AlgebraElement& b);
};

AlgebraElement random_element(AlgebraPtr a, std::mt19937_64& rng, int terms = 3);

struct IdentityCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};
struct IdentityReport {
  std::string name;
  std::vector<IdentityCheck> checks;
  bool all_pass() const;
  std::string to_json() const;
  void add(std::string name, bool pass, std::string detail = "");
};

// R_i(m) = (1/sqrt m) sum_j q^{j^2} u_i^j.
AlgebraElement nes_braid_generator(const AlgebraPtr& a, int i, bool normalized = true);
RepAssignment<AlgebraElement> nes_phi_hat(int m, int n);
IdentityReport nes_mod_n_closure_check(int m, int n);
IdentityReport nes_conjugation_identities(int m, int n, int i);
// Conjugation by R_i and t maps each monomial u^alpha to a single monomial.
IdentityReport nes_monomiality(int m, int n, size_t max_monomials = 4096);

// Phase-permutation operator: e_k -> q^{phase[k]} e_{target[k]}, q = zeta_{order}.
struct PhaseOp {
  int order = 1;
  std::vector<size_t> target;
  std::vector<int> phase;
  size_t dim() const { return target.size(); }
  static PhaseOp identity(size_t d, int order);
  PhaseOp operator*(const PhaseOp& o) const;  // (this o other)
  PhaseOp inverse() const;
  PhaseOp scaled(int k) const;                // multiply by q^k
  bool operator==(const PhaseOp& o) const;
  Matrix dense() const;
};

struct NesMatrixModel {
  int m = 2, n = 3;
  AlgebraPtr alg;
  PhaseOp U;                 // on V (x) V
  std::vector<PhaseOp> Ui;   // U_1..U_n, U_n := X U_{n-1} X^-1
  PhaseOp X;
  IdentityReport checks;
  Matrix psi(const AlgebraElement& x) const;  // dense, needs m^n within budget
  PhaseOp psi_monomial(const MonoKey& k) const;
  // Psi o phi_hat as a matrix assignment (dense).
  RepAssignment<Matrix> local_rep() const;
};
NesMatrixModel nes_matrix_model(int m, int n, size_t budget = 1 << 16);

AlgebraElement quat_generator(const AlgebraPtr& a, int i);  // -1/(2q)(1 + u_i + v_i + u_i v_i)
RepAssignment<AlgebraElement> quat_xi(int n);
IdentityReport quat_hom_check(int n);
IdentityReport quat_conjugation_table(int n, int i);
IdentityReport quat_monomiality(int n);

}  // namespace necklace
