#include <json.hpp>

#include "necklace/local_operator.hpp"
#include "necklace/twisted_algebras.hpp"

namespace necklace {

namespace {

int mod(long a, long n) { return static_cast<int>(((a % n) + n) % n); }
int wrap(int i, int n) { return mod(i - 1, n) + 1; }  // 1-based index mod n

using AE = AlgebraElement;

void add_eq(IdentityReport& r, const std::string& name, const AE& lhs, const AE& rhs) {
  bool ok = lhs == rhs;
  r.add(name, ok, ok ? "" : TargetTraits<AE>::witness(lhs, rhs).description);
}

void add_suite(IdentityReport& r, const std::string& prefix, const VerifyReport& v) {
  for (auto& p : v.pairs)
    r.add(prefix + p.label, p.pass, p.pass || !p.witness ? "" : p.witness->description);
}

}  // namespace

std::string IdentityReport::to_json() const {
  nlohmann::ordered_json j;
  j["name"] = name;
  j["all_pass"] = all_pass();
  j["checks"] = nlohmann::ordered_json::array();
  for (auto& c : checks) j["checks"].push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  return j.dump(2);
}

AlgebraElement nes_braid_generator(const AlgebraPtr& a, int i, bool normalized) {
  if (a->kind != AlgebraKind::NES) throw TagMismatch("R_i lives in NES(m,n), not " + a->tag());
  AE r(a);
  for (int j = 0; j < a->m; ++j) r += Scalar::root_of_unity(a->q_order, mod(long(j) * j, a->q_order)) * AE::u(a, i, j);
  if (normalized) r = Scalar(sqrt_integer(a->m)).inv() * r;
  return r;
}

RepAssignment<AlgebraElement> nes_phi_hat(int m, int n) {
  auto a = nes_algebra(m, n);
  RepAssignment<AE> rep("phi_hat into " + a->tag(), n);
  for (int i = 1; i < n; ++i) rep.assign(Gen::sigma(i), nes_braid_generator(a, i));
  rep.assign(Gen::tau(), AE::t(a), AE::t(a, -1));
  rep.complete_sigma_n();
  return rep;
}

IdentityReport nes_mod_n_closure_check(int m, int n) {
  auto a = nes_algebra(m, n);
  IdentityReport r;
  r.name = "NES(" + std::to_string(m) + "," + std::to_string(n) + ") relations mod n";
  AE t = AE::t(a), ti = AE::t(a, -1), one = AE::one(a);
  Scalar q2 = a->q.pow(2);
  // u_n adjoined as t u_{n-1} t^-1.
  AE un = t * AE::u(a, n - 1) * ti;
  add_eq(r, "u_n = t u_{n-1} t^-1 is the normal-form u_n", un, AE::u(a, n));
  add_eq(r, "u_n^m = 1", un.pow(m), one);
  add_eq(r, "u_{n-1} u_n = q^2 u_n u_{n-1}", AE::u(a, n - 1) * un, q2 * (un * AE::u(a, n - 1)));
  add_eq(r, "u_n u_1 = q^2 u_1 u_n", un * AE::u(a, 1), q2 * (AE::u(a, 1) * un));
  for (int j = 2; j <= n - 2; ++j)
    add_eq(r, "u_n u_" + std::to_string(j) + " = u_" + std::to_string(j) + " u_n", un * AE::u(a, j), AE::u(a, j) * un);
  add_eq(r, "t u_n t^-1 = u_1", t * un * ti, AE::u(a, 1));
  add_eq(r, "t^n = 1", t.pow(n), one);
  for (int i = 1; i < n; ++i) {
    add_eq(r, "u_" + std::to_string(i) + "^m = 1", AE::u(a, i).pow(m), one);
    if (i + 1 < n)
      add_eq(r, "u_" + std::to_string(i) + " u_" + std::to_string(i + 1) + " = q^2 u_" + std::to_string(i + 1) + " u_" +
                    std::to_string(i),
             AE::u(a, i) * AE::u(a, i + 1), q2 * (AE::u(a, i + 1) * AE::u(a, i)));
  }
  auto model = nes_matrix_model(m, n);
  for (auto& c : model.checks.checks) r.add("Psi: " + c.name, c.pass, c.detail);
  return r;
}

IdentityReport nes_conjugation_identities(int m, int n, int i) {
  auto a = nes_algebra(m, n);
  IdentityReport r;
  r.name = "R_" + std::to_string(i) + " conjugation in " + a->tag();
  AE R = nes_braid_generator(a, i), Ri = R.inverse();
  Scalar q = a->q;
  int ip = wrap(i + 1, n), im = wrap(i - 1, n), ii = wrap(i, n);
  add_eq(r, "R_i R_i^-1 = 1", R * Ri, AE::one(a));
  add_eq(r, "R_i u_{i+1} R_i^-1 = q u_i^-1 u_{i+1}", R * AE::u(a, ip) * Ri, q * (AE::u(a, ii, -1) * AE::u(a, ip)));
  add_eq(r, "R_i u_{i-1} R_i^-1 = q^-1 u_{i-1} u_i", R * AE::u(a, im) * Ri, q.inv() * (AE::u(a, im) * AE::u(a, ii)));
  add_eq(r, "R_i u_i R_i^-1 = u_i", R * AE::u(a, ii) * Ri, AE::u(a, ii));
  for (int j = 1; j <= n; ++j)
    if (j != ii && j != ip && j != im)
      add_eq(r, "R_i u_" + std::to_string(j) + " R_i^-1 = u_" + std::to_string(j), R * AE::u(a, j) * Ri, AE::u(a, j));
  return r;
}

IdentityReport nes_monomiality(int m, int n, size_t max_monomials) {
  auto a = nes_algebra(m, n);
  IdentityReport r;
  r.name = "monomiality of conjugation in " + a->tag();
  size_t count = 1;
  for (int k = 0; k < n; ++k) count *= m;
  bool full = count <= max_monomials;
  for (int i = 1; i <= n; ++i) {
    AE R = nes_braid_generator(a, i), Ri = R.inverse();
    bool ok = true;
    std::string bad;
    auto test = [&](const MonoKey& k) {
      AE img = R * AE::monomial(a, k) * Ri;
      if (!img.is_monomial() && ok) {
        ok = false;
        bad = AE::key_str(*a, k) + " -> " + img.str();
      }
    };
    if (full) {
      MonoKey k(1 + n, 0);
      for (size_t c = 0; c < count; ++c) {
        size_t x = c;
        for (int j = 0; j < n; ++j, x /= m) k[1 + j] = static_cast<int8_t>(x % m);
        test(k);
      }
    } else {
      for (int j = 1; j <= n; ++j) test(AE::u(a, j).terms().begin()->first);
    }
    r.add("R_" + std::to_string(i) + " maps " + (full ? "every monomial" : "every generator") + " to a monomial", ok, bad);
  }
  return r;
}

PhaseOp PhaseOp::identity(size_t d, int order) {
  PhaseOp p;
  p.order = order;
  p.target.resize(d);
  for (size_t k = 0; k < d; ++k) p.target[k] = k;
  p.phase.assign(d, 0);
  return p;
}

PhaseOp PhaseOp::operator*(const PhaseOp& o) const {
  PhaseOp r;
  r.order = order;
  r.target.resize(o.dim());
  r.phase.resize(o.dim());
  for (size_t k = 0; k < o.dim(); ++k) {
    size_t mid = o.target[k];
    r.target[k] = target[mid];
    r.phase[k] = mod(o.phase[k] + phase[mid], order);
  }
  return r;
}

PhaseOp PhaseOp::inverse() const {
  PhaseOp r;
  r.order = order;
  r.target.resize(dim());
  r.phase.resize(dim());
  for (size_t k = 0; k < dim(); ++k) {
    r.target[target[k]] = k;
    r.phase[target[k]] = mod(-phase[k], order);
  }
  return r;
}

PhaseOp PhaseOp::scaled(int k) const {
  PhaseOp r = *this;
  for (auto& p : r.phase) p = mod(p + k, order);
  return r;
}

bool PhaseOp::operator==(const PhaseOp& o) const {
  return order == o.order && target == o.target && phase == o.phase;
}

Matrix PhaseOp::dense() const {
  Matrix M(dim());
  for (size_t k = 0; k < dim(); ++k) M(target[k], k) = Scalar::root_of_unity(order, phase[k]);
  return M;
}

namespace {

// Acts on sites (s1, s2) (0-based, s1 first) by e_i (x) e_j -> q^{j-i} e_{i+1} (x) e_{j+1}.
PhaseOp pair_op(int m, int n, int order, int s1, int s2) {
  size_t dim = ipow(m, n);
  PhaseOp p;
  p.order = order;
  p.target.resize(dim);
  p.phase.resize(dim);
  std::vector<size_t> w(n);
  for (int s = 0; s < n; ++s) w[s] = ipow(m, n - 1 - s);
  for (size_t idx = 0; idx < dim; ++idx) {
    int i = static_cast<int>(idx / w[s1] % m), j = static_cast<int>(idx / w[s2] % m);
    size_t out = idx - i * w[s1] - j * w[s2] + ((i + 1) % m) * w[s1] + ((j + 1) % m) * w[s2];
    p.target[idx] = out;
    p.phase[idx] = mod(j - i, order);
  }
  return p;
}

}  // namespace

NesMatrixModel nes_matrix_model(int m, int n, size_t budget) {
  NesMatrixModel M;
  M.m = m;
  M.n = n;
  M.alg = nes_algebra(m, n);
  int P = M.alg->q_order;
  size_t dim = ipow(m, n);
  if (dim > budget) throw SizeBudgetExceeded("matrix model dimension " + std::to_string(dim));
  M.U = pair_op(m, 2, P, 0, 1);
  M.X.order = P;
  M.X.target.resize(dim);
  M.X.phase.assign(dim, 0);
  size_t top = ipow(m, n - 1);
  for (size_t idx = 0; idx < dim; ++idx) M.X.target[idx] = (idx % m) * top + idx / m;
  for (int i = 1; i < n; ++i) M.Ui.push_back(pair_op(m, n, P, i - 1, i));
  PhaseOp Xi = M.X.inverse();
  M.Ui.push_back(M.X * M.Ui[n - 2] * Xi);

  auto& r = M.checks;
  r.name = "Psi matrix model for " + M.alg->tag();
  PhaseOp I2 = PhaseOp::identity(ipow(m, 2), P), I = PhaseOp::identity(dim, P);
  PhaseOp Um = I2;
  for (int k = 0; k < m; ++k) Um = M.U * Um;
  r.add("U^m = I", Um == I2);
  r.add("U_n := X U_{n-1} X^-1 acts on the (n,1) pair", M.Ui[n - 1] == pair_op(m, n, P, n - 1, 0));
  PhaseOp Xn = I;
  for (int k = 0; k < n; ++k) Xn = M.X * Xn;
  r.add("X^n = I", Xn == I);
  for (int i = 1; i <= n; ++i) {
    std::string s = std::to_string(i), s1 = std::to_string(wrap(i + 1, n));
    const PhaseOp& A = M.Ui[i - 1];
    const PhaseOp& B = M.Ui[wrap(i + 1, n) - 1];
    r.add("X U_" + s + " X^-1 = U_" + s1, M.X * A * Xi == B);
    r.add("U_" + s + " U_" + s1 + " = q^2 U_" + s1 + " U_" + s, A * B == (B * A).scaled(2));
    PhaseOp Ak = I;
    for (int k = 0; k < m; ++k) Ak = A * Ak;
    r.add("U_" + s + "^m = I", Ak == I);
    for (int j = i + 2; j <= n; ++j) {
      if (wrap(j + 1, n) == i) continue;
      const PhaseOp& C = M.Ui[j - 1];
      r.add("U_" + s + " U_" + std::to_string(j) + " = U_" + std::to_string(j) + " U_" + s, A * C == C * A);
    }
  }
  return M;
}

PhaseOp NesMatrixModel::psi_monomial(const MonoKey& k) const {
  PhaseOp r = PhaseOp::identity(X.dim(), X.order);
  for (int a = 0; a < k[0]; ++a) r = r * X;
  for (int i = 0; i < n; ++i)
    for (int e = 0; e < k[1 + i]; ++e) r = r * Ui[i];
  return r;
}

Matrix NesMatrixModel::psi(const AlgebraElement& x) const {
  if (x.algebra()->tag() != alg->tag()) throw TagMismatch(x.algebra()->tag() + " vs " + alg->tag());
  size_t dim = X.dim();
  if (dim > kDefaultBudgetDim)
    throw SizeBudgetExceeded("dimension " + std::to_string(dim) + " exceeds budget " + std::to_string(kDefaultBudgetDim));
  Matrix M(dim);
  for (auto& [k, c] : x.terms()) {
    PhaseOp p = psi_monomial(k);
    for (size_t j = 0; j < dim; ++j) M(p.target[j], j) += c * Scalar::root_of_unity(p.order, p.phase[j]);
  }
  return M;
}

RepAssignment<Matrix> NesMatrixModel::local_rep() const {
  RepAssignment<Matrix> rep("Psi o phi_hat for " + alg->tag(), n);
  for (int i = 1; i < n; ++i) {
    AE R = nes_braid_generator(alg, i);
    rep.assign(Gen::sigma(i), psi(R), psi(R.inverse()));
  }
  Matrix Xd = X.dense();
  rep.assign(Gen::tau(), Xd, Xd.transpose());
  rep.complete_sigma_n();
  return rep;
}

AlgebraElement quat_generator(const AlgebraPtr& a, int i) {
  if (a->kind != AlgebraKind::Quat) throw TagMismatch("xi lives in Q_n, not " + a->tag());
  AE s = AE::one(a) + AE::u(a, i) + AE::v(a, i) + AE::u(a, i) * AE::v(a, i);
  return (Scalar(-1) / (Scalar(2) * a->q)) * s;
}

RepAssignment<AlgebraElement> quat_xi(int n) {
  auto a = quat_algebra(n);
  RepAssignment<AE> rep("xi into " + a->tag(), n);
  for (int i = 1; i < n; ++i) rep.assign(Gen::sigma(i), quat_generator(a, i));
  rep.assign(Gen::tau(), AE::t(a), AE::t(a, -1));
  rep.complete_sigma_n();
  return rep;
}

IdentityReport quat_hom_check(int n) {
  auto rep = quat_xi(n);
  auto a = rep.identity().algebra();
  IdentityReport r;
  r.name = "xi: NB_" + std::to_string(n) + " -> " + a->tag();
  add_eq(r, "xi(sigma_n) = -1/(2q)(1 + u_n + v_n + u_n v_n)", rep.image(Gen::sigma(n)), quat_generator(a, n));
  add_suite(r, "full ", verify(rep, necklace_relations_full(n)));
  add_suite(r, "reduced ", verify(rep, necklace_relations_reduced(n)));
  return r;
}

IdentityReport quat_conjugation_table(int n, int i) {
  auto a = quat_algebra(n);
  IdentityReport r;
  r.name = "xi(sigma_" + std::to_string(i) + ") conjugation table in " + a->tag();
  AE x = quat_generator(a, i);
  AE ui = AE::u(a, i), vi = AE::v(a, i);
  add_eq(r, "u_i xi = xi u_i v_i", ui * x, x * ui * vi);
  add_eq(r, "v_i xi = xi u_i", vi * x, x * ui);
  for (int k : {wrap(i - 1, n), wrap(i + 1, n)}) {
    std::string ks = std::to_string(k);
    AE uk = AE::u(a, k), vk = AE::v(a, k);
    add_eq(r, "u_" + ks + " xi = xi u_" + ks + " v_i", uk * x, x * uk * vi);
    add_eq(r, "v_" + ks + " xi = xi (-u_i v_i v_" + ks + ")", vk * x, x * (Scalar(-1) * (ui * vi * vk)));
  }
  return r;
}

IdentityReport quat_monomiality(int n) {
  auto a = quat_algebra(n);
  IdentityReport r;
  r.name = "monomiality of xi conjugation in " + a->tag();
  size_t count = size_t(1) << (2 * n);
  for (int i = 1; i <= n; ++i) {
    AE x = quat_generator(a, i), xi = x.inverse();
    bool ok = true;
    std::string bad;
    MonoKey k(1 + 2 * n, 0);
    for (size_t c = 0; c < count && ok; ++c) {
      for (int j = 0; j < 2 * n; ++j) k[1 + j] = static_cast<int8_t>((c >> j) & 1);
      AE img = x * AE::monomial(a, k) * xi;
      if (!img.is_monomial()) {
        ok = false;
        bad = AE::key_str(*a, k) + " -> " + img.str();
      }
    }
    r.add("xi_" + std::to_string(i) + " maps every monomial to a monomial", ok, bad);
  }
  return r;
}

}  // namespace necklace
