#include <numeric>
#include <stdexcept>

#include "necklace/classical_reps.hpp"
#include "necklace/spectrum.hpp"
#include "necklace/variables.hpp"

namespace necklace {

Scalar RootPlan::apply(const Scalar& s) const {
  Scalar r = s;
  for (auto& c : contexts) r = c.apply(r);
  return r;
}

Matrix RootPlan::apply(const Matrix& m) const {
  if (contexts.empty()) return m;
  return m.map([this](const Scalar& s) { return apply(s); });
}

BraidRep RootPlan::apply(const BraidRep& r) const {
  if (contexts.empty()) return r;
  return r.mapped([this](const Scalar& s) { return apply(s); });
}

std::vector<std::string> RootPlan::describe() const {
  std::vector<std::string> out;
  for (auto& c : contexts) out.push_back(c.describe());
  return out;
}

RootPlan plan_roots(const std::vector<Scalar>& values, int k) {
  std::map<int, int> need;
  for (auto& c : values) {
    if (!c.is_monomial()) throw SpectrumNotResolved("value " + c.str() + " is not a monomial scalar");
    const Exps& e = c.num().terms()[0].e;
    for (int v = 0; v < static_cast<int>(e.size()); ++v) {
      if (e[v] == 0) continue;
      int kv = k / std::gcd(std::abs(e[v]), k);
      need[v] = std::lcm(need.count(v) ? need[v] : 1, kv);
    }
  }
  RootPlan plan;
  for (auto [v, kv] : need)
    if (kv > 1) plan.contexts.push_back(adjoin_formal_root(v, kv));
  return plan;
}

Scalar exact_root(const Scalar& c, int k, int branch) {
  Scalar out;
  if (!monomial_root(c, k, branch, &out))
    throw SpectrumNotResolved("no exact " + std::to_string(k) + "-th root of " + c.str());
  return out;
}

RepAssignment<Matrix> NecklaceExtension::assignment() const {
  auto a = base.assignment();
  a.set_name(name);
  int n = base.n;
  a.assign(Gen::sigma(n), sigma_n, sigma_n_inv);
  a.assign(Gen::tau(), tau, tau_inv);
  return a;
}

VerifyReport NecklaceExtension::verify_full() const { return verify(assignment(), necklace_relations_full(base.n)); }

NecklaceExtension make_extension(std::string name, std::string kind, BraidRep base, Matrix tau, Matrix tau_inv) {
  NecklaceExtension e;
  e.name = std::move(name);
  e.kind = std::move(kind);
  const Matrix& s = base.sigma.back();
  const Matrix& si = base.sigma_inv.back();
  e.sigma_n = tau * s * tau_inv;
  e.sigma_n_inv = tau * si * tau_inv;
  e.base = std::move(base);
  e.tau = std::move(tau);
  e.tau_inv = std::move(tau_inv);
  return e;
}

NecklaceExtension translator_extension(std::string name, const BraidRep& rep, const Matrix& g, const Matrix& g_inv,
                                        int branch, const Spectrum* known) {
  int n = rep.n, k = 2 * n;
  Matrix M = g.pow(k);
  Scalar c;
  bool scalar = M.is_scalar_multiple_of_identity(&c);
  Spectrum spec = scalar ? Spectrum{{c, static_cast<int>(M.dim())}} : known ? *known : monomial_spectrum(M);
  // Lagrange form: P_j = L_j / w_j with L_j = prod_{k != j} (M - c_k), w_j = prod_{k != j} (c_j - c_k).
  std::vector<Matrix> L;
  std::vector<Scalar> w;
  if (!scalar) {
    Matrix I = Matrix::identity(M.dim());
    for (size_t j = 0; j < spec.size(); ++j) {
      Matrix Lj = I;
      Scalar wj(1);
      for (size_t m = 0; m < spec.size(); ++m)
        if (m != j) {
          Lj = Lj * (M - spec[m].value * I);
          wj *= spec[j].value - spec[m].value;
        }
      if (j == 0 && !((M - spec[0].value * I) * Lj).is_zero())
        throw NotDiagonalizable("minimal polynomial has a repeated root");
      L.push_back(std::move(Lj));
      w.push_back(wj);
    }
  }
  std::vector<Scalar> inv_vals;
  for (auto& e : spec) inv_vals.push_back(e.value.inv());
  RootPlan plan = plan_roots(inv_vals, k);
  BraidRep base = plan.apply(rep);
  Matrix gs = plan.apply(g), gsi = plan.apply(g_inv);
  size_t d = g.dim();
  Matrix D(d), Dinv(d);
  std::string eig;
  for (size_t j = 0; j < spec.size(); ++j) {
    Scalar lam = exact_root(plan.apply(inv_vals[j]), k, branch);
    if (!eig.empty()) eig += ", ";
    eig += spec[j].value.str() + " (x" + std::to_string(spec[j].multiplicity) + ")";
    if (scalar) {
      D = lam * Matrix::identity(d);
      Dinv = lam.inv() * Matrix::identity(d);
    } else {
      Matrix Lj = plan.apply(L[j]);
      Scalar wj = plan.apply(w[j]);
      D += (lam / wj) * Lj;
      Dinv += (lam.inv() / wj) * Lj;
    }
  }
  auto ext = make_extension(std::move(name), "standard", base, D * gs, gsi * Dinv);
  ext.roots = plan;
  ext.D = D;
  Scalar lam;
  if (D.is_scalar_multiple_of_identity(&lam)) {
    ext.scalar = lam;
    ext.values["scalar"] = lam.str();
    ext.values["scalar^2n"] = lam.pow(k).str();
  }
  bool commutes = true;
  for (auto& s : ext.base.sigma) commutes = commutes && commute(D, s);
  ext.flags["D_commutes"] = commutes;
  ext.flags["tau_order_divides_2n"] = ext.tau.pow(k).is_identity();
  ext.values["gamma^2n eigenvalues"] = eig;
  ext.values["branch"] = std::to_string(branch);
  for (auto& s : plan.describe()) ext.notes.push_back("adjoined " + s);
  return ext;
}

NecklaceExtension standard_extension(const BraidRep& rep, int branch) {
  return translator_extension(rep.name + " standard extension", rep, twist(rep), twist_inverse(rep), branch);
}

NecklaceExtension nonstandard_block_tau(int n, const Scalar& z, const Scalar& s) {
  if (n < 3) throw std::invalid_argument("block tau needs n >= 3");
  if (s.is_zero()) throw ParameterDegenerate("t must be nonzero");
  BraidRep base = standard_rep(n, z);
  Matrix T(n), Ti(n);
  for (int j = 0; j + 1 < n; ++j) {
    T(j + 1, j) = s;
    Ti(j, j + 1) = s.inv();
  }
  T(0, n - 1) = s.pow(1 - n);
  Ti(n - 1, 0) = s.pow(n - 1);
  bool crit = s.pow(2 * n) == z.pow(-2 * (n - 1));
  bool prop = (T * twist_inverse(base)).is_scalar_multiple_of_identity();
  auto ext = make_extension("standard block tau", crit ? "standard" : "nonstandard", base, T, Ti);
  ext.flags["standard_by_criterion"] = crit;
  ext.flags["tau_proportional_to_twist"] = prop;
  ext.flags["tau_order_divides_2n"] = T.pow(2 * n).is_identity();
  ext.notes.push_back("tau is proportional to gamma exactly when t^n = z^(1-n); the criterion t^2n = z^(-2(n-1)) also admits t^n = -z^(1-n)");
  return ext;
}

TauList n2_tau_list(const Scalar& z) {
  TauList out;
  out.roots = plan_roots({z}, 2);
  Scalar zz = out.roots.apply(z);
  Scalar w = exact_root(zz, 2, 0);
  Scalar i = Scalar::root_of_unity(4, 1), half = Scalar::rational(1, 2), one(1);
  BraidRep base = out.roots.apply(standard_rep(2, z));
  out.Z = base.sigma[0];
  const Matrix& Z = out.Z;
  auto check = [&](const std::string& label, const Matrix& tau) {
    TauCandidate c;
    c.label = label;
    c.tau = tau;
    Matrix ti = tau.inverse();
    c.commutes = tau * Z == Z * tau;
    c.order_four = tau.pow(4).is_identity();
    c.conjugation = tau * tau * Z * ti * ti == Z;
    c.relations_pass = make_extension("n=2 " + label, "nonstandard", base, tau, ti).verify_full().all_pass();
    return c;
  };
  Matrix I = Matrix::identity(2);
  out.listed.push_back(check("+I", I));
  out.listed.push_back(check("-I", -I));
  Matrix dg = Matrix::diag({one, i / zz});
  out.listed.push_back(check("+diag(1,i/z)", dg));
  out.listed.push_back(check("-diag(1,i/z)", -dg));
  Matrix ad = Matrix::from_rows({{0, w}, {w.inv(), 0}});
  for (int k = 0; k < 4; ++k)
    out.listed.push_back(check("i^" + std::to_string(k) + "*antidiag(sqrt z,1/sqrt z)", Scalar::root_of_unity(4, k) * ad));
  for (int sign : {1, -1})
    for (int eps : {1, -1}) {
      Scalar p = one + Scalar(eps) * i, m = one - Scalar(eps) * i;
      Matrix h = Matrix::from_rows({{p, m * w}, {m * w.inv(), p}});
      std::string label = std::string(sign > 0 ? "+" : "-") + "1/2[[1" + (eps > 0 ? "+" : "-") + "i,...]]";
      out.listed.push_back(check(label, Scalar(sign) * half * h));
    }
  out.extra.push_back(check("+iI", i * I));
  out.extra.push_back(check("-iI", -i * I));
  return out;
}

int lkb_nonstandard_branches(int n) {
  if (n == 3) return 6;
  if (n == 4) return 8;
  throw std::invalid_argument("non-standard LKB tau is given for n = 3, 4");
}

NecklaceExtension lkb_nonstandard_tau(int n, const Scalar& q, const Scalar& t, int branch) {
  int nb = lkb_nonstandard_branches(n);
  if (branch < 0 || branch >= nb) throw std::invalid_argument("branch out of range");
  if (q == Scalar(1)) throw ParameterDegenerate("q must differ from 1");
  RootPlan plan = plan_roots({n == 3 ? t.inv() : t}, n == 3 ? 3 : 2);
  BraidRep base = plan.apply(lkb(n, q, t));
  Scalar Q = plan.apply(q), Tt = plan.apply(t), one(1);
  Scalar p = Q - one;
  Matrix M;
  Scalar c;
  std::string cname;
  if (n == 3) {
    c = exact_root(plan.apply(t.inv()), 3, 0) * Scalar::root_of_unity(6, branch);
    cname = "alpha";
    Scalar q2 = Q * Q;
    M = Matrix::from_rows({{0, (q2 - Q + one) / q2, -p / q2},
                           {0, -p / Q, Q.inv()},
                           {Tt * q2, p * (Tt * q2 - Q + one) / Q, p / Q}});
  } else {
    c = exact_root(Tt, 2, 0) * Scalar::root_of_unity(8, branch);
    cname = "beta";
    auto inv = [&](int e) { return (Q.pow(e) * Tt).inv(); };
    Scalar q2 = Q * Q, q3 = q2 * Q, p2 = p * p;
    M = Matrix::from_rows({
        {0, 0, inv(4) * (q3 - Q + one), 0, -inv(4) * p, -inv(4) * p},
        {0, 0, -inv(3) * p, 0, inv(3) * (q2 - Q + one), -inv(3) * p},
        {0, 0, -inv(2) * p, 0, -inv(2) * p, inv(2)},
        {q2, 0, inv(3) * p * (q3 * Tt - Q + one), 0, inv(3) * (q3 - Scalar(2) * q2 + Scalar(2) * Q - one), -inv(3) * p2},
        {0, q2, inv(2) * p * (q3 * Tt - Q + one), 0, -inv(2) * p2, inv(2) * p},
        {0, 0, -inv(1) * p2, q2, inv(1) * (q3 * Tt - q2 * (Tt + one) + Scalar(2) * Q - one), inv(1) * p},
    });
  }
  Matrix tau = c * M;
  Matrix tn = tau.pow(n);
  Scalar lam;
  Matrix ti;
  bool scalar_power = tn.is_scalar_multiple_of_identity(&lam);
  if (scalar_power && !lam.is_zero())
    ti = lam.inv() * tau.pow(n - 1);
  else
    ti = tau.inverse();
  auto ext = make_extension("lkb non-standard tau", "nonstandard", base, tau, ti);
  ext.roots = plan;
  ext.values[cname] = c.str();
  ext.values[cname + "^" + std::to_string(n)] = c.pow(n).str();
  ext.values["branch"] = std::to_string(branch);
  if (scalar_power) ext.values["tau^" + std::to_string(n)] = lam.str();
  ext.flags["tau_n_scalar"] = scalar_power;
  ext.flags["tau_n_identity"] = scalar_power && lam.is_one();
  ext.flags["tau_proportional_to_twist"] = (tau * twist_inverse(base)).is_scalar_multiple_of_identity();
  for (auto& s : plan.describe()) ext.notes.push_back("adjoined " + s);
  return ext;
}

NecklaceExtension unreduced_burau_extension(int n, const Scalar& t, const Scalar& a, IrreducibilityReport* irr,
                                            uint64_t seed) {
  if (a.is_zero()) throw ParameterDegenerate("a must be nonzero");
  BraidRep base = burau_unreduced(n, t);
  Matrix T(n), Ti(n);
  for (int j = 0; j + 1 < n; ++j) {
    T(j + 1, j) = a.inv();
    Ti(j, j + 1) = a;
  }
  T(0, n - 1) = a.pow(n - 1);
  Ti(n - 1, 0) = a.pow(1 - n);
  auto ext = make_extension("unreduced burau extension", "nonstandard", base, T, Ti);
  if (irr) {
    std::vector<Matrix> nb = ext.base.sigma;
    nb.push_back(ext.sigma_n);
    nb.push_back(T);
    irr->necklace = burnside_generic(nb, seed);
    irr->braid = burnside_generic(ext.base.sigma, seed);
    ext.flags["necklace_irreducible"] = irr->necklace.irreducible;
    ext.flags["braid_irreducible"] = irr->braid.irreducible;
  }
  return ext;
}

std::vector<Matrix> dim2_tau_options(int row) {
  auto z = [](int N, int k) { return Scalar::root_of_unity(N, k); };
  Scalar one(1);
  std::vector<Matrix> out;
  auto pm = [&](Scalar x, Scalar y) {
    out.push_back(Matrix::diag({x, y}));
    out.push_back(Matrix::diag({-x, -y}));
  };
  switch (row) {
    case 1:
      break;
    case 2:
      pm(one, z(4, 1));
      pm(z(4, 1), one);
      break;
    case 3:
      for (int s : {1, -1}) pm(z(6, s), one);
      for (int s : {1, -1}) pm(one, z(6, s));
      pm(z(3, 1), z(6, 1));
      pm(z(6, 1), z(3, 1));
      break;
    case 4:
      for (int s : {1, -1}) pm(one, z(3, s));
      for (int s : {1, -1}) pm(z(3, s), z(3, -s));
      break;
    default:
      throw std::invalid_argument("the dimension-2 family has rows 1..4");
  }
  return out;
}

NecklaceExtension dim2_family(int n, int row, const Dim2Params& p, GenericIrreducibility* irr, uint64_t seed) {
  if (n < 2 || n > 4) throw std::invalid_argument("dimension-2 families cover n = 2, 3, 4");
  if (row < 1 || row > 4) throw std::invalid_argument("the dimension-2 family has rows 1..4");
  const Scalar &a = p.a, &d = p.d;
  if (row <= 3 && a == d) throw RestrictionViolated("row " + std::to_string(row) + " requires a != d");
  if (row == 2 && n != 2) throw RestrictionViolated("row 2 requires n = 2");
  if (row >= 3 && n != 3) throw RestrictionViolated("row " + std::to_string(row) + " requires n = 3");
  Scalar one(1);
  Scalar k = a * a - a * d + d * d;
  Matrix s1, tau;
  if (row == 4) {
    if (d.is_zero()) throw RestrictionViolated("row 4 requires d != 0");
    Scalar w = Scalar::root_of_unity(3, p.omega_power);
    if (p.c == w * d * d) throw RestrictionViolated("row 4 requires c != omega d^2");
    s1 = Matrix::from_rows({{w * d, one}, {p.c, d}});
  } else {
    Scalar c = row == 1 ? k : row == 2 ? -k : Scalar::rational(-1, 2) * k;
    s1 = Matrix::from_rows({{a, one}, {c, d}});
  }
  if (row == 1) {
    tau = Matrix::diag({-p.t2, p.t2});
  } else {
    auto opts = dim2_tau_options(row);
    if (p.tau_choice < 0 || p.tau_choice >= static_cast<int>(opts.size()))
      throw std::invalid_argument("tau choice out of range");
    tau = opts[p.tau_choice];
  }
  Matrix ti = tau.inverse();
  std::vector<Matrix> sig{s1};
  for (int i = 2; i < n; ++i) sig.push_back(tau * sig.back() * ti);
  auto ext = make_extension("table1 row " + std::to_string(row), "nonstandard",
                            make_braid_rep("dim2 row " + std::to_string(row), n, sig), tau, ti);
  if (irr) {
    *irr = burnside_generic({s1, tau}, seed);
    ext.flags["irreducible"] = irr->irreducible;
  }
  return ext;
}

}  // namespace necklace
