#include "necklace/tl_chain.hpp"

#include <algorithm>
#include <bit>
#include <json.hpp>
#include <set>

#include "necklace/local_operator.hpp"

namespace necklace {

namespace {

Matrix local(const Matrix& b, int n, int pos) { return materialize(LocalOperator::block(b, 2, n, pos)); }

void add_check(IdentityReport& r, std::string name, bool pass) { r.add(std::move(name), pass); }

}  // namespace

Matrix TLChain::gamma() const {
  Matrix G = Matrix::identity(size_t(1) << n);
  for (auto& gi : g) G = G * gi;
  return G;
}

Matrix TLChain::gamma_inverse() const {
  Matrix G = Matrix::identity(size_t(1) << n);
  for (auto& gi : g_inv) G = gi * G;
  return G;
}

BraidRep TLChain::braid_rep() const {
  BraidRep r;
  r.name = "XXZ chain";
  r.n = n;
  r.sigma = g;
  r.sigma_inv = g_inv;
  r.params["t"] = t;
  return r;
}

TLChain build_chain(int n, const Scalar& t, bool run_checks) {
  if (n < 2) throw std::invalid_argument("the chain needs n >= 2");
  if (t.is_zero()) throw ParameterDegenerate("t must be nonzero");
  TLChain c;
  c.n = n;
  c.t = t;
  c.q = t * t;
  c.cup = {Scalar(0), t, t.inv(), Scalar(0)};
  c.loop = Scalar(0);
  for (auto& x : c.cup) c.loop += x * x;
  Matrix U2(4);
  for (size_t i = 0; i < 4; ++i)
    for (size_t j = 0; j < 4; ++j) U2(i, j) = c.cup[i] * c.cup[j];
  size_t d = size_t(1) << n;
  Matrix I = Matrix::identity(d);
  c.H = Matrix(d);
  for (int i = 1; i < n; ++i) {
    Matrix Ui = local(U2, n, i);
    c.U.push_back(Ui);
    c.g.push_back(I - c.q * Ui);
    c.g_inv.push_back(I - c.q.inv() * Ui);
    c.H += Ui;
  }
  auto& r = c.checks;
  r.name = "XXZ chain n = " + std::to_string(n);
  if (!run_checks) return c;
  for (int i = 0; i + 1 < n; ++i) {
    std::string s = std::to_string(i + 1);
    add_check(r, "U_" + s + "^2 = (u u^t) U_" + s, c.U[i] * c.U[i] == c.loop * c.U[i]);
    add_check(r, "g_" + s + " g_" + s + "^-1 = 1", (c.g[i] * c.g_inv[i]).is_identity());
    if (i + 2 < n) {
      add_check(r, "U_" + s + " U_" + std::to_string(i + 2) + " U_" + s + " = U_" + s, c.U[i] * c.U[i + 1] * c.U[i] == c.U[i]);
      add_check(r, "U_" + std::to_string(i + 2) + " U_" + s + " U_" + std::to_string(i + 2) + " = U_" + std::to_string(i + 2),
                c.U[i + 1] * c.U[i] * c.U[i + 1] == c.U[i + 1]);
      add_check(r, "g_" + s + " g_" + std::to_string(i + 2) + " g_" + s + " = g_" + std::to_string(i + 2) + " g_" + s + " g_" +
                       std::to_string(i + 2),
                c.g[i] * c.g[i + 1] * c.g[i] == c.g[i + 1] * c.g[i] * c.g[i + 1]);
    }
    for (int j = i + 2; j + 1 < n; ++j)
      add_check(r, "g_" + s + " g_" + std::to_string(j + 1) + " = g_" + std::to_string(j + 1) + " g_" + s, commute(c.g[i], c.g[j]));
  }
  if (n >= 3) {
    Matrix G = c.gamma(), Gi = c.gamma_inverse();
    add_check(r, "gamma gamma^-1 = 1", (G * Gi).is_identity());
    for (int i = 0; i + 2 < n; ++i)
      add_check(r, "gamma g_" + std::to_string(i + 1) + " = g_" + std::to_string(i + 2) + " gamma", G * c.g[i] == c.g[i + 1] * G);
  }
  return c;
}

Matrix g1_squared_display(const Scalar& q) {
  Scalar one(1), zero(0), q2 = q * q;
  Scalar off = -(q * (one - q2));
  return Matrix::from_rows({{one, zero, zero, zero},
                            {zero, one - q2 + q2 * q2, off, zero},
                            {zero, off, q2, zero},
                            {zero, zero, zero, one}});
}

std::vector<std::pair<int, int>> gamma_spectrum_expected(int n) {
  static const std::map<int, std::vector<std::pair<int, int>>> table = {
      {0, {{0, 0}}},
      {1, {{1, 0}}},
      {2, {{0, 4}, {2, 0}}},
      {3, {{1, 6}, {3, 0}}},
      {4, {{0, 12}, {2, 8}, {4, 0}}},
      {5, {{1, 16}, {3, 10}, {5, 0}}},
      {6, {{0, 24}, {2, 20}, {4, 12}, {6, 0}}},
      {7, {{1, 30}, {3, 24}, {5, 14}, {7, 0}}},
  };
  auto it = table.find(n);
  if (it == table.end()) throw std::invalid_argument("spectrum table covers n <= 7");
  return it->second;
}

bool SpectrumTable::all_match() const {
  for (auto& r : rows)
    if (!r.match) return false;
  for (auto& [n, ok] : set_match)
    if (!ok) return false;
  for (auto& [n, ok] : sectors_commute)
    if (!ok) return false;
  return !rows.empty();
}

std::string SpectrumTable::to_json() const {
  nlohmann::ordered_json j;
  j["all_match"] = all_match();
  j["rows"] = nlohmann::ordered_json::array();
  for (auto& r : rows)
    j["rows"].push_back({{"n", r.n},
                         {"l", r.l},
                         {"eigenvalue", r.eigenvalue.str()},
                         {"expected", r.expected.str()},
                         {"multiplicity", r.multiplicity},
                         {"match", r.match}});
  for (auto& [n, ok] : set_match) j["set_match"][std::to_string(n)] = ok;
  return j.dump(2);
}

SpectrumTable gamma_spectrum_table(int n_min, int n_max, const Scalar& t) {
  if (n_min < 2 || n_max > 7) throw std::invalid_argument("spectrum table needs 2 <= n <= 7");
  SpectrumTable out;
  for (int n = n_min; n <= n_max; ++n) {
    TLChain c = build_chain(n, t, false);
    Matrix M = c.gamma().pow(n);
    size_t d = M.dim();
    // Weight spaces by number of up spins.
    std::vector<std::vector<size_t>> weight(n + 1);
    for (size_t b = 0; b < d; ++b) weight[std::popcount(b)].push_back(b);
    bool block = true;
    for (size_t i = 0; i < d; ++i)
      for (size_t j = 0; j < d; ++j)
        if (std::popcount(i) != std::popcount(j) && !M(i, j).is_zero()) block = false;
    out.sectors_commute[n] = block;
    std::vector<Spectrum> ws(n + 1);
    for (int k = 0; k <= n; ++k) ws[k] = monomial_spectrum(M.restrict_to(weight[k]));
    auto contains = [](const Spectrum& s, const Scalar& v) {
      for (auto& e : s)
        if (e.value == v) return true;
      return false;
    };
    std::vector<Scalar> computed_set;
    for (auto& s : ws)
      for (auto& e : s)
        if (std::find(computed_set.begin(), computed_set.end(), e.value) == computed_set.end()) computed_set.push_back(e.value);
    std::vector<Scalar> expected_set;
    for (auto [l, e] : gamma_spectrum_expected(n)) {
      int k = (n - l) / 2;
      SpectrumRow row;
      row.n = n;
      row.l = l;
      row.expected = c.q.pow(e);
      expected_set.push_back(row.expected);
      // The sector-l eigenvalue first appears at weight (n-l)/2.
      std::vector<Scalar> fresh;
      for (auto& ev : ws[k])
        if (k == 0 || !contains(ws[k - 1], ev.value)) fresh.push_back(ev.value);
      if (fresh.size() == 1) {
        row.eigenvalue = fresh[0];
        for (auto& s : ws)
          for (auto& ev : s)
            if (ev.value == row.eigenvalue) row.multiplicity += ev.multiplicity;
        row.match = row.eigenvalue == row.expected;
      }
      out.rows.push_back(row);
    }
    bool same = computed_set.size() == expected_set.size();
    for (auto& v : computed_set) same = same && std::find(expected_set.begin(), expected_set.end(), v) != expected_set.end();
    out.set_match[n] = same;
  }
  return out;
}

std::string DichotomyReport::to_json() const {
  nlohmann::ordered_json j;
  j["n"] = n;
  j["q"] = "i";
  j["gamma_2n_identity"] = gamma_2n_identity;
  j["gamma_n_identity"] = gamma_n_identity;
  j["flat_extension_passes"] = flat_extension_passes;
  j["unipotent"] = unipotent;
  if (nilpotency_index) j["nilpotency_index"] = *nilpotency_index;
  j["matches_prediction"] = matches_prediction;
  return j.dump(2);
}

DichotomyReport dichotomy_probe(int n) {
  DichotomyReport r;
  r.n = n;
  TLChain c = build_chain(n, Scalar::root_of_unity(8), false);
  Matrix G = c.gamma(), Gi = c.gamma_inverse();
  Matrix Gn = G.pow(n), G2n = Gn * Gn;
  r.gamma_n_identity = Gn.is_identity();
  r.gamma_2n_identity = G2n.is_identity();
  if (n % 2) {
    if (n >= 3) r.flat_extension_passes = make_extension("flat XXZ extension", "standard", c.braid_rep(), G, Gi).verify_full().all_pass();
    else r.flat_extension_passes = r.gamma_2n_identity;
    r.matches_prediction = r.flat_extension_passes && r.gamma_2n_identity && !r.gamma_n_identity;
  } else {
    auto p = nilpotency_probe(G2n);
    r.nilpotency_index = p.index;
    r.unipotent = p.index.has_value() && !p.is_identity;
    r.matches_prediction = !r.gamma_2n_identity && r.unipotent;
  }
  return r;
}

Matrix blob(const Scalar& a) {
  Scalar s = a + a.inv();
  if (s.is_zero()) throw ParameterDegenerate("a + a^-1 = 0");
  Scalar c = s.inv();
  return Matrix::from_rows({{c * a, c}, {c, c * a.inv()}});
}

RepAssignment<Matrix> SeamedChain::assignment() const {
  int n = base.n;
  RepAssignment<Matrix> rep("seamed XXZ chain", n);
  for (int i = 1; i < n; ++i) rep.assign_trusted(Gen::sigma(i), base.g[i - 1], base.g_inv[i - 1]);
  rep.assign_trusted(Gen::tau(), beta, beta_inv);
  rep.complete_sigma_n();
  return rep;
}

SeamedChain build_seam(const TLChain& chain, const Scalar& a) {
  SeamedChain s;
  s.base = chain;
  s.a = a;
  s.f = blob(a);
  const Scalar& q = chain.q;
  int n = chain.n;
  // y_f = u (f (x) 1) u^t
  Matrix f2 = kron(s.f, Matrix::identity(2));
  s.y_f = Scalar(0);
  for (size_t i = 0; i < 4; ++i)
    for (size_t j = 0; j < 4; ++j) s.y_f += chain.cup[i] * f2(i, j) * chain.cup[j];
  Scalar den = q.inv() - s.y_f;
  if (den.is_zero()) throw ParameterDegenerate("q^-1 = y_f, x is undefined");
  s.x = (q - q.inv()) / den;
  Scalar opx = Scalar(1) + s.x;
  if (opx.is_zero()) throw ParameterDegenerate("1 + x = 0, 1 + x f is singular");
  size_t d = size_t(1) << n;
  Matrix I = Matrix::identity(d);
  s.f1 = local(s.f, n, 1);
  s.beta = (I + s.x * s.f1) * chain.gamma();
  s.beta_inv = chain.gamma_inverse() * (I - (s.x / opx) * s.f1);
  s.g0 = s.beta * chain.g[n - 2] * s.beta_inv;

  auto& r = s.checks;
  r.name = "seam n = " + std::to_string(n);
  Scalar t = chain.t, at2 = a * t * t;
  add_check(r, "f^2 = f", s.f * s.f == s.f);
  add_check(r, "y_f = (a t^2 + (a t^2)^-1)/(a + a^-1)", s.y_f == (at2 + at2.inv()) / (a + a.inv()));
  add_check(r, "beta beta^-1 = 1", (s.beta * s.beta_inv).is_identity());
  for (int i = 0; i + 2 < n; ++i)
    add_check(r, "beta g_" + std::to_string(i + 1) + " beta^-1 = g_" + std::to_string(i + 2),
              s.beta * chain.g[i] == chain.g[i + 1] * s.beta);
  add_check(r, "beta g_0 beta^-1 = g_1 (g_0 := beta g_{n-1} beta^-1)", s.beta * s.g0 == chain.g[0] * s.beta);
  s.circular = verify(s.assignment(), circular_relations(n));
  add_check(r, "CB_n relations", s.circular.all_pass());
  return s;
}

Spectrum seam_spectrum(int n, const Scalar& t, const Scalar& a) {
  Spectrum out;
  long mult = 1;
  for (int k = 0; k <= n; ++k) {
    if (k > 0) mult = mult * (n - k + 1) / k;
    Scalar c = t.pow(8 * k * (n - k)) * a.pow(-4 * k);
    auto it = std::find_if(out.begin(), out.end(), [&](const Eigen& e) { return e.value == c; });
    if (it != out.end()) it->multiplicity += static_cast<int>(mult);
    else out.push_back({c, static_cast<int>(mult)});
  }
  return out;
}

NecklaceExtension seamed_standard_extension(const SeamedChain& s, int branch) {
  Spectrum spec = seam_spectrum(s.base.n, s.base.t, s.a);
  auto ext = translator_extension("seamed XXZ standard extension", s.base.braid_rep(), s.beta, s.beta_inv, branch, &spec);
  ext.values["a"] = s.a.str();
  ext.values["y_f"] = s.y_f.str();
  return ext;
}

namespace {

// prod_k (Y^p - c_k) e_i = 0 for every basis vector, applying the sparse Y repeatedly.
bool annihilates(const Matrix& Y, int p, const Spectrum& spec) {
  size_t d = Y.dim();
  for (size_t i = 0; i < d; ++i) {
    Vector v(d);
    v[i] = Scalar(1);
    for (auto& e : spec) {
      Vector w = v;
      for (int r = 0; r < p; ++r) w = Y.apply(w);
      for (size_t j = 0; j < d; ++j) w[j] -= e.value * v[j];
      v = std::move(w);
    }
    for (size_t j = 0; j < d; ++j)
      if (!v[j].is_zero()) return false;
  }
  return true;
}

}  // namespace

bool SeamCertificate::all_pass() const {
  if (!(circular && central && minimal_polynomial && roots_exact && multiplicities) || samples.empty()) return false;
  for (auto& s : samples)
    if (!s.report.all_pass()) return false;
  return true;
}

std::string SeamCertificate::to_json() const {
  nlohmann::ordered_json j;
  j["n"] = n;
  for (auto& e : spectrum) j["spectrum"].push_back({{"value", e.value.str()}, {"multiplicity", e.multiplicity}});
  j["circular_suite"] = circular;
  j["beta_2n_central"] = central;
  j["minimal_polynomial"] = minimal_polynomial;
  j["roots_exact"] = roots_exact;
  j["multiplicities"] = multiplicities;
  for (auto& s : samples)
    j["samples"].push_back({{"T", s.T.str()},
                            {"A", s.A.str()},
                            {"multiplicities", s.multiplicities},
                            {"relations", nlohmann::ordered_json::parse(s.report.to_json())}});
  j["pass"] = all_pass();
  return j.dump(2);
}

SeamCertificate seamed_nb_certificate(const SeamedChain& s, int samples) {
  SeamCertificate c;
  int n = c.n = s.base.n, k = 2 * n;
  c.spectrum = seam_spectrum(n, s.base.t, s.a);
  c.circular = s.circular.all_pass();
  Matrix M = s.beta.pow(k);
  c.central = M * s.beta == s.beta * M && M * s.g0 == s.g0 * M;
  for (auto& g : s.base.g) c.central = c.central && M * g == g * M;
  c.minimal_polynomial = annihilates(s.beta, k, c.spectrum);
  std::vector<Scalar> inv;
  for (auto& e : c.spectrum) inv.push_back(e.value.inv());
  RootPlan plan = plan_roots(inv, k);
  c.roots_exact = true;
  for (size_t j = 0; j < inv.size(); ++j) {
    Scalar lam = exact_root(plan.apply(inv[j]), k, 0);
    c.roots_exact = c.roots_exact && (lam.pow(k) * plan.apply(c.spectrum[j].value)).is_one();
  }

  // Distinct primes keep the sampled eigenvalues distinct; small ones keep the entries small.
  static const std::pair<long, long> points[] = {{2, 3}, {3, 2}, {2, 5}, {5, 2}, {3, 5}, {5, 3}};
  c.multiplicities = samples > 0;
  for (int r = 0; r < samples; ++r) {
    SeamSample smp;
    smp.T = Scalar(points[r % 6].first);
    smp.A = Scalar(points[r % 6].second);
    Scalar t = smp.T.pow(n), a = smp.A.pow(n);
    auto seam = build_seam(build_chain(n, t, false), a);
    auto ext = seamed_standard_extension(seam, 0);
    smp.report = ext.verify_full();
    Matrix Mp = seam.beta.pow(k);
    size_t d = Mp.dim();
    auto spec = seam_spectrum(n, t, a);
    for (size_t j = 0; j < spec.size(); ++j) {
      Matrix K = Mp - spec[j].value * Matrix::identity(d);
      std::vector<Vector> rows;
      for (size_t i = 0; i < d; ++i) {
        Vector row(d);
        for (size_t l = 0; l < d; ++l) row[l] = K(i, l);
        rows.push_back(std::move(row));
      }
      int m = static_cast<int>(d - rank(std::move(rows)));
      smp.multiplicities.push_back(m);
      c.multiplicities = c.multiplicities && spec.size() == c.spectrum.size() && m == c.spectrum[j].multiplicity;
    }
    c.samples.push_back(std::move(smp));
  }
  return c;
}

}  // namespace necklace
