#include "necklace/spectrum.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "necklace/errors.hpp"

namespace necklace {
namespace {

struct CandidatePool {
  std::vector<Exps> exps;
  std::vector<mpq_class> mags{mpq_class(1)};
  long units = 2;

  void add_exp(Exps e) {
    exps_trim(e);
    for (auto& x : exps)
      if (exps_cmp(x, e) == 0) return;
    exps.push_back(std::move(e));
  }
  void add_mag(const mpq_class& r) {
    if (r <= 0) return;
    for (auto& x : mags)
      if (x == r) return;
    mags.push_back(r);
  }
};

bool perfect_power(const mpz_class& a, unsigned k, mpz_class* out) {
  if (a < 0) return false;
  return mpz_root(out->get_mpz_t(), a.get_mpz_t(), k) != 0;
}

// Harvest candidate monomials x^{E/k} and magnitudes r^{1/k} from a scalar that is a
// sum of k-fold products of eigenvalues.
void harvest(const Scalar& s, unsigned k, CandidatePool* pool) {
  if (!s.is_laurent()) return;
  for (auto& t : s.num().terms()) {
    Exps e = t.e;
    bool ok = true;
    for (auto& x : e) {
      if (x % static_cast<int>(k) != 0) ok = false;
      x /= static_cast<int>(k);
    }
    if (ok) pool->add_exp(e);
    pool->units = std::lcm(pool->units, static_cast<long>(t.c.order()));
    if (auto uf = t.c.unit_form()) {
      mpz_class n, d;
      if (perfect_power(uf->r.get_num(), k, &n) && perfect_power(uf->r.get_den(), k, &d)) pool->add_mag(mpq_class(n, d));
    }
  }
}

// Rational roots of a polynomial with rational coefficients (small-prime factorable ends only).
std::vector<mpq_class> rational_roots(const ScalarPoly& p) {
  std::vector<mpq_class> roots;
  std::vector<mpq_class> q;
  for (auto& c : p.c) {
    if (!c.is_constant() || !c.constant_value().is_rational()) return roots;
    q.push_back(c.constant_value().rational());
  }
  size_t lo = 0;
  while (lo < q.size() && q[lo] == 0) ++lo;
  if (lo > 0) roots.push_back(mpq_class(0));
  if (lo + 1 >= q.size()) return roots;
  mpz_class den = 1;
  for (auto& x : q) den = lcm(den, mpz_class(x.get_den()));
  mpz_class a0 = abs(mpz_class(q[lo] * den));
  mpz_class an = abs(mpz_class(q.back() * den));
  auto factor = [](mpz_class n, std::vector<std::pair<mpz_class, int>>* f) {
    for (unsigned long pr = 2; pr < 100000 && n > 1; ++pr) {
      int e = 0;
      while (mpz_divisible_ui_p(n.get_mpz_t(), pr)) {
        n /= pr;
        ++e;
      }
      if (e) f->push_back({mpz_class(pr), e});
    }
    return n == 1;
  };
  std::vector<std::pair<mpz_class, int>> fa, fn;
  if (!factor(a0, &fa) || !factor(an, &fn)) return roots;
  auto divisors = [](const std::vector<std::pair<mpz_class, int>>& f) {
    std::vector<mpz_class> d{mpz_class(1)};
    for (auto& [p, e] : f) {
      size_t cur = d.size();
      mpz_class pk = 1;
      for (int i = 1; i <= e; ++i) {
        pk *= p;
        for (size_t j = 0; j < cur; ++j) d.push_back(d[j] * pk);
      }
      if (d.size() > 200000) break;
    }
    return d;
  };
  auto da = divisors(fa), dn = divisors(fn);
  if (da.size() * dn.size() > 400000) return roots;
  std::set<mpq_class> seen;
  ScalarPoly r = p;
  for (auto& x : da)
    for (auto& y : dn)
      for (int sgn : {1, -1}) {
        mpq_class c(x * sgn, y);
        c.canonicalize();
        if (!seen.insert(c).second) continue;
        Scalar rem;
        if (r.eval(Scalar(Cyclotomic(c))).is_zero()) roots.push_back(c);
      }
  return roots;
}

}  // namespace

Spectrum monomial_roots(const ScalarPoly& p0, const std::vector<Scalar>& candidates,
                        const std::vector<Scalar>& hints) {
  CandidatePool pool;
  ScalarPoly p = p0;
  int d = p.degree();
  // Elementary symmetric functions e_j = (-1)^j c_{d-j}.
  for (int j = 1; j <= d; ++j) harvest(p.c[d - j], static_cast<unsigned>(j), &pool);
  for (size_t k = 0; k < hints.size(); ++k) harvest(hints[k], static_cast<unsigned>(k + 1), &pool);
  for (auto& c : p.c) pool.units = std::lcm(pool.units, static_cast<long>(c.field_order()));
  for (auto& c : candidates) pool.units = std::lcm(pool.units, static_cast<long>(c.field_order()));
  if (pool.exps.empty()) pool.add_exp(Exps{});

  Spectrum spec;
  auto try_candidate = [&](const Scalar& c) {
    bool any = false;
    while (p.degree() > 0) {
      Scalar rem;
      ScalarPoly q = p.divide_linear(c, &rem);
      if (!rem.is_zero()) break;
      p = std::move(q);
      any = true;
      auto it = std::find_if(spec.begin(), spec.end(), [&](const Eigen& e) { return e.value == c; });
      if (it == spec.end())
        spec.push_back(Eigen{c, 1});
      else
        ++it->multiplicity;
    }
    return any;
  };
  for (auto& c : candidates) {
    if (p.degree() <= 0) break;
    try_candidate(c);
  }
  std::vector<Cyclotomic> units;
  for (long j = 0; j < pool.units; ++j) units.push_back(Cyclotomic::zeta(static_cast<int>(pool.units), j));
  for (size_t mi = 0; mi < pool.mags.size() && p.degree() > 0; ++mi)
    for (auto& e : pool.exps) {
      if (p.degree() <= 0) break;
      for (auto& u : units) {
        if (p.degree() <= 0) break;
        try_candidate(Scalar(Laurent::monomial(e, u * Cyclotomic(pool.mags[mi]))));
      }
    }
  if (p.degree() > 0)
    throw SpectrumNotResolved("characteristic polynomial has an unresolved factor of degree " +
                              std::to_string(p.degree()) + ": " + p.str());
  return spec;
}

Spectrum monomial_spectrum(const Matrix& m, const std::vector<Scalar>& candidates) {
  ScalarPoly p = char_poly(m);
  std::vector<Scalar> hints;
  std::vector<Scalar> cands = candidates;
  if (m.is_constant()) {
    // eigenvalue u*r with u^L = 1 gives a rational eigenvalue r^L of M^L
    long L = std::lcm(2L, static_cast<long>(m.field_order()));
    ScalarPoly pl = char_poly(m.pow(L));
    for (auto& rr : rational_roots(pl)) {
      mpq_class a = abs(rr);
      if (a == 0) {
        cands.push_back(Scalar(0));
        continue;
      }
      mpz_class n, d;
      if (perfect_power(a.get_num(), static_cast<unsigned>(L), &n) &&
          perfect_power(a.get_den(), static_cast<unsigned>(L), &d))
        for (long j = 0; j < L; ++j)
          cands.push_back(Scalar(Cyclotomic::zeta(static_cast<int>(L), j) * Cyclotomic(mpq_class(n, d))));
    }
  } else {
    Matrix pw = m;
    for (int k = 1; k <= std::min<int>(3, static_cast<int>(m.dim())); ++k) {
      hints.push_back(pw.trace());
      if (k < 3) pw = pw * m;
    }
  }
  return monomial_roots(p, cands, hints);
}

std::vector<Matrix> spectral_projectors(const Matrix& m, const Spectrum& spec) {
  size_t n = m.dim();
  Matrix I = Matrix::identity(n);
  std::vector<Matrix> shifted;
  for (auto& e : spec) shifted.push_back(m - e.value * I);
  Matrix prod = I;
  for (auto& s : shifted) prod = prod * s;
  if (!prod.is_zero()) throw NotDiagonalizable("minimal polynomial has a repeated root");
  std::vector<Matrix> out;
  for (size_t j = 0; j < spec.size(); ++j) {
    Matrix p = I;
    Scalar denom(1);
    for (size_t k = 0; k < spec.size(); ++k) {
      if (k == j) continue;
      p = p * shifted[k];
      denom *= spec[j].value - spec[k].value;
    }
    out.push_back(denom.inv() * p);
  }
  return out;
}

NilpotencyReport nilpotency_probe(const Matrix& m) {
  NilpotencyReport r;
  if (m.is_identity()) {
    r.is_identity = true;
    return r;
  }
  Matrix n = m - Matrix::identity(m.dim());
  Matrix p = n;
  for (size_t k = 1; k <= m.dim(); ++k) {
    if (p.is_zero()) {
      r.index = static_cast<int>(k);
      return r;
    }
    p = p * n;
  }
  return r;
}

}  // namespace necklace
