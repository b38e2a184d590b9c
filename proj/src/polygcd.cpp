#include <algorithm>
#include <stdexcept>

#include "necklace/laurent.hpp"

namespace necklace {
namespace {

Exps neg_exps(const Exps& e) {
  Exps r = e;
  for (auto& x : r) x = -x;
  return r;
}

Laurent monic(const Laurent& p) {
  if (p.is_zero()) return p;
  return p.scaled(p.leading().c.inv());
}

Laurent var_power(int v, int k) { return k == 0 ? Laurent(1) : Laurent::var(v, k); }

Laurent lead_coeff_in(const Laurent& p, int v, int* deg) {
  auto cs = p.coeffs_in(v);
  *deg = cs.rbegin()->first;
  return cs.rbegin()->second;
}

Laurent gcd_rec(Laurent a, Laurent b);

Laurent content_in(const Laurent& p, int v) {
  Laurent g;
  for (auto& [k, c] : p.coeffs_in(v)) {
    g = g.is_zero() ? strip_monomial(c) : gcd_rec(g, c);
    if (g.is_constant()) return Laurent(1);
  }
  return monic(g);
}

Laurent prem(const Laurent& a, const Laurent& b, int v) {
  int db;
  Laurent lcb = lead_coeff_in(b, v, &db);
  Laurent r = a;
  while (!r.is_zero()) {
    int dr;
    Laurent lcr = lead_coeff_in(r, v, &dr);
    if (dr < db) break;
    r = lcb * r - lcr * var_power(v, dr - db) * b;
  }
  return r;
}

Laurent univariate_gcd(Laurent a, Laurent b, int v) {
  if (a.max_deg(v) < b.max_deg(v)) std::swap(a, b);
  while (!b.is_zero()) {
    int db;
    Laurent lcb = lead_coeff_in(b, v, &db);
    Cyclotomic inv_lc = lcb.constant_value().inv();
    Laurent r = a;
    while (!r.is_zero()) {
      int dr;
      Laurent lcr = lead_coeff_in(r, v, &dr);
      if (dr < db) break;
      r -= b.scaled(lcr.constant_value() * inv_lc) * var_power(v, dr - db);
    }
    a = std::move(b);
    b = monic(r);  // keeps coefficient growth in check
  }
  return monic(a);
}

// p with every variable except v set to vals[w]; exponents must be nonnegative.
Laurent specialize(const Laurent& p, int v, const std::vector<long>& vals) {
  std::vector<Term> out;
  for (auto& t : p.terms()) {
    Cyclotomic c = t.c;
    for (int w = 0; w < static_cast<int>(t.e.size()); ++w)
      if (w != v && t.e[w] != 0) {
        mpz_class f;
        mpz_ui_pow_ui(f.get_mpz_t(), static_cast<unsigned long>(vals[w]), static_cast<unsigned long>(t.e[w]));
        c *= Cyclotomic(mpq_class(f));
      }
    Exps e;
    if (int k = exps_at(t.e, v)) {
      e.assign(v + 1, 0);
      e[v] = k;
    }
    out.push_back(Term{std::move(e), std::move(c)});
  }
  return Laurent::from_terms(std::move(out));
}

// True when a good specialization shows deg_v gcd(a, b) = 0 for every variable v, which forces
// gcd(a, b) = 1: the leading coefficient of the gcd divides those of a and b, so its degree survives.
bool coprime_by_specialization(const Laurent& a, const Laurent& b, const std::vector<int>& vars) {
  int top = vars.back();
  for (int v : vars) {
    bool settled = false;
    for (int attempt = 0; attempt < 3 && !settled; ++attempt) {
      std::vector<long> vals(top + 1);
      for (int w = 0; w <= top; ++w) vals[w] = 2 + ((w * 7 + attempt * 5 + v * 3) % 11);
      int da = a.max_deg(v), db = b.max_deg(v);
      Laurent sa = specialize(a, v, vals), sb = specialize(b, v, vals);
      if (sa.max_deg(v) != da || sb.max_deg(v) != db) continue;
      if (!univariate_gcd(sa, sb, v).is_constant()) return false;
      settled = true;
    }
    if (!settled) return false;
  }
  return true;
}

Laurent gcd_rec(Laurent a, Laurent b) {
  if (a.is_zero()) return monic(strip_monomial(b));
  if (b.is_zero()) return monic(strip_monomial(a));
  a = strip_monomial(a);
  b = strip_monomial(b);
  if (a.is_constant() || b.is_constant()) return Laurent(1);
  auto va = a.vars(), vb = b.vars();
  for (int v : va)
    if (!std::binary_search(vb.begin(), vb.end(), v)) return gcd_rec(content_in(a, v), b);
  for (int v : vb)
    if (!std::binary_search(va.begin(), va.end(), v)) return gcd_rec(a, content_in(b, v));
  int v = va.front();
  if (va.size() == 1) return univariate_gcd(a, b, v);
  if (coprime_by_specialization(a, b, va)) return Laurent(1);
  Laurent ca = content_in(a, v), cb = content_in(b, v);
  Laurent c = gcd_rec(ca, cb);
  Laurent pa = poly_divide_exact(a, ca), pb = poly_divide_exact(b, cb);
  Laurent g;
  for (;;) {
    if (pa.max_deg(v) < pb.max_deg(v)) std::swap(pa, pb);
    Laurent r = prem(pa, pb, v);
    if (r.is_zero()) {
      g = pb;
      break;
    }
    r = strip_monomial(r);
    if (r.max_deg(v) == 0) {
      g = Laurent(1);
      break;
    }
    r = poly_divide_exact(r, content_in(r, v));
    pa = std::move(pb);
    pb = std::move(r);
  }
  if (!g.is_constant()) g = poly_divide_exact(g, content_in(g, v));
  return monic(strip_monomial(c * g));
}

}  // namespace

Laurent strip_monomial(const Laurent& p, Exps* m) {
  Exps mn = p.min_exps();
  if (m) *m = mn;
  if (mn.empty()) return p;
  return p.shifted(neg_exps(mn));
}

Laurent poly_divide_exact(const Laurent& a, const Laurent& b) {
  if (b.is_zero()) throw std::logic_error("poly_divide_exact: division by zero");
  if (b.is_constant()) return a.scaled(b.constant_value().inv());
  const Term& lb = b.leading();
  Cyclotomic inv_lc = lb.c.inv();
  Laurent r = a;
  std::vector<Term> q;
  while (!r.is_zero()) {
    const Term& lt = r.leading();
    Exps e = exps_sub(lt.e, lb.e);
    for (int x : e)
      if (x < 0) throw std::logic_error("poly_divide_exact: not divisible");
    Cyclotomic c = lt.c * inv_lc;
    r -= b.shifted(e).scaled(c);
    q.push_back(Term{std::move(e), std::move(c)});
  }
  return Laurent::from_terms(std::move(q));
}

Laurent poly_gcd(const Laurent& a, const Laurent& b) { return gcd_rec(a, b); }

}  // namespace necklace
