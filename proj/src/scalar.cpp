#include "necklace/scalar.hpp"

#include <numeric>
#include <sstream>

#include "necklace/errors.hpp"
#include "necklace/variables.hpp"

namespace necklace {
namespace {

Exps neg(const Exps& e) {
  Exps r = e;
  for (auto& x : r) x = -x;
  return r;
}

}  // namespace

Scalar::Scalar(const Laurent& num, const Laurent& den) {
  if (den.is_zero()) throw DivisionByZero("zero denominator");
  if (num.is_zero()) {
    num_ = Laurent();
    den_ = Laurent(1);
    return;
  }
  Exps md;
  Laurent d = strip_monomial(den, &md);
  Laurent n = num.shifted(neg(md));
  if (d.is_constant()) {
    num_ = n.scaled(d.constant_value().inv());
    den_ = Laurent(1);
    return;
  }
  Exps mn;
  Laurent np = strip_monomial(n, &mn);
  Laurent g = poly_gcd(np, d);
  if (!g.is_one()) {
    np = poly_divide_exact(np, g);
    d = poly_divide_exact(d, g);
  }
  Cyclotomic lc = d.leading().c;
  if (!lc.is_one()) {
    Cyclotomic il = lc.inv();
    np = np.scaled(il);
    d = d.scaled(il);
  }
  num_ = np.shifted(mn);
  if (d.is_constant()) {
    num_ = num_.scaled(d.constant_value().inv());
    d = Laurent(1);
  }
  den_ = std::move(d);
}

Scalar Scalar::var(std::string_view name, int power) { return var(var_id(name), power); }
Scalar Scalar::var(int id, int power) { return Scalar(Laurent::var(id, power)); }
Scalar Scalar::root_of_unity(int N, long k) { return Scalar(Cyclotomic::zeta(N, k)); }
Scalar Scalar::rational(long p, long q) {
  if (q == 0) throw DivisionByZero("rational with zero denominator");
  return Scalar(Cyclotomic(mpq_class(p, q) * 1));
}

Cyclotomic Scalar::constant_value() const {
  if (!is_constant()) throw std::logic_error("scalar is not constant: " + str());
  return num_.constant_value();
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_.is_one() && o.den_.is_one()) {
    num_ += o.num_;
    return *this;
  }
  if (den_ == o.den_) return *this = Scalar(num_ + o.num_, den_);
  return *this = Scalar(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (den_.is_one() && o.den_.is_one()) {
    num_ = num_ * o.num_;
    return *this;
  }
  if (is_zero() || o.is_zero()) return *this = Scalar();
  return *this = Scalar(num_ * o.num_, den_ * o.den_);
}

Scalar Scalar::operator-() const { return Scalar(-num_, den_, Raw{}); }

Scalar Scalar::inv() const {
  if (is_zero()) throw DivisionByZero("inverse of zero scalar");
  if (num_.is_monomial() && den_.is_one()) {
    const Term& t = num_.terms()[0];
    return Scalar(Laurent::monomial(neg(t.e), t.c.inv()), Laurent(1), Raw{});
  }
  return Scalar(den_, num_);
}

Scalar Scalar::pow(long k) const {
  if (k < 0) return inv().pow(-k);
  if (k == 0) return Scalar(1);
  return Scalar(num_.pow(static_cast<unsigned>(k)), den_.pow(static_cast<unsigned>(k)), Raw{});
}

Scalar Scalar::substitute(const std::map<int, Scalar>& values) const {
  auto eval = [&](const Laurent& p) {
    std::map<std::pair<int, int>, Scalar> cache;
    Scalar acc;
    for (auto& t : p.terms()) {
      Exps keep;
      Scalar factor(t.c);
      for (size_t v = 0; v < t.e.size(); ++v) {
        if (t.e[v] == 0) continue;
        auto it = values.find(static_cast<int>(v));
        if (it == values.end()) {
          keep.resize(v + 1, 0);
          keep[v] = t.e[v];
          continue;
        }
        auto key = std::make_pair(static_cast<int>(v), t.e[v]);
        auto c = cache.find(key);
        if (c == cache.end()) c = cache.emplace(key, it->second.pow(t.e[v])).first;
        factor *= c->second;
      }
      if (!keep.empty()) factor *= Scalar(Laurent::monomial(keep, Cyclotomic(1)));
      acc += factor;
    }
    return acc;
  };
  if (den_.is_one()) return eval(num_);
  return eval(num_) / eval(den_);
}

Scalar Scalar::substitute_monomial(int v, int fresh, int k) const {
  if (den_.is_one()) return Scalar(num_.substitute_monomial(v, fresh, k));
  return Scalar(num_.substitute_monomial(v, fresh, k), den_.substitute_monomial(v, fresh, k));
}

int Scalar::field_order() const {
  return static_cast<int>(std::lcm(static_cast<long>(num_.field_order()), static_cast<long>(den_.field_order())));
}

std::vector<int> Scalar::vars() const {
  auto a = num_.vars(), b = den_.vars();
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

std::string Scalar::str() const {
  if (den_.is_one()) return num_.str();
  std::string n = num_.str();
  if (num_.size() > 1 || n.find(' ') != std::string::npos) n = "(" + n + ")";
  return n + "/(" + den_.str() + ")";
}

std::string RootContext::describe() const {
  std::ostringstream os;
  os << var_name(var) << " = " << var_name(fresh);
  if (k != 1) os << "^" << k;
  return os.str();
}

RootContext adjoin_formal_root(int var, int k) {
  if (k < 1) throw std::invalid_argument("root degree must be positive");
  RootContext ctx;
  ctx.var = var;
  ctx.k = k;
  ctx.fresh = k == 1 ? var : fresh_var(var_name(var) + "r" + std::to_string(k));
  return ctx;
}

RootContext adjoin_formal_root(std::string_view var, int k) { return adjoin_formal_root(var_id(var), k); }

namespace {

bool perfect_root(const mpz_class& a, int k, mpz_class* out) {
  if (a < 0) return false;
  mpz_class r;
  int exact = mpz_root(r.get_mpz_t(), a.get_mpz_t(), static_cast<unsigned long>(k));
  if (!exact) return false;
  *out = r;
  return true;
}

}  // namespace

bool monomial_root(const Scalar& c, int k, int branch, Scalar* out) {
  if (!c.is_monomial()) return false;
  const Term& t = c.num().terms()[0];
  Exps e = t.e;
  for (auto& x : e) {
    if (x % k != 0) return false;
    x /= k;
  }
  auto uf = t.c.unit_form();
  if (!uf) return false;
  mpz_class pn, pd;
  if (!perfect_root(uf->r.get_num(), k, &pn) || !perfect_root(uf->r.get_den(), k, &pd)) return false;
  // (zeta_M^j)^{1/k} = zeta_{Mk}^j
  Cyclotomic unit = Cyclotomic::zeta(uf->M * k, uf->j) * Cyclotomic::zeta(k, branch);
  Cyclotomic coeff = unit * Cyclotomic(mpq_class(pn, pd));
  *out = Scalar(Laurent::monomial(std::move(e), std::move(coeff)));
  return true;
}

Cyclotomic sqrt_integer(long m) {
  if (m <= 0) throw std::invalid_argument("sqrt_integer needs a positive integer");
  Cyclotomic acc(1);
  long rest = m;
  for (long p = 2; rest > 1; ++p) {
    if (p * p > rest) p = rest;
    int e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    if (e == 0) continue;
    for (int i = 0; i < e / 2; ++i) acc *= Cyclotomic(p);
    if (e % 2 == 0) continue;
    Cyclotomic s;
    if (p == 2) {
      s = Cyclotomic::zeta(8, 1) + Cyclotomic::zeta(8, 7);
    } else {
      // quadratic Gauss sum g with g^2 = (-1)^{(p-1)/2} p
      for (long j = 0; j < p; ++j) s += Cyclotomic::zeta(static_cast<int>(p), (j * j) % p);
      if (p % 4 == 3) s *= Cyclotomic::zeta(4, 3);
    }
    acc *= s;
  }
  return acc;
}

}  // namespace necklace
