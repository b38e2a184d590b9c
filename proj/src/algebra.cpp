#include <sstream>

#include "necklace/twisted_algebras.hpp"

namespace necklace {

namespace {

int mod(long a, long n) { return static_cast<int>(((a % n) + n) % n); }

AlgebraPtr make_context(AlgebraKind kind, int m, int n, int q_order, int phase_order) {
  auto a = std::make_shared<AlgebraContext>();
  a->kind = kind;
  a->m = m;
  a->n = n;
  a->q_order = q_order;
  a->q = Scalar::root_of_unity(q_order);
  a->phase_order = phase_order;
  for (int k = 0; k < phase_order; ++k) a->phase_pows.push_back(Scalar::root_of_unity(phase_order, k));
  return a;
}

// Exponent (in phase units) of w with x y = w y x for distinct letters x, y.
int swap_phase(const AlgebraContext& a, int x, int y) {
  int n = a.n;
  if (a.kind == AlgebraKind::NES) {
    if (mod(x + 1, n) == y) return 2;
    if (mod(y + 1, n) == x) return -2;
    return 0;
  }
  bool xu = x < n, yu = y < n;
  if (xu == yu) return 0;
  int d = mod((x % n) - (y % n), n);
  return (d <= 1 || d == n - 1) ? 1 : 0;
}

int shift_letter(const AlgebraContext& a, int x, int b) {
  int n = a.n;
  return x < n ? mod(x - b, n) : n + mod(x - n - b, n);
}

void check_same(const AlgebraPtr& a, const AlgebraPtr& b) {
  if (a == b) return;
  if (!a || !b || a->tag() != b->tag())
    throw TagMismatch((a ? a->tag() : std::string("none")) + " vs " + (b ? b->tag() : std::string("none")));
}

}  // namespace

std::string AlgebraContext::tag() const {
  if (kind == AlgebraKind::NES) return "NES(" + std::to_string(m) + "," + std::to_string(n) + ")";
  return "Q_" + std::to_string(n);
}

size_t AlgebraContext::basis_size() const {
  size_t s = n;
  for (int i = 0; i < letters(); ++i) s *= (kind == AlgebraKind::NES ? m : 2);
  return s;
}

AlgebraPtr nes_algebra(int m, int n) {
  if (m < 2 || n < 3) throw std::invalid_argument("NES(m,n) needs m >= 2 and n >= 3");
  int qo = m % 2 ? m : 2 * m;
  return make_context(AlgebraKind::NES, m, n, qo, qo);
}

AlgebraPtr quat_algebra(int n) {
  if (n < 3) throw std::invalid_argument("Q_n needs n >= 3");
  return make_context(AlgebraKind::Quat, 2, n, 6, 2);
}

// (t^a A)(t^b B) = t^{a+b} (t^-b A t^b) B; t^-b u_j t^b = u_{j-b}.
static std::pair<int, MonoKey> mono_mul(const AlgebraContext& a, const MonoKey& k1, const MonoKey& k2) {
  int L = a.letters(), P = a.phase_order;
  int b = k2[0];
  long phase = 0;
  // Shifted letters of A in their original order.
  std::vector<std::pair<int, int>> word;
  for (int x = 0; x < L; ++x)
    if (k1[1 + x]) word.push_back({shift_letter(a, x, b), k1[1 + x]});
  for (size_t p = 0; p < word.size(); ++p)
    for (size_t r = p + 1; r < word.size(); ++r)
      if (word[p].first > word[r].first) phase += long(word[p].second) * word[r].second * swap_phase(a, word[p].first, word[r].first);
  MonoKey out(1 + L, 0);
  out[0] = static_cast<int8_t>(mod(k1[0] + b, a.n));
  std::vector<int> A(L, 0);
  for (auto& [x, e] : word) A[x] = e;
  for (int k = 0; k < L; ++k)
    if (A[k])
      for (int j = 0; j < k; ++j)
        if (k2[1 + j]) phase += long(A[k]) * k2[1 + j] * swap_phase(a, k, j);
  for (int x = 0; x < L; ++x) {
    int e = A[x] + k2[1 + x];
    if (a.kind == AlgebraKind::NES) {
      e %= a.m;
    } else if (e == 2) {
      e = 0;
      phase += 1;
    }
    out[1 + x] = static_cast<int8_t>(e);
  }
  return {mod(phase, P), out};
}

void AlgebraElement::add_term(const MonoKey& k, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.try_emplace(k, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

AlgebraElement AlgebraElement::monomial(AlgebraPtr a, MonoKey k, const Scalar& c) {
  if (static_cast<int>(k.size()) != 1 + a->letters()) throw std::invalid_argument("monomial key has wrong length");
  AlgebraElement e(std::move(a));
  e.add_term(k, c);
  return e;
}

AlgebraElement AlgebraElement::one(AlgebraPtr a) { return scalar(std::move(a), Scalar(1)); }

AlgebraElement AlgebraElement::scalar(AlgebraPtr a, const Scalar& c) {
  MonoKey k(1 + a->letters(), 0);
  return monomial(std::move(a), k, c);
}

AlgebraElement AlgebraElement::t(AlgebraPtr a, int power) {
  MonoKey k(1 + a->letters(), 0);
  k[0] = static_cast<int8_t>(mod(power, a->n));
  return monomial(std::move(a), k);
}

AlgebraElement AlgebraElement::u(AlgebraPtr a, int i, int power) {
  MonoKey k(1 + a->letters(), 0);
  int x = mod(i - 1, a->n);
  if (a->kind == AlgebraKind::NES) {
    k[1 + x] = static_cast<int8_t>(mod(power, a->m));
    return monomial(std::move(a), k);
  }
  // u^2 = -1: u^p = (-1)^{p div 2} u^{p mod 2}.
  int p = mod(power, 4);
  k[1 + x] = static_cast<int8_t>(p % 2);
  return monomial(std::move(a), k, p >= 2 ? Scalar(-1) : Scalar(1));
}

AlgebraElement AlgebraElement::v(AlgebraPtr a, int i, int power) {
  if (a->kind != AlgebraKind::Quat) throw TagMismatch("v generators exist only in Q_n, not " + a->tag());
  MonoKey k(1 + a->letters(), 0);
  int p = mod(power, 4);
  k[1 + a->n + mod(i - 1, a->n)] = static_cast<int8_t>(p % 2);
  return monomial(std::move(a), k, p >= 2 ? Scalar(-1) : Scalar(1));
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  if (!alg_) alg_ = o.alg_;
  check_same(alg_, o.alg_);
  for (auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
  if (!alg_) alg_ = o.alg_;
  check_same(alg_, o.alg_);
  for (auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

AlgebraElement operator*(const AlgebraElement& x, const AlgebraElement& y) {
  check_same(x.alg_, y.alg_);
  AlgebraElement r(x.alg_);
  const auto& a = *x.alg_;
  for (auto& [k1, c1] : x.terms_)
    for (auto& [k2, c2] : y.terms_) {
      auto [ph, k] = mono_mul(a, k1, k2);
      r.add_term(k, ph ? c1 * c2 * a.phase_pows[ph] : c1 * c2);
    }
  return r;
}

AlgebraElement operator*(const Scalar& c, const AlgebraElement& x) {
  AlgebraElement r(x.alg_);
  for (auto& [k, v] : x.terms_) r.add_term(k, c * v);
  return r;
}

bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
  check_same(a.alg_, b.alg_);
  return a.terms_ == b.terms_;
}

AlgebraElement AlgebraElement::pow(long k) const {
  if (k < 0) return inverse().pow(-k);
  AlgebraElement r = one(alg_), base = *this;
  while (k) {
    if (k & 1) r = r * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return r;
}

AlgebraElement AlgebraElement::inverse() const {
  if (terms_.empty()) throw DivisionByZero("zero algebra element");
  if (terms_.size() == 1) {
    // Monomial: invert the monomial part by its finite order.
    auto [k, c] = *terms_.begin();
    AlgebraElement mono = monomial(alg_, k);
    AlgebraElement p = mono;
    long ord = 1;
    while (!(p == one(alg_))) {
      p = p * mono;
      if (++ord > 1000) break;
    }
    if (ord <= 1000) return c.inv() * mono.pow(ord - 1);
  }
  // Minimal polynomial by echelon reduction of successive powers.
  struct Row {
    MonoKey pivot;
    std::map<MonoKey, Scalar> vec;
    std::vector<Scalar> combo;
  };
  std::vector<Row> rows;
  AlgebraElement power = one(alg_);
  size_t limit = alg_->basis_size() + 1;
  for (size_t deg = 0; deg <= limit; ++deg) {
    std::map<MonoKey, Scalar> v = power.terms_;
    std::vector<Scalar> combo(deg + 1, Scalar(0));
    combo[deg] = Scalar(1);
    for (auto& r : rows) {
      auto it = v.find(r.pivot);
      if (it == v.end()) continue;
      Scalar f = it->second;
      for (auto& [k, c] : r.vec) {
        Scalar nv = v[k] - f * c;
        if (nv.is_zero()) v.erase(k); else v[k] = nv;
      }
      for (size_t j = 0; j < r.combo.size(); ++j) combo[j] -= f * r.combo[j];
    }
    if (v.empty()) {
      if (combo[0].is_zero()) throw DivisionByZero("algebra element is a zero divisor");
      AlgebraElement acc(alg_), xp = one(alg_);
      for (size_t j = 1; j <= deg; ++j) {
        acc += combo[j] * xp;
        xp = xp * *this;
      }
      return (-(combo[0].inv())) * acc;
    }
    auto piv = v.begin();
    Scalar s = piv->second.inv();
    Row r{piv->first, {}, {}};
    for (auto& [k, c] : v) r.vec[k] = c * s;
    for (auto& c : combo) r.combo.push_back(c * s);
    rows.push_back(std::move(r));
    power = power * *this;
  }
  throw DivisionByZero("minimal polynomial not found");
}

std::string AlgebraElement::key_str(const AlgebraContext& a, const MonoKey& k) {
  std::string s;
  auto part = [&](const std::string& p) { s += (s.empty() ? "" : " ") + p; };
  if (k[0]) part("t^" + std::to_string(k[0]));
  for (int x = 0; x < a.letters(); ++x) {
    if (!k[1 + x]) continue;
    char sym = x < a.n ? 'u' : 'v';
    part(std::string(1, sym) + std::to_string(x % a.n + 1) + "^" + std::to_string(k[1 + x]));
  }
  return s.empty() ? "1" : s;
}

std::string AlgebraElement::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (auto& [k, c] : terms_) {
    if (!s.empty()) s += " + ";
    std::string ks = key_str(*alg_, k);
    if (c.is_one()) s += ks;
    else s += "(" + c.str() + ")" + (ks == "1" ? "" : " " + ks);
  }
  return s;
}

Witness TargetTraits<AlgebraElement>::witness(const AlgebraElement& a, const AlgebraElement& b) {
  Witness w;
  auto diff = a - b;
  if (!diff.is_zero()) {
    auto& k = diff.terms().begin()->first;
    auto coef = [&](const AlgebraElement& e) {
      auto it = e.terms().find(k);
      return it == e.terms().end() ? std::string("0") : it->second.str();
    };
    w.description = "first differing monomial " + AlgebraElement::key_str(*a.algebra(), k) + ": lhs coefficient " +
                    coef(a) + ", rhs coefficient " + coef(b);
  }
  w.lhs_image = {a.str()};
  w.rhs_image = {b.str()};
  return w;
}

AlgebraElement random_element(AlgebraPtr a, std::mt19937_64& rng, int terms) {
  AlgebraElement r(a);
  int L = a->letters();
  int emax = a->kind == AlgebraKind::NES ? a->m : 2;
  for (int i = 0; i < terms; ++i) {
    MonoKey k(1 + L);
    k[0] = static_cast<int8_t>(rng() % a->n);
    for (int x = 0; x < L; ++x) k[1 + x] = static_cast<int8_t>(rng() % emax);
    long c = static_cast<long>(rng() % 7) - 3;
    Scalar coef = Scalar(c == 0 ? 1 : c) * Scalar::root_of_unity(a->q_order, static_cast<long>(rng() % a->q_order));
    r += AlgebraElement::monomial(a, k, coef);
  }
  return r;
}

bool IdentityReport::all_pass() const {
  for (auto& c : checks)
    if (!c.pass) return false;
  return !checks.empty();
}

void IdentityReport::add(std::string nm, bool pass, std::string detail) {
  checks.push_back({std::move(nm), pass, std::move(detail)});
}

}  // namespace necklace
