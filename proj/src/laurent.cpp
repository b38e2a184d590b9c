#include "necklace/laurent.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "necklace/variables.hpp"

namespace necklace {

int exps_cmp(const Exps& a, const Exps& b) {
  size_t n = std::max(a.size(), b.size());
  for (size_t i = 0; i < n; ++i) {
    int x = i < a.size() ? a[i] : 0;
    int y = i < b.size() ? b[i] : 0;
    if (x != y) return x < y ? -1 : 1;
  }
  return 0;
}

void exps_trim(Exps& e) {
  while (!e.empty() && e.back() == 0) e.pop_back();
}

Exps exps_add(const Exps& a, const Exps& b) {
  Exps r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  exps_trim(r);
  return r;
}

Exps exps_sub(const Exps& a, const Exps& b) {
  Exps r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  exps_trim(r);
  return r;
}

Laurent::Laurent(const Cyclotomic& c) {
  if (!c.is_zero()) t_.push_back(Term{{}, c});
}

Laurent Laurent::var(int id, int power) {
  Exps e(static_cast<size_t>(id) + 1, 0);
  e[id] = power;
  exps_trim(e);
  return monomial(std::move(e), Cyclotomic(1));
}

Laurent Laurent::monomial(Exps e, Cyclotomic c) {
  Laurent r;
  exps_trim(e);
  if (!c.is_zero()) r.t_.push_back(Term{std::move(e), std::move(c)});
  return r;
}

Laurent Laurent::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return exps_cmp(a.e, b.e) < 0; });
  Laurent r;
  for (auto& t : terms) {
    if (!r.t_.empty() && exps_cmp(r.t_.back().e, t.e) == 0) {
      r.t_.back().c += t.c;
      if (r.t_.back().c.is_zero()) r.t_.pop_back();
    } else if (!t.c.is_zero()) {
      r.t_.push_back(std::move(t));
    }
  }
  return r;
}

bool Laurent::has_vars() const {
  for (auto& t : t_)
    if (!t.e.empty()) return true;
  return false;
}

Cyclotomic Laurent::constant_value() const {
  if (t_.empty()) return Cyclotomic(0);
  return t_[0].c;
}

Laurent& Laurent::operator+=(const Laurent& o) {
  if (o.t_.empty()) return *this;
  if (t_.empty()) return *this = o;
  std::vector<Term> out;
  out.reserve(t_.size() + o.t_.size());
  size_t i = 0, j = 0;
  while (i < t_.size() || j < o.t_.size()) {
    int c = i == t_.size() ? 1 : j == o.t_.size() ? -1 : exps_cmp(t_[i].e, o.t_[j].e);
    if (c < 0) {
      out.push_back(std::move(t_[i++]));
    } else if (c > 0) {
      out.push_back(o.t_[j++]);
    } else {
      Cyclotomic s = t_[i].c + o.t_[j].c;
      if (!s.is_zero()) out.push_back(Term{std::move(t_[i].e), std::move(s)});
      ++i;
      ++j;
    }
  }
  t_ = std::move(out);
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) { return *this += -o; }

Laurent Laurent::operator-() const {
  Laurent r = *this;
  for (auto& t : r.t_) t.c = -t.c;
  return r;
}

Laurent operator*(const Laurent& a, const Laurent& b) {
  if (a.t_.empty() || b.t_.empty()) return Laurent();
  if (b.t_.size() == 1) return a.shifted(b.t_[0].e).scaled(b.t_[0].c);
  if (a.t_.size() == 1) return b.shifted(a.t_[0].e).scaled(a.t_[0].c);
  std::vector<Term> prod;
  prod.reserve(a.t_.size() * b.t_.size());
  for (auto& x : a.t_)
    for (auto& y : b.t_) prod.push_back(Term{exps_add(x.e, y.e), x.c * y.c});
  return Laurent::from_terms(std::move(prod));
}

bool operator==(const Laurent& a, const Laurent& b) {
  if (a.t_.size() != b.t_.size()) return false;
  for (size_t i = 0; i < a.t_.size(); ++i)
    if (exps_cmp(a.t_[i].e, b.t_[i].e) != 0 || a.t_[i].c != b.t_[i].c) return false;
  return true;
}

Laurent Laurent::scaled(const Cyclotomic& c) const {
  if (c.is_zero()) return Laurent();
  if (c.is_one()) return *this;
  Laurent r = *this;
  for (auto& t : r.t_) t.c *= c;
  return r;
}

Laurent Laurent::shifted(const Exps& e) const {
  if (e.empty()) return *this;
  Laurent r = *this;
  for (auto& t : r.t_) t.e = exps_add(t.e, e);
  return r;  // lex order is translation invariant
}

Laurent Laurent::pow(unsigned k) const {
  Laurent result(1), base = *this;
  while (k) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

Exps Laurent::min_exps() const {
  Exps m;
  bool first = true;
  for (auto& t : t_) {
    if (first) {
      m = t.e;
      first = false;
      continue;
    }
    size_t n = std::max(m.size(), t.e.size());
    m.resize(n, 0);
    for (size_t i = 0; i < n; ++i) m[i] = std::min(m[i], i < t.e.size() ? t.e[i] : 0);
  }
  exps_trim(m);
  return m;
}

int Laurent::max_deg(int v) const {
  int d = 0;
  bool first = true;
  for (auto& t : t_) {
    int x = exps_at(t.e, v);
    if (first || x > d) d = x;
    first = false;
  }
  return d;
}

int Laurent::min_deg(int v) const {
  int d = 0;
  bool first = true;
  for (auto& t : t_) {
    int x = exps_at(t.e, v);
    if (first || x < d) d = x;
    first = false;
  }
  return d;
}

std::vector<int> Laurent::vars() const {
  std::vector<int> vs;
  for (auto& t : t_)
    for (size_t i = 0; i < t.e.size(); ++i)
      if (t.e[i] != 0) vs.push_back(static_cast<int>(i));
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

std::map<int, Laurent> Laurent::coeffs_in(int v) const {
  std::map<int, std::vector<Term>> parts;
  for (auto& t : t_) {
    Exps e = t.e;
    int k = 0;
    if (v < static_cast<int>(e.size())) {
      k = e[v];
      e[v] = 0;
      exps_trim(e);
    }
    parts[k].push_back(Term{std::move(e), t.c});
  }
  std::map<int, Laurent> out;
  for (auto& [k, terms] : parts) out.emplace(k, from_terms(std::move(terms)));
  return out;
}

int Laurent::field_order() const {
  long o = 1;
  for (auto& t : t_) o = std::lcm(o, static_cast<long>(t.c.order()));
  return static_cast<int>(o);
}

Laurent Laurent::substitute_monomial(int v, int fresh, int k) const {
  std::vector<Term> terms;
  terms.reserve(t_.size());
  for (auto& t : t_) {
    Exps e = t.e;
    int x = exps_at(e, v);
    if (x != 0) {
      e[v] = 0;
      Exps add(static_cast<size_t>(fresh) + 1, 0);
      add[fresh] = x * k;
      e = exps_add(e, add);
    }
    terms.push_back(Term{std::move(e), t.c});
  }
  return from_terms(std::move(terms));
}

namespace {

std::string mono_str(const Exps& e) {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!first) os << "*";
    first = false;
    os << var_name(static_cast<int>(i));
    if (e[i] != 1) os << "^" << e[i];
  }
  return os.str();
}

}  // namespace

std::string Laurent::str() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t idx = t_.size(); idx-- > 0;) {
    const Term& t = t_[idx];
    std::string m = mono_str(t.e);
    std::string body;
    bool neg = false;
    if (t.c.is_rational()) {
      mpq_class r = t.c.rational();
      neg = r < 0;
      mpq_class a = abs(r);
      if (m.empty())
        body = a.get_str();
      else
        body = (a == 1 ? "" : a.get_str() + "*") + m;
    } else {
      std::string c = t.c.str();
      bool single = t.c.support() == 1 && t.c.coords()[0] == 0;
      if (single && c[0] == '-') {
        neg = true;
        c = c.substr(1);
      }
      if (!single) c = "(" + c + ")";
      body = m.empty() ? c : c + "*" + m;
    }
    if (first)
      os << (neg ? "-" : "") << body;
    else
      os << (neg ? " - " : " + ") << body;
    first = false;
  }
  return os.str();
}

}  // namespace necklace
