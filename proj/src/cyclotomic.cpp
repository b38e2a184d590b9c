#include "necklace/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "necklace/errors.hpp"

namespace necklace {
namespace {

struct Table {
  int N;
  int phi;
  std::vector<long> poly;            // Phi_N, low first, monic
  std::vector<std::vector<long>> red;  // red[k] = coords of zeta^k, 0 <= k < N
};

std::vector<long> poly_div_exact(std::vector<long> a, const std::vector<long>& b) {
  // a / b over Z, b monic
  long n = static_cast<long>(a.size()) - 1, m = static_cast<long>(b.size()) - 1;
  std::vector<long> q(n - m + 1, 0);
  for (long i = n; i >= m; --i) {
    long c = a[i];
    q[i - m] = c;
    for (long j = 0; j <= m; ++j) a[i - m + j] -= c * b[j];
  }
  return q;
}

std::unique_ptr<Table> build_table(int N) {
  auto t = std::make_unique<Table>();
  t->N = N;
  // Phi_N = (x^N - 1) / prod_{d | N, d < N} Phi_d
  std::vector<long> p(N + 1, 0);
  p[0] = -1;
  p[N] = 1;
  for (int d = 1; d < N; ++d)
    if (N % d == 0) p = poly_div_exact(p, cyclotomic_polynomial(d));
  t->poly = p;
  t->phi = static_cast<int>(p.size()) - 1;
  t->red.assign(N, std::vector<long>(t->phi, 0));
  std::vector<long> cur(t->phi, 0);
  if (t->phi > 0) cur[0] = 1;
  for (int k = 0; k < N; ++k) {
    t->red[k] = cur;
    // multiply by x and reduce x^phi = -sum p_j x^j
    long top = cur[t->phi - 1];
    for (int j = t->phi - 1; j > 0; --j) cur[j] = cur[j - 1];
    cur[0] = 0;
    for (int j = 0; j < t->phi; ++j) cur[j] -= top * p[j];
  }
  return t;
}

std::mutex g_table_mu;
std::map<int, std::unique_ptr<Table>>& tables() {
  static std::map<int, std::unique_ptr<Table>> m;
  return m;
}

const Table& table(int N) {
  thread_local std::unordered_map<int, const Table*> cache;
  auto it = cache.find(N);
  if (it != cache.end()) return *it->second;
  const Table* ptr = nullptr;
  {
    std::lock_guard lock(g_table_mu);
    auto f = tables().find(N);
    if (f != tables().end()) ptr = f->second.get();
  }
  if (!ptr) {
    auto built = build_table(N);  // may recurse into smaller orders
    std::lock_guard lock(g_table_mu);
    auto f = tables().find(N);
    if (f == tables().end()) f = tables().emplace(N, std::move(built)).first;
    ptr = f->second.get();
  }
  cache.emplace(N, ptr);
  return *ptr;
}

void add_scaled(std::vector<mpq_class>& acc, const mpq_class& c, const std::vector<long>& v) {
  for (size_t j = 0; j < v.size(); ++j)
    if (v[j] != 0) acc[j] += c * v[j];
}

}  // namespace

long euler_phi(long n) {
  long r = n;
  for (long p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      r -= r / p;
    }
  if (n > 1) r -= r / n;
  return r;
}

long lcm_order(long a, long b) { return std::lcm(a, b); }

const std::vector<long>& cyclotomic_polynomial(int N) {
  if (N < 1) throw std::invalid_argument("cyclotomic order must be positive");
  return table(N).poly;
}

Cyclotomic::Cyclotomic(int order, std::vector<mpq_class> coords) : order_(order), c_(std::move(coords)) {
  const Table& t = table(order_);
  if (static_cast<int>(c_.size()) > t.phi) {
    // accept raw coefficients of zeta^k for k >= phi and reduce
    std::vector<mpq_class> acc(t.phi);
    for (size_t k = 0; k < c_.size(); ++k)
      if (c_[k] != 0) add_scaled(acc, c_[k], t.red[k % order_]);
    c_ = std::move(acc);
  } else {
    c_.resize(t.phi);
  }
  normalize();
}

Cyclotomic Cyclotomic::zeta(int N, long k) {
  if (N < 1) throw std::invalid_argument("root of unity order must be positive");
  const Table& t = table(N);
  long e = ((k % N) + N) % N;
  std::vector<mpq_class> c(t.phi);
  for (int j = 0; j < t.phi; ++j) c[j] = t.red[e][j];
  Cyclotomic r;
  r.order_ = N;
  r.c_ = std::move(c);
  r.normalize();
  return r;
}

void Cyclotomic::normalize() {
  if (order_ == 1) return;
  for (size_t j = 1; j < c_.size(); ++j)
    if (c_[j] != 0) return;
  mpq_class r = c_.empty() ? mpq_class(0) : c_[0];
  order_ = 1;
  c_.assign(1, r);
}

Cyclotomic Cyclotomic::lifted(int N) const {
  if (N == order_) return *this;
  if (N % order_ != 0) throw std::invalid_argument("lift target must be a multiple of the order");
  const Table& t = table(N);
  std::vector<mpq_class> acc(t.phi);
  long step = N / order_;
  for (size_t k = 0; k < c_.size(); ++k)
    if (c_[k] != 0) add_scaled(acc, c_[k], t.red[(k * step) % N]);
  Cyclotomic r;
  r.order_ = N;
  r.c_ = std::move(acc);
  return r;  // not normalized: caller wants order N
}

Cyclotomic Cyclotomic::galois(long a) const {
  if (order_ == 1) return *this;
  const Table& t = table(order_);
  long aa = ((a % order_) + order_) % order_;
  std::vector<mpq_class> acc(t.phi);
  for (size_t k = 0; k < c_.size(); ++k)
    if (c_[k] != 0) add_scaled(acc, c_[k], t.red[(k * aa) % order_]);
  Cyclotomic r;
  r.order_ = order_;
  r.c_ = std::move(acc);
  r.normalize();
  return r;
}

Cyclotomic Cyclotomic::inv() const {
  if (is_zero()) throw DivisionByZero("inverse of zero cyclotomic number");
  if (order_ == 1) return Cyclotomic(mpq_class(1) / c_[0]);
  Cyclotomic prod(1);
  for (long a = 2; a < order_; ++a)
    if (std::gcd(a, static_cast<long>(order_)) == 1) prod *= galois(a);
  Cyclotomic norm = *this * prod;
  if (!norm.is_rational()) throw std::logic_error("norm is not rational");
  mpq_class inv_n = mpq_class(1) / norm.c_[0];
  for (auto& c : prod.c_) c *= inv_n;
  prod.normalize();
  return prod;
}

Cyclotomic Cyclotomic::pow(long k) const {
  if (k < 0) return inv().pow(-k);
  Cyclotomic result(1), base = *this;
  while (k) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k) base *= base;
  }
  return result;
}

std::optional<Cyclotomic::UnitForm> Cyclotomic::unit_form() const {
  if (is_zero()) return std::nullopt;
  int M = static_cast<int>(std::lcm(2L, static_cast<long>(order_)));
  if (order_ == 1) return UnitForm{M, c_[0] < 0 ? M / 2 : 0, abs(c_[0])};
  for (int j = 0; j < M; ++j) {
    Cyclotomic y = *this * zeta(M, -j);
    if (y.is_rational() && y.c_[0] > 0) return UnitForm{M, j, y.c_[0]};
  }
  return std::nullopt;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  if (o.is_zero()) return *this;
  if (order_ == o.order_) {
    for (size_t j = 0; j < c_.size(); ++j) c_[j] += o.c_[j];
  } else if (o.order_ == 1) {
    c_[0] += o.c_[0];
  } else {
    int L = static_cast<int>(std::lcm(static_cast<long>(order_), static_cast<long>(o.order_)));
    Cyclotomic a = lifted(L);
    Cyclotomic b = o.lifted(L);
    for (size_t j = 0; j < a.c_.size(); ++j) a.c_[j] += b.c_[j];
    *this = std::move(a);
  }
  normalize();
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) { return *this += -o; }

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
  if (o.order_ == 1) {
    for (auto& c : c_) c *= o.c_[0];
    if (o.c_[0] == 0) {
      order_ = 1;
      c_.assign(1, mpq_class(0));
    }
    return *this;
  }
  if (order_ == 1) {
    mpq_class s = c_[0];
    *this = o;
    for (auto& c : c_) c *= s;
    if (s == 0) {
      order_ = 1;
      c_.assign(1, mpq_class(0));
    }
    return *this;
  }
  int L = static_cast<int>(std::lcm(static_cast<long>(order_), static_cast<long>(o.order_)));
  const Cyclotomic& a = order_ == L ? *this : lifted(L);
  Cyclotomic bl;
  const Cyclotomic* b = &o;
  if (o.order_ != L) {
    bl = o.lifted(L);
    b = &bl;
  }
  const Table& t = table(L);
  std::vector<mpq_class> acc(t.phi);
  for (int i = 0; i < t.phi; ++i) {
    if (a.c_[i] == 0) continue;
    for (int j = 0; j < t.phi; ++j) {
      if (b->c_[j] == 0) continue;
      mpq_class p = a.c_[i] * b->c_[j];
      int k = i + j;
      if (k < t.phi)
        acc[k] += p;
      else
        add_scaled(acc, p, t.red[k % L]);
    }
  }
  order_ = L;
  c_ = std::move(acc);
  normalize();
  return *this;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.order_ == b.order_) return a.c_ == b.c_;
  if (a.order_ == 1 || b.order_ == 1) return false;  // normalized: rationals carry order 1
  int L = static_cast<int>(std::lcm(static_cast<long>(a.order_), static_cast<long>(b.order_)));
  return a.lifted(L).c_ == b.lifted(L).c_;
}

int Cyclotomic::support() const {
  int s = 0;
  for (auto& c : c_) s += (c != 0);
  return s;
}

std::string Cyclotomic::str() const {
  if (order_ == 1) return c_[0].get_str();
  std::ostringstream os;
  bool first = true;
  for (size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    mpq_class c = c_[k];
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    mpq_class a = abs(c);
    if (k == 0) {
      os << a.get_str();
      continue;
    }
    if (a != 1) os << a.get_str() << "*";
    os << "zeta(" << order_ << ")";
    if (k != 1) os << "^" << k;
  }
  return os.str();
}

}  // namespace necklace
