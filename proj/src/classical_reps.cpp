#include "necklace/classical_reps.hpp"

#include <stdexcept>

namespace necklace {
namespace {

void require_nonzero(const Scalar& s, const std::string& what) {
  if (s.is_zero()) throw ParameterDegenerate(what + " must be nonzero");
}

BraidRep checked(BraidRep r) {
  auto rep = verify(r.assignment(), braid_relations(r.n));
  if (!rep.all_pass()) throw std::logic_error(r.name + " fails braid relations: " + rep.summary());
  return r;
}

}  // namespace

RepAssignment<Matrix> BraidRep::assignment() const {
  RepAssignment<Matrix> a(name, n);
  for (int i = 1; i < n; ++i) a.assign(Gen::sigma(i), sigma[i - 1], sigma_inv[i - 1]);
  return a;
}

BraidRep make_braid_rep(std::string name, int n, std::vector<Matrix> sigma) {
  if (static_cast<int>(sigma.size()) != n - 1) throw std::invalid_argument("need n-1 sigma images");
  BraidRep r;
  r.name = std::move(name);
  r.n = n;
  for (auto& s : sigma) r.sigma_inv.push_back(s.inverse());
  r.sigma = std::move(sigma);
  return r;
}

BraidRep standard_rep(int n, const Scalar& z) {
  if (n < 2) throw std::invalid_argument("n must be at least 2");
  require_nonzero(z, "z");
  if (z == Scalar(1)) throw ParameterDegenerate("z must differ from 1");
  std::vector<Matrix> s;
  for (int i = 1; i < n; ++i) {
    Matrix m = Matrix::identity(n);
    m(i - 1, i - 1) = 0;
    m(i, i) = 0;
    m(i - 1, i) = z;
    m(i, i - 1) = 1;
    s.push_back(m);
  }
  auto r = make_braid_rep("standard", n, std::move(s));
  r.params["z"] = z;
  return checked(r);
}

BraidRep burau_reduced(int n, const Scalar& t) {
  if (n < 2) throw std::invalid_argument("n must be at least 2");
  require_nonzero(t, "t");
  std::vector<Matrix> s;
  size_t d = n - 1;
  for (int i = 1; i < n; ++i) {
    Matrix m = Matrix::identity(d);
    size_t k = i - 1;
    m(k, k) = -t;
    if (k >= 1) m(k - 1, k) = -t;
    if (k + 1 < d) m(k + 1, k) = -1;
    s.push_back(m);
  }
  auto r = make_braid_rep("burau_reduced", n, std::move(s));
  r.params["t"] = t;
  return checked(r);
}

BraidRep burau_unreduced(int n, const Scalar& t) {
  if (n < 2) throw std::invalid_argument("n must be at least 2");
  require_nonzero(t, "t");
  std::vector<Matrix> s;
  for (int i = 1; i < n; ++i) {
    Matrix m = Matrix::identity(n);
    m(i - 1, i - 1) = Scalar(1) - t;
    m(i - 1, i) = t;
    m(i, i - 1) = 1;
    m(i, i) = 0;
    s.push_back(m);
  }
  auto r = make_braid_rep("burau_unreduced", n, std::move(s));
  r.params["t"] = t;
  return checked(r);
}

std::vector<std::pair<int, int>> lkb_basis(int n) {
  std::vector<std::pair<int, int>> b;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) b.push_back({i, j});
  return b;
}

namespace {
size_t lkb_index(int n, int a, int b) {
  if (a > b) std::swap(a, b);
  // position of (a,b) in lexicographic order of pairs i<j
  size_t k = 0;
  for (int i = 1; i < a; ++i) k += n - i;
  return k + (b - a - 1);
}
}  // namespace

BraidRep lkb(int n, const Scalar& q, const Scalar& t) {
  if (n < 2) throw std::invalid_argument("n must be at least 2");
  require_nonzero(q, "q");
  require_nonzero(t, "t");
  auto basis = lkb_basis(n);
  size_t d = basis.size();
  std::vector<Matrix> s;
  Scalar one(1);
  for (int i = 1; i < n; ++i) {
    Matrix m(d);
    for (auto [j, k] : basis) {
      size_t col = lkb_index(n, j, k);
      bool hi = (j == i || k == i), hi1 = (j == i + 1 || k == i + 1);
      if (hi && hi1) {
        m(col, col) = t * q * q;
      } else if (!hi && !hi1) {
        m(col, col) = one;
      } else if (hi1) {
        int other = j == i + 1 ? k : j;
        m(lkb_index(n, i, other), col) += one;
      } else {
        int other = j == i ? k : j;
        size_t ii1 = lkb_index(n, i, i + 1);
        if (other > i + 1) {
          m(ii1, col) += t * q * (q - one);
          m(col, col) += one - q;
          m(lkb_index(n, i + 1, other), col) += q;
        } else {
          m(col, col) += one - q;
          m(lkb_index(n, other, i + 1), col) += q;
          m(ii1, col) += q * (q - one);
        }
      }
    }
    s.push_back(m);
  }
  auto r = make_braid_rep("lkb", n, std::move(s));
  r.params["q"] = q;
  r.params["t"] = t;
  return checked(r);
}

Matrix twist(const BraidRep& rep) {
  if (rep.sigma.empty()) return Matrix();
  Matrix g = rep.sigma[0];
  for (size_t i = 1; i < rep.sigma.size(); ++i) g = g * rep.sigma[i];
  return g;
}

Matrix twist_inverse(const BraidRep& rep) {
  if (rep.sigma_inv.empty()) return Matrix();
  Matrix g = rep.sigma_inv.back();
  for (size_t i = rep.sigma_inv.size() - 1; i-- > 0;) g = g * rep.sigma_inv[i];
  return g;
}

bool conjugator_identity(const BraidRep& rep) {
  Matrix g = twist(rep), gi = twist_inverse(rep);
  Matrix x = rep.sigma[0];
  for (int k = 1; k <= rep.n - 2; ++k) {
    x = g * x * gi;
    if (x != rep.sigma[k]) return false;
  }
  return true;
}

Matrix lkb_twist_closed_form(int n, const Scalar& q, const Scalar& t) {
  auto basis = lkb_basis(n);
  Matrix m(basis.size());
  for (auto [i, j] : basis) {
    size_t col = lkb_index(n, i, j);
    if (j < n)
      m(lkb_index(n, i + 1, j + 1), col) = q * q;
    else
      m(lkb_index(n, 1, i + 1), col) = t * q * q;
  }
  return m;
}

NecklaceExtension symmetric_model(int n) {
  if (n < 2) throw std::invalid_argument("n must be at least 2");
  std::vector<Matrix> s;
  for (int i = 1; i < n; ++i) {
    std::vector<size_t> img(n);
    for (int k = 0; k < n; ++k) img[k] = k;
    std::swap(img[i - 1], img[i]);
    s.push_back(Matrix::permutation(img));
  }
  std::vector<size_t> cyc(n), inv(n);
  for (int k = 0; k < n; ++k) {
    cyc[k] = (k + 1) % n;
    inv[k] = (k + n - 1) % n;
  }
  return make_extension("symmetric", "nonstandard", make_braid_rep("symmetric", n, std::move(s)),
                        Matrix::permutation(cyc), Matrix::permutation(inv));
}

NecklaceExtension jordan_example(int n) {
  Matrix J = Matrix::parse_rows({{"1", "1"}, {"0", "1"}});
  std::vector<Matrix> s(n - 1, J);
  auto e = make_extension("jordan", "standard", make_braid_rep("jordan", n, std::move(s)), Matrix::identity(2),
                          Matrix::identity(2));
  e.notes.push_back("reducible braid image with trivial tau");
  return e;
}

}  // namespace necklace
