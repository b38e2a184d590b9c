#include "necklace/burnside.hpp"

#include <deque>
#include <random>
#include <sstream>

#include "necklace/errors.hpp"
#include "necklace/variables.hpp"

namespace necklace {
namespace {

// Reduced row echelon basis of a subspace of Scalar^N.
class EchelonSpan {
 public:
  explicit EchelonSpan(size_t n) : n_(n) {}
  size_t size() const { return rows_.size(); }

  bool insert(Vector v) {
    for (size_t i = 0; i < rows_.size(); ++i) {
      const Scalar f = v[piv_[i]];
      if (f.is_zero()) continue;
      for (size_t j = 0; j < n_; ++j)
        if (!rows_[i][j].is_zero()) v[j] -= f * rows_[i][j];
    }
    size_t p = 0;
    while (p < n_ && v[p].is_zero()) ++p;
    if (p == n_) return false;
    Scalar inv = v[p].inv();
    for (auto& x : v)
      if (!x.is_zero()) x *= inv;
    for (auto& r : rows_) {
      const Scalar f = r[p];
      if (f.is_zero()) continue;
      for (size_t j = 0; j < n_; ++j)
        if (!v[j].is_zero()) r[j] -= f * v[j];
    }
    rows_.push_back(std::move(v));
    piv_.push_back(p);
    return true;
  }

 private:
  size_t n_;
  std::vector<Vector> rows_;
  std::vector<size_t> piv_;
};

Vector vec(const Matrix& m) {
  Vector v;
  v.reserve(m.dim() * m.dim());
  for (size_t i = 0; i < m.dim(); ++i)
    for (size_t j = 0; j < m.dim(); ++j) v.push_back(m(i, j));
  return v;
}

}  // namespace

size_t generated_algebra_dim(const std::vector<Matrix>& gens) {
  if (gens.empty()) throw std::invalid_argument("burnside test needs generators");
  size_t d = gens[0].dim();
  EchelonSpan span(d * d);
  std::deque<Matrix> queue;
  Matrix I = Matrix::identity(d);
  span.insert(vec(I));
  queue.push_back(I);
  while (!queue.empty() && span.size() < d * d) {
    Matrix b = std::move(queue.front());
    queue.pop_front();
    for (auto& g : gens) {
      Matrix p = g * b;
      if (span.insert(vec(p))) queue.push_back(std::move(p));
      if (span.size() == d * d) break;
    }
  }
  return span.size();
}

bool burnside_irreducible(const std::vector<Matrix>& gens) {
  size_t d = gens.at(0).dim();
  return generated_algebra_dim(gens) == d * d;
}

size_t commutant_dimension(const std::vector<Matrix>& gens) {
  size_t d = gens.at(0).dim();
  std::vector<Vector> rows;
  for (auto& g : gens)
    for (size_t i = 0; i < d; ++i)
      for (size_t j = 0; j < d; ++j) {
        Vector r(d * d);
        // (GX - XG)_{ij} = sum_k G_ik X_kj - X_ik G_kj
        for (size_t k = 0; k < d; ++k) {
          if (!g(i, k).is_zero()) r[k * d + j] += g(i, k);
          if (!g(k, j).is_zero()) r[i * d + k] -= g(k, j);
        }
        rows.push_back(std::move(r));
      }
  return d * d - rank(std::move(rows));
}

GenericIrreducibility burnside_generic(const std::vector<Matrix>& gens, uint64_t seed, int samples) {
  GenericIrreducibility out;
  std::vector<int> vs;
  for (auto& g : gens) {
    auto v = g.vars();
    vs.insert(vs.end(), v.begin(), v.end());
  }
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  if (vs.empty()) {
    out.irreducible = burnside_irreducible(gens);
    out.samples = 1;
    out.specializations.push_back("exact");
    return out;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(2, 29), den(1, 7);
  int taken = 0, attempts = 0;
  bool first = true;
  while (taken < samples && attempts < samples * 10) {
    ++attempts;
    std::map<int, Scalar> values;
    std::ostringstream desc;
    for (int v : vs) {
      Scalar x = Scalar::rational(num(rng), den(rng));
      values[v] = x;
      desc << var_name(v) << "=" << x.str() << " ";
    }
    std::vector<Matrix> spec;
    try {
      for (auto& g : gens) {
        Matrix s = g.substitute(values);
        if (s.det().is_zero()) throw DivisionByZero("singular specialization");
        spec.push_back(std::move(s));
      }
    } catch (const DivisionByZero&) {
      continue;
    }
    bool irr = burnside_irreducible(spec);
    if (first)
      out.irreducible = irr;
    else if (irr != out.irreducible)
      out.samples_agree = false;
    out.irreducible = out.irreducible || irr;
    first = false;
    ++taken;
    out.specializations.push_back(desc.str() + (irr ? "irreducible" : "reducible"));
  }
  out.samples = taken;
  return out;
}

}  // namespace necklace
