#include <random>

#include "doctest.h"
#include "necklace/burnside.hpp"
#include "necklace/errors.hpp"
#include "necklace/local_operator.hpp"
#include "necklace/spectrum.hpp"

using namespace necklace;

namespace {

Scalar P(const char* s) { return Scalar::parse(s); }

Matrix M(std::vector<std::vector<std::string>> rows) { return Matrix::parse_rows(rows); }

Matrix random_matrix(std::mt19937_64& rng, size_t n, bool symbolic) {
  std::uniform_int_distribution<int> c(-2, 2), e(-1, 1);
  Matrix m(n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      Scalar x(c(rng));
      if (symbolic) x *= Scalar::var("t", e(rng));
      m(i, j) = x;
    }
  return m;
}

size_t basis_index(const std::vector<size_t>& digits, size_t m) {
  size_t idx = 0;
  for (size_t d : digits) idx = idx * m + d;
  return idx;
}

}  // namespace

TEST_CASE("kron basics and mixed product") {
  CHECK(kron(Matrix::identity(2), Matrix::identity(2)) == Matrix::identity(4));
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 5; ++trial) {
    Matrix a = random_matrix(rng, 2, true), b = random_matrix(rng, 2, false);
    Matrix c = random_matrix(rng, 2, false), d = random_matrix(rng, 2, true);
    CHECK(kron(a, b) * kron(c, d) == kron(a * c, b * d));
    CHECK(kron(kron(a, b), c) == kron(a, kron(b, c)));
  }
}

TEST_CASE("local operators") {
  Matrix flip = Matrix::permutation({0, 2, 1, 3});
  // P(x)I after I(x)P on e1(x)e2(x)e3 for a 3-dimensional site
  Matrix p3(9);
  for (size_t i = 0; i < 3; ++i)
    for (size_t j = 0; j < 3; ++j) p3(j * 3 + i, i * 3 + j) = Scalar(1);
  Matrix pi = kron(p3, Matrix::identity(3)), ip = kron(Matrix::identity(3), p3);
  Vector v(27);
  v[basis_index({0, 1, 2}, 3)] = Scalar(1);
  Vector w = (pi * ip).apply(v);
  CHECK(w[basis_index({2, 0, 1}, 3)] == Scalar(1));

  Matrix x = materialize(LocalOperator::shift(2, 3));
  Vector e(8);
  e[basis_index({0, 0, 1}, 2)] = Scalar(1);
  CHECK(x.apply(e)[basis_index({1, 0, 0}, 2)] == Scalar(1));
  CHECK(materialize(LocalOperator::shift(2, 4)).pow(4).is_identity());
  CHECK(!materialize(LocalOperator::shift(2, 4)).pow(2).is_identity());

  Matrix r = M({{"1", "0", "0", "1"}, {"0", "1", "-1", "0"}, {"0", "1", "1", "0"}, {"-1", "0", "0", "1"}});
  CHECK(materialize(LocalOperator::block(r, 2, 3, 1)) == kron(r, Matrix::identity(2)));
  for (size_t n = 3; n <= 5; ++n)
    for (size_t i = 1; i + 1 <= n - 1; ++i)
      for (size_t j = i + 2; j <= n - 1; ++j)
        CHECK(commute(materialize(LocalOperator::block(r, 2, n, i)), materialize(LocalOperator::block(r, 2, n, j))));
  CHECK_THROWS_AS(materialize(LocalOperator::shift(2, 13)), SizeBudgetExceeded);
  CHECK(flip * flip == Matrix::identity(4));
}

TEST_CASE("char poly examples") {
  ScalarPoly p = char_poly(Matrix::identity(3));
  CHECK(p == poly_from_roots({Scalar(1), Scalar(1), Scalar(1)}));
  Matrix d = Matrix::diag({P("t"), P("t^-1")});
  CHECK(char_poly(d).c == std::vector<Scalar>{Scalar(1), -P("t + t^-1"), Scalar(1)});
}

TEST_CASE("char poly agrees with Bareiss determinant oracle") {
  std::mt19937_64 rng(11);
  for (size_t n : {2u, 3u, 4u, 5u}) {
    Matrix m = random_matrix(rng, n, n <= 4);
    ScalarPoly p = char_poly(m);
    CHECK(p.degree() == static_cast<int>(n));
    for (const char* x : {"3", "-2", "t + 1", "zeta(3)"}) {
      Scalar s = P(x);
      Matrix xi = s * Matrix::identity(n) - m;
      CHECK(p.eval(s) == det_bareiss(xi));
      CHECK(det_bareiss(xi) == xi.det());
    }
  }
}

TEST_CASE("monomial spectrum") {
  Scalar q4 = P("q^4");
  auto s = monomial_spectrum(q4 * Matrix::identity(3));
  REQUIRE(s.size() == 1);
  CHECK(s[0].value == q4);
  CHECK(s[0].multiplicity == 3);

  auto s2 = monomial_spectrum(Matrix::diag({P("-t^2*a^-1"), P("zeta(3)"), P("-t^2*a^-1")}));
  CHECK(s2.size() == 2);

  Matrix num = Matrix::diag({P("1/256"), P("1"), P("-1/16"), P("-1/16")});
  Matrix conj = M({{"1", "1", "0", "0"}, {"0", "1", "0", "0"}, {"0", "0", "1", "2"}, {"0", "0", "0", "1"}});
  auto s3 = monomial_spectrum(conj * num * conj.inverse());
  CHECK(s3.size() == 3);

  Matrix non = M({{"0", "1"}, {"2", "0"}});
  CHECK_THROWS_AS(monomial_spectrum(non), SpectrumNotResolved);
}

TEST_CASE("spectral projectors") {
  Matrix m = Matrix::diag({Scalar(1), P("q^4"), P("q^4"), Scalar(1)});
  auto spec = monomial_spectrum(m);
  auto proj = spectral_projectors(m, spec);
  REQUIRE(proj.size() == 2);
  Matrix sum(4);
  for (size_t j = 0; j < proj.size(); ++j) {
    sum += proj[j];
    CHECK(m * proj[j] == spec[j].value * proj[j]);
    CHECK(proj[j] * proj[j] == proj[j]);
    CHECK(proj[j].trace() == Scalar(2));
  }
  CHECK(sum.is_identity());
  auto one = spectral_projectors(Matrix::identity(3), monomial_spectrum(Matrix::identity(3)));
  CHECK(one.size() == 1);
  CHECK(one[0].is_identity());
  Matrix j = M({{"1", "1"}, {"0", "1"}});
  CHECK_THROWS_AS(spectral_projectors(j, monomial_spectrum(j)), NotDiagonalizable);
}

TEST_CASE("nilpotency probe") {
  CHECK(nilpotency_probe(Matrix::identity(2)).is_identity);
  auto r = nilpotency_probe(M({{"1", "1"}, {"0", "1"}}));
  CHECK(!r.is_identity);
  CHECK(r.index == 2);
  CHECK(!nilpotency_probe(Matrix::diag({Scalar(1), Scalar(2)})).index.has_value());
}

TEST_CASE("burnside irreducibility") {
  CHECK(!burnside_irreducible({Matrix::diag({Scalar(1), Scalar(2)})}));
  Matrix s1 = M({{"0", "2", "0"}, {"1", "0", "0"}, {"0", "0", "1"}});
  Matrix s2 = M({{"1", "0", "0"}, {"0", "0", "2"}, {"0", "1", "0"}});
  CHECK(burnside_irreducible({s1, s2}));
  CHECK(commutant_dimension({s1, s2}) == 1);
  Matrix p1 = Matrix::permutation({1, 0, 2}), p2 = Matrix::permutation({0, 2, 1});
  CHECK(!burnside_irreducible({p1, p2}));
  CHECK(commutant_dimension({p1, p2}) == 2);
  Matrix z1 = M({{"0", "z", "0"}, {"1", "0", "0"}, {"0", "0", "1"}});
  Matrix z2 = M({{"1", "0", "0"}, {"0", "0", "z"}, {"0", "1", "0"}});
  auto g = burnside_generic({z1, z2}, 5);
  CHECK(g.irreducible);
  CHECK(g.samples_agree);
}

TEST_CASE("burnside implies scalar commutant on random small cases") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 8; ++trial) {
    std::vector<Matrix> gens{random_matrix(rng, 3, false), random_matrix(rng, 3, false)};
    if (trial % 2) gens[1] = gens[0] * gens[0];
    if (burnside_irreducible(gens)) CHECK(commutant_dimension(gens) == 1);
    else CHECK(commutant_dimension(gens) >= 1);
  }
}
