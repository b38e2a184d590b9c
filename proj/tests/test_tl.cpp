#include <doctest.h>

#include "necklace/tl_chain.hpp"

using namespace necklace;

TEST_CASE("XXZ chain relations and the n=2 display") {
  Scalar t = Scalar::var("t");
  for (int n = 2; n <= 5; ++n) {
    auto c = build_chain(n, t);
    INFO(c.checks.to_json());
    CHECK(c.checks.all_pass());
  }
  auto c2 = build_chain(2, t);
  CHECK(c2.loop == t * t + t.pow(-2));
  Matrix g2 = c2.g[0] * c2.g[0];
  CHECK(g2 == g1_squared_display(c2.q));
  auto spec = monomial_spectrum(g2);
  REQUIRE(spec.size() == 2);
  for (auto& e : spec) CHECK((e.value == Scalar(1) || e.value == c2.q.pow(4)));
}

TEST_CASE("gamma^n spectrum matches the charge-sector table") {
  auto tab = gamma_spectrum_table(2, 5);
  INFO(tab.to_json());
  CHECK(tab.all_match());
  Scalar q = Scalar::var("t").pow(2);
  for (auto& r : tab.rows)
    if (r.n == 4 && r.l == 0) CHECK(r.eigenvalue == q.pow(12));
}

TEST_CASE("q^2 = -1 dichotomy") {
  for (int n = 2; n <= 5; ++n) {
    auto r = dichotomy_probe(n);
    INFO(r.to_json());
    CHECK(r.matches_prediction);
    if (n == 2) {
      REQUIRE(r.nilpotency_index);
      CHECK(*r.nilpotency_index == 2);
    }
  }
}

TEST_CASE("seamed translator") {
  Scalar t = Scalar::var("t"), a = Scalar::var("a");
  for (int n = 3; n <= 5; ++n) {
    auto s = build_seam(build_chain(n, t), a);
    INFO(s.checks.to_json());
    INFO(s.circular.summary());
    CHECK(s.checks.all_pass());
    CHECK(s.x == Scalar(-1) - a.pow(-2));
  }
  // n = 2: every seam identity holds but the circular B1 relation does not
  auto s2 = build_seam(build_chain(2, t), a);
  for (auto& c : s2.checks.checks) CHECK(c.pass == (c.name != "CB_n relations"));
  REQUIRE(s2.circular.failures() == 1);
  CHECK(s2.circular.first_failure()->label == "B1[1]");
  CHECK_THROWS_AS(build_seam(build_chain(3, Scalar::root_of_unity(4)), Scalar(2)), ParameterDegenerate);
  CHECK_THROWS_AS(blob(Scalar::root_of_unity(4)), ParameterDegenerate);
}

TEST_CASE("seamed extension at a specialization") {
  Scalar t = Scalar::root_of_unity(16);
  auto s = build_seam(build_chain(3, t), Scalar(8));
  auto ext = seamed_standard_extension(s, 0);
  auto rep = ext.verify_full();
  INFO(rep.summary());
  CHECK(rep.all_pass());
  CHECK_THROWS_AS(seamed_standard_extension(build_seam(build_chain(3, t), Scalar(2)), 0), SpectrumNotResolved);
}

TEST_CASE("seamed NB_n certificate at symbolic t, a") {
  Scalar t = Scalar::var("t"), a = Scalar::var("a");
  auto spec = seam_spectrum(3, t, a);
  REQUIRE(spec.size() == 4);
  CHECK(spec[1].value == t.pow(16) * a.pow(-4));
  CHECK(spec[1].multiplicity == 3);
  auto c = seamed_nb_certificate(build_seam(build_chain(3, t), a));
  INFO(c.to_json());
  CHECK(c.all_pass());
  auto c2 = seamed_nb_certificate(build_seam(build_chain(2, t), a), 1);
  CHECK_FALSE(c2.circular);
  CHECK(c2.minimal_polynomial);
  CHECK(c2.central);
}
