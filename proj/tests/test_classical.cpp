#include <doctest.h>

#include "necklace/classical_reps.hpp"
#include "necklace/variables.hpp"

using namespace necklace;

namespace {
Scalar V(const char* s) { return Scalar::var(s); }
Scalar P(const char* s) { return Scalar::parse(s); }
}  // namespace

TEST_CASE("braid families satisfy braid relations and conjugator identity") {
  for (int n = 2; n <= 5; ++n) {
    for (auto rep : {standard_rep(n, V("z")), burau_reduced(n, V("t")), burau_unreduced(n, V("t"))}) {
      CHECK(verify(rep.assignment(), braid_relations(n)).all_pass());
      CHECK(conjugator_identity(rep));
    }
  }
  for (int n = 2; n <= 5; ++n) {
    auto L = lkb(n, V("q"), V("t"));
    CHECK(L.degree() == size_t(n * (n - 1) / 2));
    CHECK(conjugator_identity(L));
  }
  CHECK(twist(standard_rep(2, V("z"))) == standard_rep(2, V("z")).sigma[0]);
  CHECK_THROWS_AS(standard_rep(3, Scalar(1)), ParameterDegenerate);
  CHECK_THROWS_AS(burau_reduced(3, Scalar(0)), ParameterDegenerate);
}

TEST_CASE("lkb action on basis") {
  auto L = lkb(3, V("q"), V("t"));
  // v_{1,2} is basis index 0
  CHECK(L.sigma[0](0, 0) == P("t*q^2"));
  for (size_t r = 1; r < 3; ++r) CHECK(L.sigma[0](r, 0).is_zero());
}

TEST_CASE("twist powers") {
  for (int n = 2; n <= 5; ++n) {
    Scalar c;
    CHECK(twist(standard_rep(n, V("z"))).pow(2 * n).is_scalar_multiple_of_identity(&c));
    CHECK(c == V("z").pow(2 * (n - 1)));
    CHECK(twist(burau_reduced(n, V("t"))).pow(2 * n).is_scalar_multiple_of_identity(&c));
    CHECK(c == V("t").pow(2 * n));
  }
  for (int n = 3; n <= 5; ++n) {
    auto L = lkb(n, V("q"), V("t"));
    Matrix g = twist(L);
    Scalar c;
    CHECK(g.pow(n).is_scalar_multiple_of_identity(&c));
    CHECK(c == V("t").pow(2) * V("q").pow(2 * n));
    CHECK(g == lkb_twist_closed_form(n, V("q"), V("t")));
  }
  CHECK(twist(burau_unreduced(4, V("t"))).apply(Vector(4, Scalar(1))) == Vector(4, Scalar(1)));
}

TEST_CASE("standard extensions") {
  for (int n = 3; n <= 5; ++n) {
    auto e = standard_extension(standard_rep(n, V("z")));
    REQUIRE(e.scalar);
    Scalar z = e.roots.apply(V("z"));
    CHECK(e.scalar->pow(2 * n) == z.pow(-2 * (n - 1)));
    CHECK(e.flags["D_commutes"]);
    CHECK(e.flags["tau_order_divides_2n"]);
    CHECK(e.verify_full().all_pass());

    auto b = standard_extension(burau_reduced(n, V("t")), 1);
    REQUIRE(b.scalar);
    CHECK(b.scalar->pow(2 * n) == V("t").pow(-2 * n));
    CHECK(b.verify_full().all_pass());
  }
}

TEST_CASE("lkb standard extension scalar") {
  for (int n = 3; n <= 4; ++n) {
    auto e = standard_extension(lkb(n, V("q"), V("t")));
    REQUIRE(e.scalar);
    Scalar t = e.roots.apply(V("t")), q = V("q");
    Scalar k2n = e.scalar->pow(2 * n);
    CHECK(k2n == t.pow(-4) * q.pow(-4 * n));
    CHECK_FALSE(k2n == t.pow(-2) * q.pow(-4 * n));
    CHECK(e.verify_full().all_pass());
  }
}

TEST_CASE("block tau extension of the standard rep") {
  Scalar z = V("z"), t = V("t");
  auto e = nonstandard_block_tau(4, z, t);
  CHECK(e.verify_full().all_pass());
  CHECK(e.kind == "nonstandard");
  CHECK_FALSE(e.flags["standard_by_criterion"]);
  for (int i = 0; i < 3; ++i) CHECK(e.base.sigma[i] == standard_rep(4, z).sigma[i]);

  Scalar w = V("w");
  auto s = nonstandard_block_tau(4, w.pow(4), w.pow(-3));
  CHECK(s.flags["standard_by_criterion"]);
  CHECK(s.flags["tau_proportional_to_twist"]);
  auto u = nonstandard_block_tau(4, w.pow(4), Scalar::root_of_unity(8, 1) * w.pow(-3));
  CHECK(u.flags["standard_by_criterion"]);
  CHECK_FALSE(u.flags["tau_proportional_to_twist"]);
  CHECK(u.verify_full().all_pass());

  auto c = nonstandard_block_tau(3, z, Scalar(2));
  CHECK(c.tau.pow(6).is_identity());
  CHECK(c.verify_full().all_pass());
}

TEST_CASE("n=2 tau list") {
  auto L = n2_tau_list(V("z"));
  REQUIRE(L.listed.size() == 12);
  CHECK(L.listed[0].valid());
  CHECK(L.listed[1].valid());
  CHECK_FALSE(L.listed[2].valid());
  CHECK_FALSE(L.listed[2].commutes);
  CHECK_FALSE(L.listed[2].conjugation);
  CHECK_FALSE(L.listed[3].valid());
  for (int k = 4; k < 12; ++k) CHECK(L.listed[k].valid());
  CHECK(L.listed[5].tau.pow(4).is_identity());
  for (auto& c : L.extra) CHECK(c.valid());
}

TEST_CASE("lkb non-standard tau") {
  Scalar q = V("q"), t = V("t");
  for (int b = 0; b < 6; ++b) {
    auto e = lkb_nonstandard_tau(3, q, t, b);
    CHECK(e.verify_full().all_pass());
    CHECK(e.flags["tau_n_scalar"]);
    CHECK(e.flags["tau_n_identity"] == (b % 2 == 0));
    if (b % 2) CHECK(e.tau.pow(3) == -Matrix::identity(3));
    CHECK(e.tau.pow(6).is_identity());
    CHECK_FALSE(e.flags["tau_proportional_to_twist"]);
  }
  for (int b = 0; b < 8; ++b) {
    auto e = lkb_nonstandard_tau(4, q, t, b);
    auto r = e.verify_full();
    CHECK(r.pairs.size() == 11);
    CHECK(r.all_pass());
    CHECK(e.flags["tau_n_identity"] == (b % 2 == 0));
  }
}

TEST_CASE("unreduced burau extension irreducibility") {
  IrreducibilityReport irr;
  auto e = unreduced_burau_extension(4, Scalar(3), Scalar(2), &irr);
  CHECK(e.verify_full().all_pass());
  CHECK(irr.necklace.irreducible);
  CHECK_FALSE(irr.braid.irreducible);
  unreduced_burau_extension(4, Scalar(3), Scalar(1), &irr);
  CHECK_FALSE(irr.necklace.irreducible);
  unreduced_burau_extension(4, Scalar(3), Scalar::root_of_unity(4, 1), &irr);
  CHECK_FALSE(irr.necklace.irreducible);
  auto g = unreduced_burau_extension(5, V("t"), V("a"), &irr);
  CHECK(g.verify_full().all_pass());
  CHECK(irr.necklace.irreducible);
}

TEST_CASE("dimension 2 families") {
  Dim2Params p;
  p.a = 1;
  p.d = 2;
  p.t2 = Scalar::root_of_unity(12, 1);
  CHECK(dim2_family(3, 1, p).base.sigma[0](1, 0) == Scalar(3));
  CHECK_FALSE(dim2_family(3, 1, p).verify_full().all_pass());
  p.t2 = Scalar(1);
  CHECK(dim2_family(2, 1, p).verify_full().all_pass());
  CHECK(dim2_family(4, 1, p).verify_full().all_pass());
  GenericIrreducibility irr;
  dim2_family(2, 1, p, &irr);
  CHECK(irr.irreducible);
  for (int k = 0; k < 4; ++k) {
    p.tau_choice = k;
    CHECK_FALSE(dim2_family(2, 2, p).verify_full().all_pass());
  }
  p.tau_choice = 0;
  CHECK_FALSE(dim2_family(3, 3, p).verify_full().all_pass());
  p.c = 5;
  CHECK_FALSE(dim2_family(3, 4, p).verify_full().all_pass());
  p.a = p.d;
  CHECK_THROWS_AS(dim2_family(3, 1, p), RestrictionViolated);
  p.a = 1;
  CHECK_THROWS_AS(dim2_family(3, 2, p), RestrictionViolated);
  p.c = Scalar::root_of_unity(3, 1) * Scalar(4);
  CHECK_THROWS_AS(dim2_family(3, 4, p), RestrictionViolated);
}

TEST_CASE("symmetric and jordan models") {
  for (int n = 2; n <= 8; ++n) CHECK(symmetric_model(n).verify_full().all_pass());
  for (int n = 2; n <= 5; ++n) CHECK(jordan_example(n).verify_full().all_pass());
}
