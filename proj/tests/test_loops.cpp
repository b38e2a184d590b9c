#include <doctest.h>

#include "necklace/loop_actions.hpp"

using namespace necklace;

TEST_CASE("free words reduce and print") {
  FreeWord w = FreeWord::gen(2, -1) * FreeWord::gen(1) * FreeWord::gen(2);
  CHECK(w.str() == "x2^-1 x1 x2");
  CHECK((w * w.inverse()).str() == "1");
  int j = 0;
  CHECK(w.is_conjugate_of_generator(&j));
  CHECK(j == 1);
  CHECK_FALSE((FreeWord::gen(1) * FreeWord::gen(2)).is_conjugate_of_generator());
}

TEST_CASE("generator automorphisms") {
  auto g1 = aut_g(3, 1), g2 = aut_g(3, 2), s1 = aut_s(3, 1), s2 = aut_s(3, 2);
  CHECK(g1.apply(FreeWord::gen(2)).str() == "x2^-1 x1 x2");
  CHECK(g1.str() == "x1 -> x2\nx2 -> x2^-1 x1 x2\nx3 -> x3\n");
  CHECK(aut_compose(s1, s1).is_identity());
  CHECK(aut_compose(g1, g1.inverse()).is_identity());
  CHECK(aut_compose(aut_compose(g1, g2), g1) == aut_compose(aut_compose(g2, g1), g2));
  // Word g1 g2 s1 acts as g1, then g2, then s1.
  auto lhs = aut_compose(s1, aut_compose(g2, g1));
  auto rhs = aut_compose(aut_compose(g2, g1), s2);
  CHECK(lhs == rhs);
  CHECK_THROWS_AS(FreeAut::make(3, g1.images, g1.images), std::invalid_argument);
}

TEST_CASE("word length guard") {
  auto g1 = aut_g(2, 1);
  FreeAut acc = g1;
  CHECK_THROWS_AS(
      [&] {
        for (int k = 0; k < 300; ++k) acc = aut_compose(g1, acc, 200);
      }(),
      WordTooLong);
}

TEST_CASE("loop braid relations and specific mixed relations") {
  for (int n = 2; n <= 6; ++n) {
    auto v = lb_check(n);
    INFO(v.summary());
    CHECK(v.all_pass());
  }
  auto lb4 = lb_generators(4);
  CHECK(lb4.eval(GenWord::parse(Alphabet::Loop, "s1 s2 g1")) == lb4.eval(GenWord::parse(Alphabet::Loop, "g2 s1 s2")));
  auto lb5 = lb_generators(5);
  CHECK(lb5.eval(GenWord::parse(Alphabet::Loop, "g1 s3")) == lb5.eval(GenWord::parse(Alphabet::Loop, "s3 g1")));
}

TEST_CASE("zeta is a homomorphism with tau^n in its kernel") {
  for (int n = 3; n <= 6; ++n) {
    auto r = zeta_suite(n);
    INFO(r.to_json());
    CHECK(r.all_pass());
  }
  // n = 2: sigma_2 = s1 g1 s1 and B1 would force s1 to commute with (g1 s1)^3 in LB_2.
  auto r2 = zeta_suite(2);
  for (auto& c : r2.checks) CHECK(c.pass == (c.name != "NB B1[1]"));
  auto z4 = zeta(4);
  CHECK(z4.eval(GenWord::parse(Alphabet::Necklace, "tau sigma1 tau^-1")) == z4.image(Gen::sigma(2)));
  auto z5 = zeta(5);
  CHECK(z5.eval(GenWord::gen(Alphabet::Necklace, Gen::tau()).pow(10)).is_identity());
  for (int n = 3; n <= 4; ++n) {
    auto k = zeta_kernel_check(n);
    INFO(k.to_json());
    CHECK(k.all_pass());
  }
}
