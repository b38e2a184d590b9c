#include <doctest.h>

#include <json.hpp>

#include "necklace/local_reps.hpp"

using namespace necklace;

TEST_CASE("yang-baxter checks") {
  CHECK(ybe_check(Matrix::identity(4)).holds);
  CHECK(ybe_check(flip_operator(2)).holds);
  CHECK(ybe_check(flip_operator(3)).holds);
  CHECK(ybe_check(bvs_ising().R).holds);
  auto bad = Matrix::parse_rows({{"1", "1", "0", "0"}, {"0", "1", "0", "0"}, {"0", "0", "2", "0"}, {"0", "0", "0", "1"}});
  auto r = ybe_check(bad);
  CHECK_FALSE(r.holds);
  REQUIRE(r.witness);
  CHECK(r.witness->basis_index >= 0);
  CHECK_THROWS(make_bvs("bad", bad));
}

TEST_CASE("bvs json catalog") {
  auto b = bvs_from_json(R"({"m": 2, "R": [["1","0","0","0"],["0","0","1","0"],["0","1","0","0"],["0","0","0","1"]]})");
  CHECK(b.R == flip_operator(2));
  CHECK_THROWS_AS(bvs_from_json("{not json"), ConfigParseError);
  CHECK_THROWS_AS(bvs_catalog("nope"), std::invalid_argument);
}

TEST_CASE("local necklace representations") {
  for (int n = 3; n <= 5; ++n) {
    auto e = local_necklace_rep(bvs_ising(), n);
    CHECK(e.verify_full().all_pass());
    CHECK(e.flags["tau_order_n"]);
    CHECK(verify(e.base.assignment(), braid_relations(n)).all_pass());
    for (int i = 0; i + 1 < n - 1; ++i) CHECK(e.tau * e.base.sigma[i] * e.tau_inv == e.base.sigma[i + 1]);
  }
  auto f = local_necklace_rep(bvs_flip(), 4);
  CHECK(f.verify_full().all_pass());
  std::vector<Matrix> gens = f.base.sigma;
  gens.push_back(f.tau);
  CHECK(group_closure(gens).order == 24);
  CHECK(key_identity_on_pure_tensors(bvs_ising()));
  CHECK(key_identity_on_pure_tensors(bvs_flip(3)));
}

TEST_CASE("n=2 flip extension") {
  auto d = n2_symmetric_extension(Matrix::diag({Scalar(1), Scalar(2), Scalar(2), Scalar(3)}));
  CHECK(d.symmetric);
  CHECK(d.passes);
  CHECK(n2_symmetric_extension(flip_operator(2)).passes);
  auto i = n2_symmetric_extension(bvs_ising().R);
  CHECK_FALSE(i.symmetric);
  CHECK_FALSE(i.passes);
  REQUIRE(i.failure);
  CHECK(i.failure->label == "B1[1]");
  REQUIRE(i.failure->witness);
  CHECK(i.failure->witness->basis_index == 1);
  CHECK(i.braid_lhs_e21 != i.braid_rhs_e21);
  CHECK(d.braid_lhs_e21 == d.braid_rhs_e21);
  CHECK(i.failure->witness->lhs_image != i.failure->witness->rhs_image);
}

TEST_CASE("conjecture ratio") {
  auto r3 = conjecture_ratio(bvs_ising(), 3);
  CHECK(r3.braid.order == 48);
  CHECK(r3.affine.order == 384);
  CHECK(r3.necklace.order == 1152);
  CHECK(r3.verdict);
  auto j = nlohmann::json::parse(r3.to_json());
  CHECK(j["verdict"] == true);
  auto f3 = conjecture_ratio(bvs_flip(), 3);
  CHECK(f3.braid.order == 6);
  CHECK(f3.necklace.order == 6);
  CHECK_FALSE(f3.verdict);
  auto r4 = conjecture_ratio(bvs_ising(), 4);
  CHECK(r4.braid.order == 384);
  CHECK(r4.affine.order == 6144);
  CHECK(r4.necklace.order == 24576);
  CHECK(r4.verdict);
  CHECK(r4.necklace.order % r4.braid.order == 0);
}
