#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "necklace/closure.hpp"
#include "necklace/errors.hpp"
#include "necklace/local_operator.hpp"

using namespace necklace;

namespace {
Matrix perm(std::vector<size_t> img) { return Matrix::permutation(img); }
std::string tmp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("necklace_test_" + name)).string();
}
Matrix ising_r() {
  Scalar h = Scalar::parse("1/2*zeta(8) + 1/2*zeta(8)^7");
  return Matrix::from_rows({{h, Scalar(0), Scalar(0), h},
                            {Scalar(0), h, -h, Scalar(0)},
                            {Scalar(0), h, h, Scalar(0)},
                            {-h, Scalar(0), Scalar(0), h}});
}
}  // namespace

TEST_CASE("symmetric groups") {
  auto s3 = group_closure({perm({1, 0, 2}), perm({0, 2, 1})});
  CHECK(s3.order == 6);
  CHECK(s3.complete);
  CHECK(s3.generator_count == 2);
  auto s4 = group_closure({perm({1, 0, 2, 3}), perm({1, 2, 3, 0})});
  CHECK(s4.order == 24);
  CHECK(s4.contains(perm({3, 2, 1, 0})));
  CHECK_FALSE(s4.contains(Scalar(2) * Matrix::identity(4)));
}

TEST_CASE("identity and cyclic generators") {
  CHECK(group_closure({Matrix::identity(3)}).order == 1);
  CHECK(group_closure({Matrix::diag({Scalar::root_of_unity(12, 1)})}).order == 12);
  CHECK_THROWS_AS(group_closure({Matrix::diag({Scalar::var("t")})}), NonCyclotomicEntries);
}

TEST_CASE("cap exceeded") {
  ClosureOptions o;
  o.cap = 10;
  CHECK_THROWS_AS(group_closure({perm({1, 0, 2, 3}), perm({1, 2, 3, 0})}, o), CapExceeded);
}

TEST_CASE("order independence and idempotence") {
  std::vector<Matrix> g = {perm({1, 0, 2, 3}), perm({1, 2, 3, 0})};
  auto a = group_closure(g);
  auto b = group_closure({g[1], g[0]});
  CHECK(a.same_set(b));
  std::vector<Matrix> all;
  for (size_t i = 0; i < a.order; ++i) all.push_back(a.element(i));
  auto c = group_closure(all);
  CHECK(c.order == a.order);
  CHECK(c.same_set(a));
}

TEST_CASE("ising braid group n=3") {
  auto r = ising_r();
  auto s1 = materialize(LocalOperator::block(r, 2, 3, 1));
  auto s2 = materialize(LocalOperator::block(r, 2, 3, 2));
  CHECK(group_closure(std::vector<Matrix>{s1, s2}).order == 48);
}

TEST_CASE("checkpoint interrupt and resume") {
  std::string path = tmp_path("s4.ckpt");
  std::filesystem::remove(path);
  std::vector<Matrix> g = {perm({1, 0, 2, 3}), perm({1, 2, 3, 0})};
  ClosureOptions o;
  o.checkpoint = path;
  o.stop_after_levels = 2;
  auto partial = group_closure(g, o);
  CHECK_FALSE(partial.complete);
  CHECK(partial.order < 24);
  o.stop_after_levels = 0;
  auto full = group_closure(g, o);
  CHECK(full.resumed);
  CHECK(full.complete);
  CHECK(full.order == 24);
  CHECK(full.same_set(group_closure(g)));

  SUBCASE("mismatched generators") {
    CHECK_THROWS_AS(group_closure({perm({1, 0, 2, 3}), perm({0, 1, 3, 2})}, o), CorruptCheckpoint);
  }
  SUBCASE("corrupt header") {
    std::ofstream(path, std::ios::binary) << "garbage";
    CHECK_THROWS_AS(group_closure(g, o), CorruptCheckpoint);
  }
  std::filesystem::remove(path);
}
