#include <doctest.h>

#include <json.hpp>

#include "necklace/verify.hpp"

using namespace necklace;

namespace {

bool has_pair(const RelationSet& rs, const std::string& lhs, const std::string& rhs) {
  for (auto& p : rs.pairs)
    if ((p.lhs.str() == lhs && p.rhs.str() == rhs) || (p.lhs.str() == rhs && p.rhs.str() == lhs)) return true;
  return false;
}

Matrix transposition(int n, int i) {
  std::vector<size_t> img(n);
  for (int k = 0; k < n; ++k) img[k] = k;
  int a = i - 1, b = i % n;
  std::swap(img[a], img[b]);
  return Matrix::permutation(img);
}

Matrix cycle(int n) {
  std::vector<size_t> img(n);
  for (int k = 0; k < n; ++k) img[k] = (k + 1) % n;
  return Matrix::permutation(img);
}

RepAssignment<Matrix> symmetric(int n) {
  RepAssignment<Matrix> rep("symmetric", n);
  for (int i = 1; i <= n; ++i) rep.assign(Gen::sigma(i), transposition(n, i));
  rep.assign(Gen::tau(), cycle(n));
  return rep;
}

}  // namespace

TEST_CASE("words reduce freely and print") {
  auto w = GenWord::parse(Alphabet::Necklace, "sigma1 sigma2 sigma2^-1 tau^2 tau^-1");
  CHECK(w.str() == "sigma1 tau");
  CHECK((w * w.inverse()).empty());
  CHECK(GenWord::parse(Alphabet::Loop, "g1 s2^3").length() == 4);
  CHECK(GenWord::gen(Alphabet::Necklace, Gen::tau(), -3).str() == "tau^-3");
  CHECK_THROWS_AS(GenWord::parse(Alphabet::Necklace, "rho1"), ParseError);
}

TEST_CASE("full necklace relation counts and contents") {
  for (int n = 2; n <= 8; ++n) CHECK(necklace_relations_full(n).size() == size_t(n * (n + 1) / 2 + 1));
  auto r3 = necklace_relations_full(3);
  CHECK(has_pair(r3, "sigma3 sigma1 sigma3", "sigma1 sigma3 sigma1"));
  CHECK(has_pair(necklace_relations_full(5), "sigma1 sigma3", "sigma3 sigma1"));
  auto r4 = necklace_relations_full(4);
  CHECK(has_pair(r4, "sigma1 sigma3", "sigma3 sigma1"));
  CHECK(has_pair(r4, "sigma2 sigma4", "sigma4 sigma2"));
  CHECK(has_pair(r4, "tau^8", "1"));
  CHECK(far_pairs_mod_n(3).empty());
}

TEST_CASE("reduced and circular sets") {
  CHECK(necklace_relations_reduced(5).size() == 9);
  for (int n = 3; n <= 8; ++n) CHECK(necklace_relations_reduced(n).size() == size_t(2 * n - 1));
  auto r3 = necklace_relations_reduced(3);
  for (auto& p : r3.pairs) CHECK(p.label.rfind("B2", 0) != 0);
  auto r4 = necklace_relations_reduced(4);
  int far = 0;
  for (auto& p : r4.pairs) far += p.label.rfind("B2", 0) == 0;
  CHECK(far == 1);
  CHECK(has_pair(r4, "sigma1 sigma3", "sigma3 sigma1"));
  CHECK(circular_relations(3).size() == 6);
}

TEST_CASE("loop braid relations") {
  auto lb3 = loop_braid_relations(3);
  CHECK(has_pair(lb3, "s1 s2 g1", "g2 s1 s2"));
  CHECK(has_pair(lb3, "g1 g2 s1", "s2 g1 g2"));
  auto lb2 = loop_braid_relations(2);
  for (auto& p : lb2.pairs) CHECK(p.label.find("far") == std::string::npos);
  CHECK(lb2.size() == 1);
}

TEST_CASE("symmetric group model satisfies necklace relations") {
  for (int n = 2; n <= 8; ++n) {
    auto rep = symmetric(n);
    CHECK(verify(rep, necklace_relations_full(n)).all_pass());
    if (n >= 3) CHECK(verify(rep, necklace_relations_reduced(n)).all_pass());
    CHECK(verify(rep, braid_relations(n)).all_pass());
  }
  auto s = reduced_set_sufficiency_check(5, transposition(5, 1), cycle(5));
  CHECK(s.result);
  CHECK(s.equivalent);
}

TEST_CASE("Jordan block with trivial tau") {
  auto J = Matrix::parse_rows({{"1", "1"}, {"0", "1"}});
  for (int n = 2; n <= 5; ++n) {
    RepAssignment<Matrix> rep("J", n);
    for (int i = 1; i <= n; ++i) rep.assign(Gen::sigma(i), J);
    rep.assign(Gen::tau(), Matrix::identity(2));
    CHECK(verify(rep, necklace_relations_full(n)).all_pass());
  }
}

TEST_CASE("failures carry witnesses and reduced set detects them") {
  auto a = Matrix::parse_rows({{"2", "0"}, {"0", "1"}});
  auto b = Matrix::parse_rows({{"1", "1"}, {"0", "1"}});
  RepAssignment<Matrix> rep("bad", 3);
  rep.assign(Gen::sigma(1), a);
  rep.assign(Gen::sigma(2), b);
  rep.assign(Gen::sigma(3), b);
  rep.assign(Gen::tau(), Matrix::identity(2));
  auto r = verify(rep, necklace_relations_reduced(3));
  CHECK_FALSE(r.all_pass());
  auto* f = r.first_failure();
  REQUIRE(f);
  CHECK(f->label == "N1[1]");
  REQUIRE(f->witness);
  CHECK(f->witness->basis_index == 0);
  auto j = nlohmann::json::parse(r.to_json());
  CHECK(j["pairs"][1]["status"] == "fail");
  CHECK(j["pairs"][1].contains("witness"));

  // sigma_i induced from a non-braiding sigma_1 under a cyclic tau
  auto s1 = Matrix::parse_rows({{"2", "1", "0"}, {"0", "1", "0"}, {"0", "0", "1"}});
  auto s = reduced_set_sufficiency_check(3, s1, cycle(3));
  CHECK_FALSE(s.result);
  CHECK(s.reduced.first_failure()->label == "B1[1]");
}

TEST_CASE("alphabet mismatch") {
  RepAssignment<Matrix> rep("partial", 3);
  rep.assign(Gen::sigma(1), Matrix::identity(2));
  CHECK_THROWS_AS(verify(rep, necklace_relations_full(3)), AlphabetMismatch);
}

TEST_CASE("subgroup property and free-reduction invariance") {
  auto rep = symmetric(6);
  CHECK(verify(rep, braid_relations(6)).all_pass());
  auto w = GenWord::parse(Alphabet::Necklace, "sigma1 tau tau^-1 sigma2");
  auto w2 = GenWord::parse(Alphabet::Necklace, "sigma1 sigma2");
  CHECK(rep.eval(w) == rep.eval(w2));
}
