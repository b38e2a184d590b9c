#include "necklace/relations.hpp"

#include <set>
#include <stdexcept>

namespace necklace {
namespace {

int wrap(int i, int n) { return ((i - 1) % n + n) % n + 1; }

GenWord word(Alphabet a, std::initializer_list<Gen> gens) {
  GenWord w(a);
  for (auto& g : gens) w = w * GenWord::gen(a, g);
  return w;
}

void add_unique(RelationSet& rs, RelationPair p) {
  for (auto& q : rs.pairs)
    if ((q.lhs == p.lhs && q.rhs == p.rhs) || (q.lhs == p.rhs && q.rhs == p.lhs)) {
      rs.notes.push_back(p.label + " coincides with " + q.label + " and is omitted");
      return;
    }
  rs.pairs.push_back(std::move(p));
}

void add_necklace_braid(RelationSet& rs, int n, Alphabet a) {
  auto S = Gen::sigma;
  for (int i = 1; i <= n; ++i) {
    int j = wrap(i + 1, n);
    add_unique(rs, {"B1[" + std::to_string(i) + "]", word(a, {S(i), S(j), S(i)}), word(a, {S(j), S(i), S(j)})});
  }
  auto far = far_pairs_mod_n(n);
  std::string listed;
  for (auto [i, j] : far) {
    add_unique(rs, {"B2[" + std::to_string(i) + "," + std::to_string(j) + "]", word(a, {S(i), S(j)}),
                    word(a, {S(j), S(i)})});
    listed += " (" + std::to_string(i) + "," + std::to_string(j) + ")";
  }
  rs.notes.push_back("B2 pairs with |i-j| not +-1 mod " + std::to_string(n) + ":" + (listed.empty() ? " none" : listed));
}

void add_n1(RelationSet& rs, int n, Alphabet a) {
  auto T = GenWord::gen(a, Gen::tau());
  for (int i = 1; i <= n; ++i)
    rs.pairs.push_back({"N1[" + std::to_string(i) + "]", T * GenWord::gen(a, Gen::sigma(i)) * T.inverse(),
                        GenWord::gen(a, Gen::sigma(wrap(i + 1, n)))});
}

void add_n2(RelationSet& rs, int n, Alphabet a) {
  rs.pairs.push_back({"N2", GenWord::gen(a, Gen::tau(), 2 * n), GenWord(a)});
}

void add_reduced_braid(RelationSet& rs, int n, Alphabet a) {
  auto S = Gen::sigma;
  rs.pairs.push_back({"B1[1]", word(a, {S(1), S(2), S(1)}), word(a, {S(2), S(1), S(2)})});
  for (int j = 3; j <= n - 1; ++j)
    rs.pairs.push_back({"B2[1," + std::to_string(j) + "]", word(a, {S(1), S(j)}), word(a, {S(j), S(1)})});
}

void require(int n, int min) {
  if (n < min) throw std::invalid_argument("n must be at least " + std::to_string(min));
}

}  // namespace

std::vector<Gen> RelationSet::generators() const {
  std::set<Gen> s;
  for (auto& p : pairs) {
    for (auto& g : p.lhs.generators()) s.insert(g);
    for (auto& g : p.rhs.generators()) s.insert(g);
  }
  return {s.begin(), s.end()};
}

std::vector<std::pair<int, int>> far_pairs_mod_n(int n) {
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      int d = (j - i) % n;
      if (d != 1 % n && d != (n - 1) % n) out.push_back({i, j});
    }
  return out;
}

RelationSet necklace_relations_full(int n) {
  require(n, 2);
  RelationSet rs{"NB_" + std::to_string(n) + " full", Alphabet::Necklace, n, {}, {}};
  add_necklace_braid(rs, n, rs.alphabet);
  add_n1(rs, n, rs.alphabet);
  add_n2(rs, n, rs.alphabet);
  return rs;
}

RelationSet necklace_relations_reduced(int n) {
  require(n, 3);
  RelationSet rs{"NB_" + std::to_string(n) + " reduced", Alphabet::Necklace, n, {}, {}};
  add_n2(rs, n, rs.alphabet);
  add_n1(rs, n, rs.alphabet);
  add_reduced_braid(rs, n, rs.alphabet);
  return rs;
}

RelationSet circular_relations(int n) {
  require(n, 2);
  RelationSet rs{"CB_" + std::to_string(n), Alphabet::Circular, n, {}, {}};
  add_necklace_braid(rs, n, rs.alphabet);
  add_n1(rs, n, rs.alphabet);
  return rs;
}

RelationSet circular_relations_reduced(int n) {
  require(n, 3);
  RelationSet rs{"CB_" + std::to_string(n) + " reduced", Alphabet::Circular, n, {}, {}};
  add_n1(rs, n, rs.alphabet);
  add_reduced_braid(rs, n, rs.alphabet);
  return rs;
}

RelationSet braid_relations(int n) {
  require(n, 2);
  auto a = Alphabet::Braid;
  auto S = Gen::sigma;
  RelationSet rs{"B_" + std::to_string(n), a, n, {}, {}};
  for (int i = 1; i + 1 <= n - 1; ++i)
    rs.pairs.push_back({"B1[" + std::to_string(i) + "]", word(a, {S(i), S(i + 1), S(i)}),
                        word(a, {S(i + 1), S(i), S(i + 1)})});
  for (int i = 1; i <= n - 1; ++i)
    for (int j = i + 2; j <= n - 1; ++j)
      rs.pairs.push_back({"B2[" + std::to_string(i) + "," + std::to_string(j) + "]", word(a, {S(i), S(j)}),
                          word(a, {S(j), S(i)})});
  return rs;
}

RelationSet loop_braid_relations(int n) {
  require(n, 2);
  auto a = Alphabet::Loop;
  auto G = Gen::g;
  auto S = Gen::s;
  RelationSet rs{"LB_" + std::to_string(n), a, n, {}, {}};
  auto id = [](const char* f, int i) { return std::string(f) + "[" + std::to_string(i) + "]"; };
  auto id2 = [](const char* f, int i, int j) {
    return std::string(f) + "[" + std::to_string(i) + "," + std::to_string(j) + "]";
  };
  int m = n - 1;
  for (int i = 1; i + 1 <= m; ++i)
    rs.pairs.push_back({id("gg-braid", i), word(a, {G(i), G(i + 1), G(i)}), word(a, {G(i + 1), G(i), G(i + 1)})});
  for (int i = 1; i <= m; ++i)
    for (int j = i + 2; j <= m; ++j)
      rs.pairs.push_back({id2("gg-far", i, j), word(a, {G(i), G(j)}), word(a, {G(j), G(i)})});
  for (int i = 1; i <= m; ++i) rs.pairs.push_back({id("ss-involution", i), word(a, {S(i), S(i)}), GenWord(a)});
  for (int i = 1; i + 1 <= m; ++i)
    rs.pairs.push_back({id("ss-braid", i), word(a, {S(i), S(i + 1), S(i)}), word(a, {S(i + 1), S(i), S(i + 1)})});
  for (int i = 1; i <= m; ++i)
    for (int j = i + 2; j <= m; ++j)
      rs.pairs.push_back({id2("ss-far", i, j), word(a, {S(i), S(j)}), word(a, {S(j), S(i)})});
  for (int i = 1; i + 1 <= m; ++i) {
    rs.pairs.push_back({id("ssg-mixed", i), word(a, {S(i), S(i + 1), G(i)}), word(a, {G(i + 1), S(i), S(i + 1)})});
    rs.pairs.push_back({id("ggs-mixed", i), word(a, {G(i), G(i + 1), S(i)}), word(a, {S(i + 1), G(i), G(i + 1)})});
  }
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= m; ++j)
      if (std::abs(i - j) > 1) rs.pairs.push_back({id2("gs-far", i, j), word(a, {G(i), S(j)}), word(a, {S(j), G(i)})});
  return rs;
}

}  // namespace necklace
