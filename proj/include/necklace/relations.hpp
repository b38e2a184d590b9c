#pragma once

#include <string>
#include <vector>

#include "necklace/words.hpp"

namespace necklace {

struct RelationPair {
  std::string label;  // B1[2], B2[1,3], N1[4], N2, ...
  GenWord lhs, rhs;
};

struct RelationSet {
  std::string name;
  Alphabet alphabet = Alphabet::Necklace;
  int n = 0;
  std::vector<RelationPair> pairs;
  std::vector<std::string> notes;

  std::vector<Gen> generators() const;
  size_t size() const { return pairs.size(); }
};

// Indices 1..n taken mod n: sigma_{n+1} = sigma_1, sigma_0 = sigma_n.
RelationSet necklace_relations_full(int n);
RelationSet necklace_relations_reduced(int n);
RelationSet circular_relations(int n);
RelationSet circular_relations_reduced(int n);
RelationSet braid_relations(int n);
RelationSet loop_braid_relations(int n);

// Pairs (i<j) with |i-j| not congruent to +-1 mod n, i != j.
std::vector<std::pair<int, int>> far_pairs_mod_n(int n);

}  // namespace necklace
