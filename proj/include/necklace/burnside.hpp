#pragma once

#include <cstdint>

#include "necklace/matrix.hpp"

namespace necklace {

// Dimension of the unital algebra generated by gens.
size_t generated_algebra_dim(const std::vector<Matrix>& gens);
bool burnside_irreducible(const std::vector<Matrix>& gens);
// Dimension of {X : XG = GX for all G}.
size_t commutant_dimension(const std::vector<Matrix>& gens);

struct GenericIrreducibility {
  bool irreducible = false;
  bool samples_agree = true;
  int samples = 0;
  std::vector<std::string> specializations;
};

// Burnside test at random rational specializations of all indeterminates (exact when
// the generators are already constant). A single irreducible sample implies generic
// irreducibility.
GenericIrreducibility burnside_generic(const std::vector<Matrix>& gens, uint64_t seed, int samples = 3);

}  // namespace necklace
