#pragma once

#include <cstdint>
#include <memory>
#include <string>

#include "necklace/matrix.hpp"

namespace necklace {

struct ClosureOptions {
  size_t cap = 1000000;
  unsigned jobs = 1;
  std::string checkpoint;        // path; empty disables checkpointing
  size_t checkpoint_every = 1;   // levels between checkpoint writes
  size_t stop_after_levels = 0;  // stop early (checkpoint written) after this many levels; 0 = never
  size_t batch = 4096;
  size_t max_values = 4096;      // distinct entry values
};

class ClosureStore;

struct ClosureResult {
  size_t order = 0;
  size_t generator_count = 0;
  double wall_time = 0;
  bool complete = false;
  bool resumed = false;
  size_t levels = 0;
  std::shared_ptr<const ClosureStore> store;

  bool contains(const Matrix& m) const;
  Matrix element(size_t i) const;
  // Same element set (independent of enumeration order).
  bool same_set(const ClosureResult& other) const;
};

// Breadth-first closure of the monoid generated by gens (a group when finite).
// Entries must be free of indeterminates. Throws CapExceeded, NonCyclotomicEntries,
// CorruptCheckpoint.
ClosureResult group_closure(const std::vector<Matrix>& gens, const ClosureOptions& opts = {});

uint64_t generator_hash(const std::vector<Matrix>& gens);

}  // namespace necklace
