#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "carleson/measure.hpp"

namespace carleson {

// Sparse nonnegative function on atoms, stored as (position, value) pairs
// sorted by position with zero values dropped — one canonical representation
// per function. Houses the g_R/f_R of the log greedy and the phi_R of
// sparse witnesses.
class AtomFunction {
 public:
  AtomFunction() = default;

  // Entries may arrive unsorted; duplicates are rejected, zeros dropped,
  // negative values rejected.
  static AtomFunction from_entries(std::vector<std::pair<std::size_t, Rat>> entries);

  // Append-in-increasing-position builder for internal construction.
  void push(std::size_t pos, Rat value);

  bool zero() const { return entries_.empty(); }
  std::span<const std::pair<std::size_t, Rat>> entries() const { return entries_; }

  // Zero when the position carries no entry.
  Rat value_at(std::size_t pos) const;

  // Sum of value(x) * mu(x) over the support.
  Rat integral(const GroundSpace& space) const;

  AtomFunction scaled(const Rat& factor) const;

  bool supported_in(const MSet& set) const;

 private:
  std::vector<std::pair<std::size_t, Rat>> entries_;
};

// Family of functions phi_R indexed by set_id plus the eta both sparseness
// conditions are certified for: integral(phi_R) >= eta * mu(R) for every R
// and sum_R phi_R <= 1 at every atom.
struct SparseWitness {
  std::vector<std::pair<long, AtomFunction>> phi;
  Rat achieved_eta;
};

}  // namespace carleson
