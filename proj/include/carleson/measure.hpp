#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "carleson/error.hpp"
#include "carleson/rational.hpp"

namespace carleson {

struct Atom {
  long id = 0;
  Rat weight;         // strictly positive
  std::string label;  // optional, e.g. geometric coordinates
};

// Finitely-atomized measure space. Immutable after construction; shared by
// reference between sets and collections, so identity doubles as the
// same-space check.
class GroundSpace {
 public:
  static std::shared_ptr<const GroundSpace> build(
      std::vector<std::pair<long, Rat>> weights);
  static std::shared_ptr<const GroundSpace> build_atoms(std::vector<Atom> atoms);

  std::size_t size() const { return atoms_.size(); }
  const Atom& atom(std::size_t pos) const { return atoms_[pos]; }
  const Rat& weight(std::size_t pos) const { return atoms_[pos].weight; }
  const Rat& total_weight() const { return total_; }

  std::optional<std::size_t> position_of(long atom_id) const;
  std::size_t position_of_checked(long atom_id) const;

 private:
  GroundSpace() = default;

  std::vector<Atom> atoms_;  // sorted by id
  std::unordered_map<long, std::size_t> position_;
  Rat total_;
};

using SpacePtr = std::shared_ptr<const GroundSpace>;

enum class SetOp { set_union, set_intersect, set_difference };

// Subset of a ground space's atoms, stored as a bitset over atom positions.
// The validated constructor rejects empty sets (all weights are positive, so
// zero measure means empty); set algebra may still produce empty values as
// intermediates.
class MSet {
 public:
  // Validated constructor: ids must exist, result must be nonempty.
  static MSet from_ids(SpacePtr space, std::span<const long> atom_ids);
  static MSet from_ids(SpacePtr space, std::initializer_list<long> atom_ids);
  // Empty set over a space; legal only as an algebra intermediate.
  static MSet empty_set(SpacePtr space);
  static MSet full_set(SpacePtr space);

  const SpacePtr& space() const { return space_; }
  bool same_space(const MSet& other) const { return space_ == other.space_; }

  bool empty() const;
  std::size_t count() const;
  bool contains_pos(std::size_t pos) const;
  void add_pos(std::size_t pos);
  std::vector<long> ids() const;            // sorted atom ids
  std::vector<std::size_t> positions() const;

  MSet unite(const MSet& other) const;
  MSet intersect(const MSet& other) const;
  MSet difference(const MSet& other) const;
  bool is_subset_of(const MSet& other) const;
  bool intersects(const MSet& other) const;

  bool operator==(const MSet& other) const;

  template <typename Fn>
  void for_each_pos(Fn&& fn) const {
    for (std::size_t w = 0; w < bits_.size(); ++w) {
      std::uint64_t word = bits_[w];
      while (word) {
        const int b = __builtin_ctzll(word);
        fn(w * 64 + static_cast<std::size_t>(b));
        word &= word - 1;
      }
    }
  }

 private:
  explicit MSet(SpacePtr space);
  void check_same_space(const MSet& other) const;

  SpacePtr space_;
  std::vector<std::uint64_t> bits_;
};

// Sum of atom weights; zero only for the empty set.
Rat mu(const MSet& s);

// Exact Boolean algebra on same-space sets. May return an empty set.
MSet set_algebra(const MSet& a, const MSet& b, SetOp op);

// Union of all sets. The space argument covers the empty-list case.
MSet shadow(SpacePtr space, std::span<const MSet> sets);

}  // namespace carleson
