#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "carleson/measure.hpp"

namespace carleson {

// One member of the family: sets may repeat, ids may not.
struct CollectionEntry {
  long set_id = 0;
  MSet set;
  Rat mass;  // mu(set), cached at construction
};

// The family E: an ordered multiset of atom-sets over one ground space.
class SetCollection {
 public:
  SetCollection(SpacePtr space, std::vector<std::pair<long, MSet>> entries);

  const SpacePtr& space() const { return space_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  std::span<const CollectionEntry> entries() const { return entries_; }
  const CollectionEntry& entry(std::size_t index) const { return entries_[index]; }

  bool has_id(long set_id) const;
  const CollectionEntry& by_id(long set_id) const;  // throws UnknownSetId
  std::vector<long> ids() const;                    // entry order

  // Subfamily over entry indices selected by bitmask (entry i <-> bit i).
  SetCollection subfamily_mask(std::uint64_t mask) const;
  SetCollection subfamily(std::span<const long> set_ids) const;

  MSet family_shadow() const;
  Rat total_mass() const;  // sum of mu(R) over entries

 private:
  SpacePtr space_;
  std::vector<CollectionEntry> entries_;
};

// Pointwise multiplicity h_E(x) = #{R in E : x in R}.
class HeightProfile {
 public:
  HeightProfile(SpacePtr space, std::vector<int> counts);

  const SpacePtr& space() const { return space_; }
  int at_pos(std::size_t pos) const { return counts_[pos]; }
  int at_id(long atom_id) const;
  int max_height() const;
  std::span<const int> counts() const { return counts_; }

 private:
  SpacePtr space_;
  std::vector<int> counts_;
};

HeightProfile height(const SetCollection& c);

// Average height: (sum of mu(R)) / mu(shadow).
Rat avg_height(const SetCollection& c);

// Weak height: max over integer levels k >= 1 of k * mu({h >= k}) / mu(shadow).
// Exact because h is integer-valued.
Rat weak_height(const SetCollection& c);

}  // namespace carleson
