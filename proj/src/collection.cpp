#include "carleson/collection.hpp"

#include <algorithm>
#include <unordered_set>

namespace carleson {

SetCollection::SetCollection(SpacePtr space,
                             std::vector<std::pair<long, MSet>> entries)
    : space_(std::move(space)) {
  if (!space_) fail(Errc::validation, "null space");
  std::unordered_set<long> seen;
  entries_.reserve(entries.size());
  for (auto& [id, set] : entries) {
    if (set.space() != space_)
      fail(Errc::space_mismatch, "set " + std::to_string(id) + " uses another space");
    if (set.empty())
      fail(Errc::zero_measure_set,
           "set " + std::to_string(id) + " has measure zero");
    if (!seen.insert(id).second)
      fail(Errc::duplicate_set_id, "duplicate set id " + std::to_string(id));
    Rat mass = mu(set);
    entries_.push_back(CollectionEntry{id, std::move(set), std::move(mass)});
  }
}

bool SetCollection::has_id(long set_id) const {
  for (const auto& e : entries_)
    if (e.set_id == set_id) return true;
  return false;
}

const CollectionEntry& SetCollection::by_id(long set_id) const {
  for (const auto& e : entries_)
    if (e.set_id == set_id) return e;
  fail(Errc::unknown_set_id, "unknown set id " + std::to_string(set_id));
}

std::vector<long> SetCollection::ids() const {
  std::vector<long> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(e.set_id);
  return out;
}

SetCollection SetCollection::subfamily_mask(std::uint64_t mask) const {
  std::vector<std::pair<long, MSet>> picked;
  for (std::size_t i = 0; i < entries_.size(); ++i)
    if ((mask >> i) & 1u) picked.emplace_back(entries_[i].set_id, entries_[i].set);
  return SetCollection(space_, std::move(picked));
}

SetCollection SetCollection::subfamily(std::span<const long> set_ids) const {
  std::vector<std::pair<long, MSet>> picked;
  picked.reserve(set_ids.size());
  for (long id : set_ids) picked.emplace_back(id, by_id(id).set);
  return SetCollection(space_, std::move(picked));
}

MSet SetCollection::family_shadow() const {
  MSet out = MSet::empty_set(space_);
  for (const auto& e : entries_) out = out.unite(e.set);
  return out;
}

Rat SetCollection::total_mass() const {
  Rat total = 0;
  for (const auto& e : entries_) total += e.mass;
  return total;
}

HeightProfile::HeightProfile(SpacePtr space, std::vector<int> counts)
    : space_(std::move(space)), counts_(std::move(counts)) {}

int HeightProfile::at_id(long atom_id) const {
  return counts_[space_->position_of_checked(atom_id)];
}

int HeightProfile::max_height() const {
  int m = 0;
  for (int c : counts_) m = std::max(m, c);
  return m;
}

HeightProfile height(const SetCollection& c) {
  if (c.empty()) fail(Errc::empty_collection, "height of an empty collection");
  std::vector<int> counts(c.space()->size(), 0);
  for (const auto& e : c.entries())
    e.set.for_each_pos([&](std::size_t pos) { ++counts[pos]; });
  return HeightProfile(c.space(), std::move(counts));
}

Rat avg_height(const SetCollection& c) {
  if (c.empty()) fail(Errc::empty_collection, "avg_height of an empty collection");
  return c.total_mass() / mu(c.family_shadow());
}

Rat weak_height(const SetCollection& c) {
  if (c.empty()) fail(Errc::empty_collection, "weak_height of an empty collection");
  const HeightProfile h = height(c);
  const int hmax = h.max_height();
  // mass_at_least[k] = mu({h >= k}) via a suffix sum over exact level masses.
  std::vector<Rat> level_mass(static_cast<std::size_t>(hmax) + 1, Rat(0));
  for (std::size_t pos = 0; pos < c.space()->size(); ++pos) {
    const int hp = h.at_pos(pos);
    if (hp > 0) level_mass[static_cast<std::size_t>(hp)] += c.space()->weight(pos);
  }
  Rat suffix = 0;
  Rat best = 0;
  for (int k = hmax; k >= 1; --k) {
    suffix += level_mass[static_cast<std::size_t>(k)];
    Rat candidate = Rat(k) * suffix;
    if (candidate > best) best = candidate;
  }
  // suffix now holds mu({h >= 1}) = mu(shadow).
  return best / suffix;
}

}  // namespace carleson
