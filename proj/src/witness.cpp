#include "carleson/witness.hpp"

#include <algorithm>

#include "carleson/error.hpp"

namespace carleson {

AtomFunction AtomFunction::from_entries(
    std::vector<std::pair<std::size_t, Rat>> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  AtomFunction f;
  for (auto& [pos, value] : entries) {
    if (value < 0)
      fail(Errc::validation,
           "negative function value at position " + std::to_string(pos));
    if (!f.entries_.empty() && f.entries_.back().first == pos)
      fail(Errc::validation,
           "duplicate function entry at position " + std::to_string(pos));
    if (value > 0) f.entries_.emplace_back(pos, std::move(value));
  }
  return f;
}

void AtomFunction::push(std::size_t pos, Rat value) {
  if (value == 0) return;
  entries_.emplace_back(pos, std::move(value));
}

Rat AtomFunction::value_at(std::size_t pos) const {
  const auto it = std::lower_bound(
      entries_.begin(), entries_.end(), pos,
      [](const auto& entry, std::size_t p) { return entry.first < p; });
  if (it != entries_.end() && it->first == pos) return it->second;
  return Rat(0);
}

Rat AtomFunction::integral(const GroundSpace& space) const {
  Rat total = 0;
  for (const auto& [pos, value] : entries_) total += value * space.weight(pos);
  return total;
}

AtomFunction AtomFunction::scaled(const Rat& factor) const {
  AtomFunction out;
  out.entries_.reserve(entries_.size());
  for (const auto& [pos, value] : entries_) out.push(pos, value * factor);
  return out;
}

bool AtomFunction::supported_in(const MSet& set) const {
  for (const auto& [pos, value] : entries_)
    if (!set.contains_pos(pos)) return false;
  return true;
}

}  // namespace carleson
