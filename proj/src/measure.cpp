#include "carleson/measure.hpp"

#include <algorithm>

namespace carleson {

std::shared_ptr<const GroundSpace> GroundSpace::build(
    std::vector<std::pair<long, Rat>> weights) {
  std::vector<Atom> atoms;
  atoms.reserve(weights.size());
  for (auto& [id, w] : weights) atoms.push_back(Atom{id, std::move(w), {}});
  return build_atoms(std::move(atoms));
}

std::shared_ptr<const GroundSpace> GroundSpace::build_atoms(std::vector<Atom> atoms) {
  if (atoms.empty()) fail(Errc::validation, "ground space needs at least one atom");
  std::sort(atoms.begin(), atoms.end(),
            [](const Atom& a, const Atom& b) { return a.id < b.id; });
  auto space = std::shared_ptr<GroundSpace>(new GroundSpace());
  space->total_ = 0;
  space->atoms_ = std::move(atoms);
  space->position_.reserve(space->atoms_.size());
  for (std::size_t pos = 0; pos < space->atoms_.size(); ++pos) {
    const Atom& a = space->atoms_[pos];
    if (a.weight <= 0)
      fail(Errc::nonpositive_weight,
           "atom " + std::to_string(a.id) + " has nonpositive weight " +
               rat_to_string(a.weight));
    if (!space->position_.emplace(a.id, pos).second)
      fail(Errc::duplicate_atom_id, "duplicate atom id " + std::to_string(a.id));
    space->total_ += a.weight;
  }
  return space;
}

std::optional<std::size_t> GroundSpace::position_of(long atom_id) const {
  auto it = position_.find(atom_id);
  if (it == position_.end()) return std::nullopt;
  return it->second;
}

std::size_t GroundSpace::position_of_checked(long atom_id) const {
  auto pos = position_of(atom_id);
  if (!pos) fail(Errc::unknown_atom_id, "unknown atom id " + std::to_string(atom_id));
  return *pos;
}

MSet::MSet(SpacePtr space)
    : space_(std::move(space)), bits_((space_->size() + 63) / 64, 0) {}

MSet MSet::from_ids(SpacePtr space, std::span<const long> atom_ids) {
  if (!space) fail(Errc::validation, "null space");
  MSet s(std::move(space));
  for (long id : atom_ids) s.add_pos(s.space_->position_of_checked(id));
  if (s.empty())
    fail(Errc::zero_measure_set, "sets of measure zero are rejected");
  return s;
}

MSet MSet::from_ids(SpacePtr space, std::initializer_list<long> atom_ids) {
  return from_ids(std::move(space), std::span<const long>(atom_ids.begin(), atom_ids.size()));
}

MSet MSet::empty_set(SpacePtr space) {
  if (!space) fail(Errc::validation, "null space");
  return MSet(std::move(space));
}

MSet MSet::full_set(SpacePtr space) {
  if (!space) fail(Errc::validation, "null space");
  MSet s(std::move(space));
  for (std::size_t pos = 0; pos < s.space_->size(); ++pos) s.add_pos(pos);
  return s;
}

bool MSet::empty() const {
  for (std::uint64_t w : bits_)
    if (w) return false;
  return true;
}

std::size_t MSet::count() const {
  std::size_t n = 0;
  for (std::uint64_t w : bits_) n += static_cast<std::size_t>(__builtin_popcountll(w));
  return n;
}

bool MSet::contains_pos(std::size_t pos) const {
  return (bits_[pos / 64] >> (pos % 64)) & 1u;
}

void MSet::add_pos(std::size_t pos) { bits_[pos / 64] |= std::uint64_t{1} << (pos % 64); }

std::vector<long> MSet::ids() const {
  std::vector<long> out;
  out.reserve(count());
  for_each_pos([&](std::size_t pos) { out.push_back(space_->atom(pos).id); });
  return out;
}

std::vector<std::size_t> MSet::positions() const {
  std::vector<std::size_t> out;
  out.reserve(count());
  for_each_pos([&](std::size_t pos) { out.push_back(pos); });
  return out;
}

void MSet::check_same_space(const MSet& other) const {
  if (space_ != other.space_)
    fail(Errc::space_mismatch, "sets live on different ground spaces");
}

MSet MSet::unite(const MSet& other) const {
  check_same_space(other);
  MSet out = *this;
  for (std::size_t w = 0; w < bits_.size(); ++w) out.bits_[w] |= other.bits_[w];
  return out;
}

MSet MSet::intersect(const MSet& other) const {
  check_same_space(other);
  MSet out = *this;
  for (std::size_t w = 0; w < bits_.size(); ++w) out.bits_[w] &= other.bits_[w];
  return out;
}

MSet MSet::difference(const MSet& other) const {
  check_same_space(other);
  MSet out = *this;
  for (std::size_t w = 0; w < bits_.size(); ++w) out.bits_[w] &= ~other.bits_[w];
  return out;
}

bool MSet::is_subset_of(const MSet& other) const {
  check_same_space(other);
  for (std::size_t w = 0; w < bits_.size(); ++w)
    if (bits_[w] & ~other.bits_[w]) return false;
  return true;
}

bool MSet::intersects(const MSet& other) const {
  check_same_space(other);
  for (std::size_t w = 0; w < bits_.size(); ++w)
    if (bits_[w] & other.bits_[w]) return true;
  return false;
}

bool MSet::operator==(const MSet& other) const {
  return space_ == other.space_ && bits_ == other.bits_;
}

Rat mu(const MSet& s) {
  Rat total = 0;
  s.for_each_pos([&](std::size_t pos) { total += s.space()->weight(pos); });
  return total;
}

MSet set_algebra(const MSet& a, const MSet& b, SetOp op) {
  switch (op) {
    case SetOp::set_union: return a.unite(b);
    case SetOp::set_intersect: return a.intersect(b);
    case SetOp::set_difference: return a.difference(b);
  }
  fail(Errc::bad_parameter, "unknown set operation");
}

MSet shadow(SpacePtr space, std::span<const MSet> sets) {
  MSet out = MSet::empty_set(std::move(space));
  for (const MSet& s : sets) out = out.unite(s);
  return out;
}

}  // namespace carleson
