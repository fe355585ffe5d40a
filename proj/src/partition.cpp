#include "carleson/partition.hpp"

#include <algorithm>
#include <unordered_set>

#include "carleson/error.hpp"

namespace carleson {
namespace {

void check_order(const SetCollection& c, std::span<const long> order) {
  if (order.size() != c.size())
    fail(Errc::bad_order, "order lists " + std::to_string(order.size()) +
                              " ids for " + std::to_string(c.size()) + " sets");
  std::unordered_set<long> seen;
  for (long id : order) {
    if (!c.has_id(id))
      fail(Errc::bad_order, "order names unknown set id " + std::to_string(id));
    if (!seen.insert(id).second)
      fail(Errc::bad_order, "order repeats set id " + std::to_string(id));
  }
}

}  // namespace

PartitionResult split(const SetCollection& c, std::span<const long> order,
                      const Rat& gamma, const FirstFitPolicy& policy) {
  if (gamma <= 0 || gamma >= 1)
    fail(Errc::gamma_out_of_range, "gamma must lie strictly between 0 and 1");
  check_order(c, order);

  PartitionResult result;
  result.gamma = gamma;
  result.insertion_order.assign(order.begin(), order.end());
  std::vector<MSet> shadows;  // per bucket

  for (long id : order) {
    const CollectionEntry& e = c.by_id(id);
    std::size_t target = shadows.size();
    for (std::size_t b = 0; b < shadows.size(); ++b) {
      if (mu(e.set.intersect(shadows[b])) <= (1 - gamma) * e.mass) {
        target = b;
        break;
      }
    }
    if (target == shadows.size()) {
      if (policy.max_buckets && shadows.size() >= *policy.max_buckets)
        fail(Errc::bucket_limit_exceeded,
             "set " + std::to_string(id) + " fits no bucket and the limit of " +
                 std::to_string(*policy.max_buckets) + " is reached");
      shadows.push_back(MSet::empty_set(c.space()));
      result.buckets.emplace_back();
    }
    result.new_mass.emplace_back(id, e.set.difference(shadows[target]));
    result.buckets[target].push_back(id);
    shadows[target] = shadows[target].unite(e.set);
  }
  return result;
}

PartitionChecks verify_partition(const PartitionResult& p,
                                 const SetCollection& c, const Rat& M,
                                 const Rat& eta, const Rat& car_upper) {
  if (eta <= 0 || eta >= 1)
    fail(Errc::bad_parameter, "eta must lie strictly between 0 and 1");
  if (p.gamma >= 1 - eta)
    fail(Errc::gamma_out_of_range, "the theorem needs gamma < 1 - eta");
  if (M < 1) fail(Errc::bad_parameter, "M must be at least 1");

  PartitionChecks checks;
  checks.bucket_count = p.buckets.size();
  checks.bucket_bound = 1 + 2 * M * (1 - eta) / (1 - eta - p.gamma) * car_upper;
  checks.count_ok = Rat(static_cast<long>(checks.bucket_count)) <= checks.bucket_bound;

  const auto find_new_mass = [&](long id) -> const MSet& {
    for (const auto& [set_id, mass_set] : p.new_mass)
      if (set_id == id) return mass_set;
    fail(Errc::unknown_set_id,
         "partition records no new mass for set " + std::to_string(id));
  };

  checks.mass_ok = true;
  for (const auto& [id, mass_set] : p.new_mass)
    if (mu(mass_set) < p.gamma * c.by_id(id).mass) checks.mass_ok = false;

  checks.disjoint_ok = true;
  for (const auto& bucket : p.buckets) {
    MSet seen = MSet::empty_set(c.space());
    for (long id : bucket) {
      const MSet& piece = find_new_mass(id);
      if (piece.intersects(seen)) checks.disjoint_ok = false;
      seen = seen.unite(piece);
    }
  }
  return checks;
}

bool is_p1(std::span<const MSet> sets) {
  if (sets.empty()) fail(Errc::empty_collection, "is_p1 on empty list");
  for (const MSet& s : sets)
    if (s.space() != sets.front().space())
      fail(Errc::space_mismatch, "is_p1 across different spaces");

  MSet prefix = MSet::empty_set(sets.front().space());
  for (const MSet& s : sets) {
    if (2 * mu(s.difference(prefix)) < mu(s)) return false;
    prefix = prefix.unite(s);
  }
  return true;
}

SparseWitness bucket_witness(const PartitionResult& p, const SetCollection& c,
                             std::size_t bucket_index) {
  if (bucket_index >= p.buckets.size())
    fail(Errc::bad_parameter, "bucket index out of range");

  SparseWitness w;
  Rat eta = 0;
  bool first = true;
  for (long id : p.buckets[bucket_index]) {
    const MSet* piece = nullptr;
    for (const auto& [set_id, mass_set] : p.new_mass)
      if (set_id == id) piece = &mass_set;
    if (!piece)
      fail(Errc::unknown_set_id,
           "partition records no new mass for set " + std::to_string(id));
    AtomFunction f;
    piece->for_each_pos([&](std::size_t pos) { f.push(pos, Rat(1)); });
    w.phi.emplace_back(id, std::move(f));
    const Rat ratio = mu(*piece) / c.by_id(id).mass;
    if (first || ratio < eta) {
      eta = ratio;
      first = false;
    }
  }
  w.achieved_eta = std::move(eta);
  return w;
}

}  // namespace carleson
