#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "carleson/collection.hpp"
#include "carleson/witness.hpp"

namespace carleson {

struct FirstFitPolicy {
  std::optional<std::size_t> max_buckets;
};

// First-fit partition into gamma-sparse buckets: each bucket carries its own
// disjoint new-mass witness, so gamma-sparseness needs no further search.
struct PartitionResult {
  Rat gamma;
  std::vector<std::vector<long>> buckets;            // insertion order inside
  std::vector<std::pair<long, MSet>> new_mass;       // per set, insertion order
  std::vector<long> insertion_order;
};

struct PartitionChecks {
  bool disjoint_ok = false;   // new-mass sets pairwise disjoint per bucket
  bool mass_ok = false;       // mu(new_mass(R)) >= gamma * mu(R)
  bool count_ok = false;      // #buckets <= bucket_bound
  Rat bucket_bound;           // 1 + 2M(1-eta)/(1-eta-gamma) * car_upper
  std::size_t bucket_count = 0;

  bool all_ok() const { return disjoint_ok && mass_ok && count_ok; }
};

// Processes sets in the given order; inserts each R into the first bucket
// whose shadow overlaps at most (1-gamma) of R's mass, opening a new bucket
// when none qualifies. Records new_mass(R) = R minus the receiving bucket's
// shadow before insertion.
PartitionResult split(const SetCollection& c, std::span<const long> order,
                      const Rat& gamma, const FirstFitPolicy& policy = {});

// Checks the three partition guarantees against the collection, using the
// gamma recorded in the result. Requires gamma < 1 - eta.
PartitionChecks verify_partition(const PartitionResult& p,
                                 const SetCollection& c, const Rat& M,
                                 const Rat& eta, const Rat& car_upper);

// Every set contributes at least half its mass outside the union of its
// predecessors — the (P1) property; coincides with the gamma = 1/2 bucket
// condition.
bool is_p1(std::span<const MSet> sets);

// The bucket's explicit sparseness witness phi_R = 1_{new_mass(R)}; verifies
// at eta >= gamma by construction.
SparseWitness bucket_witness(const PartitionResult& p, const SetCollection& c,
                             std::size_t bucket_index);

}  // namespace carleson
