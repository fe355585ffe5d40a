#pragma once

#include <cstdint>
#include <vector>

#include "carleson/collection.hpp"
#include "carleson/witness.hpp"

namespace carleson {

// Exact optimum over all nonempty subfamilies, with the attaining subfamily.
// Ties are broken by the smallest entry-index bitmask, so reports are
// deterministic regardless of enumeration order or thread count.
struct OracleReport {
  Rat value;
  std::vector<long> argmax;            // set ids of the attaining subfamily
  std::uint64_t enumerated_count = 0;  // nonempty subfamilies examined
};

// Carleson constant: max over nonempty F of (sum of mu(R)) / mu(sh(F)).
// Incremental Gray-code enumeration with running coverage counters; the
// subset range is partitioned into index blocks that OpenMP workers walk
// independently, followed by an ordered reduce. Hard guard at 20 sets.
// jobs <= 0 picks the OpenMP default.
OracleReport carleson_exact(const SetCollection& c, int jobs = 0);

// Weak analogue: max over nonempty F of (max_k k * mu({h_F >= k})) / mu(sh(F)).
OracleReport weak_carleson_exact(const SetCollection& c, int jobs = 0);

// Serial reference implementations that recompute every subfamily from
// scratch through the collection module; kept as independent ground truth
// for the incremental kernels.
OracleReport carleson_exact_ref(const SetCollection& c);
OracleReport weak_carleson_exact_ref(const SetCollection& c);

// Largest eta certified by the witness: asserts support and the atomwise
// sum bound, then returns min_R integral(phi_R)/mu(R).
Rat verify_sparse_witness(const SetCollection& c, const SparseWitness& w);

// Union of all R with mu(R intersect B) > eta * mu(R) — the level set
// {M_E(1_B) > eta} of the family's maximal operator. Strict inequality.
MSet maximal_levelset(const SetCollection& c, const MSet& B, const Rat& eta);

// Candidate sets B for the restricted weak-type lower-bound search.
struct CandidateStrategy {
  enum class Kind { atoms, subfamily_shadows, user, random };

  Kind kind = Kind::atoms;
  std::size_t size_limit = 1;    // subfamily_shadows: max subfamily size
  std::vector<MSet> user_sets;   // user
  std::uint64_t seed = 0;        // random
  std::size_t count = 0;         // random: number of candidates

  static CandidateStrategy atoms();
  static CandidateStrategy subfamily_shadows(std::size_t size_limit);
  static CandidateStrategy user(std::vector<MSet> sets);
  static CandidateStrategy random(std::uint64_t seed, std::size_t count);
};

// max over candidates B of mu(maximal_levelset(c,B,eta)) / mu(B): a certified
// lower bound on the restricted weak-type constant, never claimed tight.
Rat m_eta_lower_bound(const SetCollection& c, const Rat& eta,
                      const CandidateStrategy& strategy);

}  // namespace carleson
