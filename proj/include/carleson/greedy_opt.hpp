#pragma once

#include <utility>
#include <vector>

#include "carleson/collection.hpp"
#include "carleson/witness.hpp"

namespace carleson {

// Threshold policy for the maximal-operator greedy. Fixed mode uses
// T = 2 * M * weak_height with a user-supplied restricted weak-type
// constant M; Adaptive mode takes the smallest realized height that lets
// some set keep a (1 - eta) fraction of its mass, so no M is needed.
struct ThresholdMode {
  enum class Kind { fixed, adaptive };

  Kind kind = Kind::adaptive;
  Rat eta;  // in (0,1)
  Rat M;    // >= 1; fixed mode only

  static ThresholdMode fixed_mode(Rat m, Rat eta);
  static ThresholdMode adaptive(Rat eta);
};

// One removal step: threshold T_R, the kept set E_R = {x in R : h(x) <= T_R},
// and the weak height of the family the set was chosen from.
struct OptStep {
  long set_id = 0;
  Rat threshold;
  MSet e_set;
  Rat lambda_weak;
};

struct OptTrace {
  Rat A;  // max(1, per-step weak heights)
  std::vector<OptStep> steps;
};

// Atoms of R at height <= T in the collection as given; possibly empty.
MSet good_set(const SetCollection& c, long set_id, const Rat& threshold);

// Fixed: T = 2*M*weak_height(c); smallest set_id keeping mass >= (1-eta)mu(R),
// NoQualifyingSet if none (evidence that M undershoots the true constant).
// Adaptive: smallest realized height T admitting a qualifier, then smallest
// set_id; always succeeds because the maximum height qualifies every set.
std::pair<long, Rat> select_opt(const SetCollection& c, const ThresholdMode& mode);

// Greedy loop over the shrinking family, recording E_R at removal time.
OptTrace run_opt(const SetCollection& c, const ThresholdMode& mode);

// phi_R = 1_{E_R} / Lambda* with Lambda* = max(1, max_R T_R). Sound because
// each atom lies in at most Lambda* of the E-sets: take the earliest-removed
// R with x in E_R; every later set containing x was still present, so their
// count is bounded by h(x) <= T_R at that moment.
SparseWitness witness_from_trace(const OptTrace& t, const SetCollection& c);

// Certified upper bound (max_R T_R) / (1 - eta) on the Carleson constant;
// valid for every trace by the same earliest-removal argument.
Rat carleson_certificate(const OptTrace& t, const Rat& eta);

}  // namespace carleson
