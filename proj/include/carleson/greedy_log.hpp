#pragma once

#include <vector>

#include "carleson/collection.hpp"
#include "carleson/witness.hpp"

namespace carleson {

// One removal step: the chosen set, the average height Lambda of the family
// it was chosen from, and the recorded function f_R = g_R at that moment.
struct LogStep {
  long set_id = 0;
  Rat lambda;
  AtomFunction f;
};

// Output of the log-loss greedy: removal order with per-step constants and
// A = max(1, max_R Lambda_R).
struct LogTrace {
  Rat A;
  std::vector<LogStep> steps;
};

// g_R = 1_R / h * 1_{h <= 2 Lambda} for the collection as given.
AtomFunction candidate_g(const SetCollection& c, long set_id);

// Smallest set_id with integral(g_R) >= mu(R) / (2 Lambda); guaranteed to
// exist (the average-height pigeonhole), so SelectionImpossible signals a
// bug rather than an input condition.
long select_log(const SetCollection& c);

// Full greedy run: repeatedly select, record (set, Lambda, g_R), remove.
LogTrace run_log(const SetCollection& c);

// Exact normalizer S = max over atoms of sum_R f_R(x); exposed separately
// because the harmonic bound S <= H_{floor(2A)} is a tested invariant.
Rat witness_normalizer(const LogTrace& t, const SetCollection& c);

// phi_R = f_R / S. Guarantees sum_R phi_R <= 1 with equality at some atom,
// and achieved_eta = min_R integral(phi_R)/mu(R) >= 1/(2*A*S).
SparseWitness normalize_witness(const LogTrace& t, const SetCollection& c);

}  // namespace carleson
