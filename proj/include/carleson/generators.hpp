#pragma once

#include <cstdint>

#include "carleson/collection.hpp"

namespace carleson {

enum class FamilyKind {
  line,
  staircase,
  dyadic_intervals,
  dyadic_rectangles,
  random_family,
};

// Line family on the half-line: one base atom of weight 1 shared by every
// set, plus one private tail atom of weight 1/(Lambda-1) per set, so that
// mu(R_m) = Lambda/(Lambda-1) and the full k-set family has average height
// k*Lambda/(Lambda-1+k). Lambda may be any rational >= 2.
SetCollection gen_line_family(const Rat& lambda, long count);

// Staircase family of dyadic rectangles at stair level j = Lambda-2, reduced
// to its atomic skeleton: the corner point mass (weight 1) shared by every
// set plus one private point of weight 1/(1+j) per set, so that
// mu(R_m) = 1 + 1/(1+j). Lambda must be an integer >= 2.
SetCollection gen_staircase(long lambda, long count);

enum class DyadicKind { intervals, rectangles };

// Uniform grid of 2^(depth*dimension) cells (guarded at 2^16), each of weight
// 2^(-depth*dimension); sets are seeded random dyadic intervals, or products
// of dyadic intervals per axis. Identical parameters reproduce the identical
// collection on every platform.
SetCollection gen_dyadic(DyadicKind kind, int dimension, int depth, int count,
                         std::uint64_t seed);

// Random atomic family: atom weights are fractions with numerator and
// denominator drawn from 1..9; each set keeps each atom with probability 1/2
// (empty draws are rejected).
SetCollection gen_random(int atom_count, int set_count, std::uint64_t seed);

// Guaranteed Carleson lower bound for the largest bucket of ANY partition of
// the line or staircase family (count sets) into parts subfamilies: with
// k = ceil(count/parts), the value k*Lambda/(Lambda-1+k). The two families
// are isomorphic as weighted set systems, so one closed form serves both.
Rat pigeonhole_bound(FamilyKind kind, const Rat& lambda, long count, long parts);

// Declarative generator input, as accepted by the command-line `generate`.
struct FamilySpec {
  FamilyKind kind = FamilyKind::line;
  Rat lambda = Rat(2);      // line, staircase
  long count = 1;           // number of sets, all kinds
  int dimension = 1;        // dyadic kinds
  int depth = 1;            // dyadic kinds
  int atom_count = 1;       // random kind
  std::uint64_t seed = 0;   // dyadic and random kinds
};

SetCollection generate(const FamilySpec& spec);

}  // namespace carleson
