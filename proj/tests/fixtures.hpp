#pragma once

#include <utility>
#include <vector>

#include "carleson/collection.hpp"
#include "carleson/generators.hpp"
#include "carleson/measure.hpp"
#include "carleson/rational.hpp"

namespace fixtures {

using carleson::FamilyKind;
using carleson::FamilySpec;
using carleson::GroundSpace;
using carleson::MSet;
using carleson::Rat;
using carleson::SetCollection;
using carleson::SpacePtr;

// n atoms with ids 0..n-1, each of weight 1.
inline SpacePtr unit_space(long n) {
  std::vector<carleson::Atom> atoms;
  atoms.reserve(static_cast<std::size_t>(n));
  for (long i = 0; i < n; ++i) atoms.push_back({i, Rat(1), ""});
  return GroundSpace::build_atoms(std::move(atoms));
}

// The running example: four unit atoms 0..3 and the chain
//   R1 = {0,1}, R2 = {1,2}, R3 = {2,3}.
inline SetCollection f1() {
  SpacePtr s = unit_space(4);
  std::vector<std::pair<long, MSet>> sets;
  sets.emplace_back(1, MSet::from_ids(s, {0, 1}));
  sets.emplace_back(2, MSet::from_ids(s, {1, 2}));
  sets.emplace_back(3, MSet::from_ids(s, {2, 3}));
  return SetCollection(s, std::move(sets));
}

// n identical copies (ids 1..n) of the full space over `atoms` unit atoms.
inline SetCollection copies(long n, long atoms = 3) {
  SpacePtr s = unit_space(atoms);
  std::vector<std::pair<long, MSet>> sets;
  for (long i = 1; i <= n; ++i) sets.emplace_back(i, MSet::full_set(s));
  return SetCollection(s, std::move(sets));
}

// n pairwise disjoint singletons: set i covers atom i-1 (ids 1..n).
inline SetCollection disjoint(long n) {
  SpacePtr s = unit_space(n);
  std::vector<std::pair<long, MSet>> sets;
  for (long i = 1; i <= n; ++i)
    sets.emplace_back(i, MSet::from_ids(s, {i - 1}));
  return SetCollection(s, std::move(sets));
}

inline FamilySpec interval_spec(int i) {
  FamilySpec spec;
  spec.kind = FamilyKind::dyadic_intervals;
  spec.dimension = 1;
  spec.depth = 1 + (i % 4);
  spec.count = 3 + (i % 10);
  spec.seed = 1000 + static_cast<std::uint64_t>(i);
  return spec;
}

inline FamilySpec rectangle_spec(int i) {
  FamilySpec spec;
  spec.kind = FamilyKind::dyadic_rectangles;
  spec.dimension = 2;
  spec.depth = 1 + (i % 4);
  spec.count = 3 + (i % 10);
  spec.seed = 2000 + static_cast<std::uint64_t>(i);
  return spec;
}

// 120 interval families followed by 120 rectangle families, all within the
// exact-oracle size guard (3..12 sets each).
inline std::vector<FamilySpec> dyadic_corpus() {
  std::vector<FamilySpec> out;
  out.reserve(240);
  for (int i = 0; i < 120; ++i) out.push_back(interval_spec(i));
  for (int i = 0; i < 120; ++i) out.push_back(rectangle_spec(i));
  return out;
}

}  // namespace fixtures
