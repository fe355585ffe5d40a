#include "carleson/generators.hpp"

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "carleson/error.hpp"
#include "prng.hpp"

namespace carleson {
namespace {

constexpr long kMaxGridAtoms = 1 << 16;

SetCollection two_atom_star(const Rat& tail_weight, long count,
                            std::string base_label,
                            const std::vector<std::string>& tail_labels) {
  std::vector<Atom> atoms;
  atoms.reserve(static_cast<std::size_t>(count) + 1);
  atoms.push_back(Atom{0, Rat(1), std::move(base_label)});
  for (long m = 1; m <= count; ++m)
    atoms.push_back(
        Atom{m, tail_weight, tail_labels[static_cast<std::size_t>(m - 1)]});
  SpacePtr space = GroundSpace::build_atoms(std::move(atoms));

  std::vector<std::pair<long, MSet>> sets;
  sets.reserve(static_cast<std::size_t>(count));
  for (long m = 1; m <= count; ++m)
    sets.emplace_back(m, MSet::from_ids(space, {0L, m}));
  return SetCollection(std::move(space), std::move(sets));
}

}  // namespace

SetCollection gen_line_family(const Rat& lambda, long count) {
  if (lambda < 2) fail(Errc::bad_parameter, "line family needs Lambda >= 2");
  if (count < 1) fail(Errc::bad_parameter, "line family needs count >= 1");
  const Rat tail_weight = Rat(1) / (lambda - 1);
  std::vector<std::string> tail_labels;
  tail_labels.reserve(static_cast<std::size_t>(count));
  for (long m = 1; m <= count; ++m)
    tail_labels.push_back("[" + std::to_string(m) + ", " + std::to_string(m) +
                          " + " + rat_to_string(tail_weight) + ")");
  return two_atom_star(tail_weight, count, "[0, 1)", tail_labels);
}

SetCollection gen_staircase(long lambda, long count) {
  if (lambda < 2) fail(Errc::bad_parameter, "staircase needs integer Lambda >= 2");
  if (count < 1) fail(Errc::bad_parameter, "staircase needs count >= 1");
  const long j = lambda - 2;
  const Rat point_weight = make_rat(1, 1 + j);
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(count));
  for (long m = 1; m <= count; ++m)
    labels.push_back("point of [0, 2^" + std::to_string(m) + ") x [" +
                     std::to_string(j) + ", " + std::to_string(j) + " + 2^-" +
                     std::to_string(m) + ")");
  return two_atom_star(point_weight, count,
                       "corner (0, " + std::to_string(j) + ")", labels);
}

SetCollection gen_dyadic(DyadicKind kind, int dimension, int depth, int count,
                         std::uint64_t seed) {
  if (kind == DyadicKind::intervals && dimension != 1)
    fail(Errc::bad_parameter, "dyadic intervals are one-dimensional");
  if (kind == DyadicKind::rectangles && dimension < 2)
    fail(Errc::bad_parameter, "dyadic rectangles need dimension >= 2");
  if (depth < 0) fail(Errc::bad_parameter, "depth must be nonnegative");
  if (count < 1) fail(Errc::bad_parameter, "count must be at least 1");

  const long exponent = static_cast<long>(depth) * dimension;
  if (exponent > 16)
    fail(Errc::grid_too_large,
         "grid of 2^" + std::to_string(exponent) + " cells exceeds the 2^16 cap");
  const long cells_per_axis = 1L << depth;
  long grid_cells = 1;
  for (int a = 0; a < dimension; ++a) grid_cells *= cells_per_axis;
  if (grid_cells > kMaxGridAtoms)
    fail(Errc::grid_too_large, "grid exceeds the 2^16 cap");

  const Rat cell_weight = pow2_rat(-exponent);
  std::vector<Atom> atoms;
  atoms.reserve(static_cast<std::size_t>(grid_cells));
  for (long cell = 0; cell < grid_cells; ++cell) {
    std::string label = "cell(";
    long rest = cell;
    for (int a = 0; a < dimension; ++a) {
      if (a > 0) label += ",";
      label += std::to_string(rest % cells_per_axis);
      rest /= cells_per_axis;
    }
    label += ")";
    atoms.push_back(Atom{cell, cell_weight, std::move(label)});
  }
  SpacePtr space = GroundSpace::build_atoms(std::move(atoms));

  std::mt19937_64 rng(seed);
  std::vector<std::pair<long, MSet>> sets;
  sets.reserve(static_cast<std::size_t>(count));
  for (long set_id = 1; set_id <= count; ++set_id) {
    // Per axis: a dyadic interval [k*2^-l, (k+1)*2^-l) drawn as (level, offset).
    std::vector<long> lo(static_cast<std::size_t>(dimension));
    std::vector<long> len(static_cast<std::size_t>(dimension));
    for (int a = 0; a < dimension; ++a) {
      const long level = static_cast<long>(
          detail::uniform_below(rng, static_cast<std::uint64_t>(depth) + 1));
      const long offset = static_cast<long>(
          detail::uniform_below(rng, std::uint64_t{1} << level));
      len[static_cast<std::size_t>(a)] = 1L << (depth - level);
      lo[static_cast<std::size_t>(a)] =
          offset * len[static_cast<std::size_t>(a)];
    }
    MSet set = MSet::empty_set(space);
    std::vector<long> idx(static_cast<std::size_t>(dimension), 0);
    while (true) {
      long cell = 0;
      for (int a = dimension - 1; a >= 0; --a)
        cell = cell * cells_per_axis + lo[static_cast<std::size_t>(a)] +
               idx[static_cast<std::size_t>(a)];
      set.add_pos(static_cast<std::size_t>(cell));
      int a = 0;
      while (a < dimension &&
             ++idx[static_cast<std::size_t>(a)] == len[static_cast<std::size_t>(a)]) {
        idx[static_cast<std::size_t>(a)] = 0;
        ++a;
      }
      if (a == dimension) break;
    }
    sets.emplace_back(set_id, std::move(set));
  }
  return SetCollection(std::move(space), std::move(sets));
}

SetCollection gen_random(int atom_count, int set_count, std::uint64_t seed) {
  if (atom_count < 1) fail(Errc::bad_parameter, "need at least one atom");
  if (set_count < 1) fail(Errc::bad_parameter, "need at least one set");
  if (atom_count > kMaxGridAtoms)
    fail(Errc::grid_too_large, "atom count exceeds the 2^16 cap");

  std::mt19937_64 rng(seed);
  std::vector<Atom> atoms;
  atoms.reserve(static_cast<std::size_t>(atom_count));
  for (int i = 0; i < atom_count; ++i) {
    const long num = 1 + static_cast<long>(detail::uniform_below(rng, 9));
    const long den = 1 + static_cast<long>(detail::uniform_below(rng, 9));
    atoms.push_back(Atom{i, make_rat(num, den), ""});
  }
  SpacePtr space = GroundSpace::build_atoms(std::move(atoms));

  std::vector<std::pair<long, MSet>> sets;
  sets.reserve(static_cast<std::size_t>(set_count));
  for (int set_id = 1; set_id <= set_count; ++set_id) {
    MSet set = MSet::empty_set(space);
    while (set.empty()) {
      set = MSet::empty_set(space);
      std::uint64_t word = 0;
      for (int pos = 0; pos < atom_count; ++pos) {
        if (pos % 64 == 0) word = rng();
        if ((word >> (pos % 64)) & 1u) set.add_pos(static_cast<std::size_t>(pos));
      }
    }
    sets.emplace_back(set_id, std::move(set));
  }
  return SetCollection(std::move(space), std::move(sets));
}

Rat pigeonhole_bound(FamilyKind kind, const Rat& lambda, long count, long parts) {
  if (kind != FamilyKind::line && kind != FamilyKind::staircase)
    fail(Errc::bad_parameter, "pigeonhole bound covers line and staircase only");
  if (count < 1 || parts < 1)
    fail(Errc::bad_parameter, "count and parts must be at least 1");
  if (lambda < 2) fail(Errc::bad_parameter, "Lambda must be at least 2");
  if (kind == FamilyKind::staircase && lambda.get_den() != 1)
    fail(Errc::bad_parameter, "staircase Lambda must be an integer");
  const long k = (count + parts - 1) / parts;  // ceil(count/parts)
  return Rat(k) * lambda / (lambda - 1 + k);
}

SetCollection generate(const FamilySpec& spec) {
  switch (spec.kind) {
    case FamilyKind::line:
      return gen_line_family(spec.lambda, spec.count);
    case FamilyKind::staircase:
      if (spec.lambda.get_den() != 1)
        fail(Errc::bad_parameter, "staircase Lambda must be an integer");
      return gen_staircase(spec.lambda.get_num().get_si(), spec.count);
    case FamilyKind::dyadic_intervals:
      return gen_dyadic(DyadicKind::intervals, spec.dimension, spec.depth,
                        static_cast<int>(spec.count), spec.seed);
    case FamilyKind::dyadic_rectangles:
      return gen_dyadic(DyadicKind::rectangles, spec.dimension, spec.depth,
                        static_cast<int>(spec.count), spec.seed);
    case FamilyKind::random_family:
      return gen_random(spec.atom_count, static_cast<int>(spec.count), spec.seed);
  }
  fail(Errc::bad_parameter, "unknown family kind");
}

}  // namespace carleson
