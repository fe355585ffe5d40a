#include "carleson/oracle.hpp"

#include <algorithm>
#include <random>
#include <unordered_set>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "carleson/error.hpp"
#include "prng.hpp"

namespace carleson {
namespace {

constexpr std::size_t kMaxOracleSets = 20;

void check_oracle_size(const SetCollection& c) {
  if (c.empty()) fail(Errc::empty_collection, "oracle on empty collection");
  if (c.size() > kMaxOracleSets)
    fail(Errc::too_large, "exact oracle is capped at " +
                              std::to_string(kMaxOracleSets) + " sets, got " +
                              std::to_string(c.size()));
}

int resolve_jobs(int jobs) {
#ifdef _OPENMP
  return jobs > 0 ? jobs : omp_get_max_threads();
#else
  (void)jobs;
  return 1;
#endif
}

// Flat view of the collection for the enumeration kernels.
struct Instance {
  std::size_t n = 0;
  std::vector<std::vector<std::uint32_t>> positions;  // per entry
  std::vector<Rat> masses;                            // per entry
  std::vector<Rat> weights;                           // per atom position

  explicit Instance(const SetCollection& c) : n(c.size()) {
    positions.resize(n);
    masses.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      c.entry(i).set.for_each_pos([&](std::size_t pos) {
        positions[i].push_back(static_cast<std::uint32_t>(pos));
      });
      masses.push_back(c.entry(i).mass);
    }
    weights.reserve(c.space()->size());
    for (std::size_t pos = 0; pos < c.space()->size(); ++pos)
      weights.push_back(c.space()->weight(pos));
  }
};

// Best subfamily seen by one walker: value first, then smallest bitmask.
struct Best {
  bool any = false;
  Rat value;
  std::uint64_t mask = 0;
};

void consider(Best& best, const Rat& value, std::uint64_t mask) {
  if (!best.any || value > best.value ||
      (value == best.value && mask < best.mask)) {
    best.any = true;
    best.value = value;
    best.mask = mask;
  }
}

void merge(Best& into, const Best& from) {
  if (from.any) consider(into, from.value, from.mask);
}

// Incremental state for one Gray-code walk. `track_levels` additionally
// maintains the height histogram the weak oracle needs.
struct WalkState {
  const Instance& inst;
  bool track_levels;
  std::vector<int> cover;
  std::vector<Rat> level_mass;  // mu({h = k}) for k = 1..n
  Rat total;
  Rat shadow;

  WalkState(const Instance& inst_, bool track_levels_)
      : inst(inst_),
        track_levels(track_levels_),
        cover(inst_.weights.size(), 0),
        level_mass(track_levels_ ? inst_.n + 1 : 0, Rat(0)),
        total(0),
        shadow(0) {}

  void add(std::size_t i) {
    total += inst.masses[i];
    for (std::uint32_t pos : inst.positions[i]) {
      const int v = cover[pos]++;
      if (v == 0) shadow += inst.weights[pos];
      if (track_levels) {
        if (v > 0) level_mass[static_cast<std::size_t>(v)] -= inst.weights[pos];
        level_mass[static_cast<std::size_t>(v) + 1] += inst.weights[pos];
      }
    }
  }

  void drop(std::size_t i) {
    total -= inst.masses[i];
    for (std::uint32_t pos : inst.positions[i]) {
      const int v = --cover[pos];
      if (v == 0) shadow -= inst.weights[pos];
      if (track_levels) {
        level_mass[static_cast<std::size_t>(v) + 1] -= inst.weights[pos];
        if (v > 0) level_mass[static_cast<std::size_t>(v)] += inst.weights[pos];
      }
    }
  }

  Rat carleson_value() const { return total / shadow; }

  Rat weak_value() const {
    Rat suffix = 0;
    Rat best_num = 0;
    for (std::size_t k = inst.n; k >= 1; --k) {
      suffix += level_mass[k];
      Rat candidate = Rat(static_cast<long>(k)) * suffix;
      if (candidate > best_num) best_num = candidate;
    }
    return best_num / shadow;
  }
};

// Walks subset indices j in [lo, hi) (the mask is gray(j) = j ^ (j >> 1),
// nonzero for every j >= 1); each step flips exactly bit ctz(j).
template <typename Eval>
Best walk_block(const Instance& inst, std::uint64_t lo, std::uint64_t hi,
                bool track_levels, Eval&& eval) {
  WalkState state(inst, track_levels);
  std::uint64_t gray = lo ^ (lo >> 1);
  for (std::size_t i = 0; i < inst.n; ++i)
    if ((gray >> i) & 1u) state.add(i);

  Best best;
  consider(best, eval(state), gray);
  for (std::uint64_t j = lo + 1; j < hi; ++j) {
    const int bit = __builtin_ctzll(j);
    gray ^= std::uint64_t{1} << bit;
    if ((gray >> bit) & 1u)
      state.add(static_cast<std::size_t>(bit));
    else
      state.drop(static_cast<std::size_t>(bit));
    consider(best, eval(state), gray);
  }
  return best;
}

template <typename Eval>
OracleReport enumerate_subfamilies(const SetCollection& c, int jobs,
                                   bool track_levels, Eval&& eval) {
  check_oracle_size(c);
  const Instance inst(c);
  const std::uint64_t count = (std::uint64_t{1} << inst.n) - 1;  // j in [1, 2^n)
  const int threads = resolve_jobs(jobs);
  const std::uint64_t blocks =
      std::min<std::uint64_t>(count, static_cast<std::uint64_t>(threads) * 8);

  std::vector<Best> partial(blocks);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(threads)
#endif
  for (std::int64_t b = 0; b < static_cast<std::int64_t>(blocks); ++b) {
    const std::uint64_t lo = 1 + count * static_cast<std::uint64_t>(b) / blocks;
    const std::uint64_t hi =
        1 + count * (static_cast<std::uint64_t>(b) + 1) / blocks;
    partial[static_cast<std::size_t>(b)] =
        walk_block(inst, lo, hi, track_levels, eval);
  }

  Best best;  // ordered reduce: independent of thread count and block split
  for (const Best& p : partial) merge(best, p);

  OracleReport report;
  report.value = best.value;
  for (std::size_t i = 0; i < inst.n; ++i)
    if ((best.mask >> i) & 1u) report.argmax.push_back(c.entry(i).set_id);
  report.enumerated_count = count;
  return report;
}

}  // namespace

OracleReport carleson_exact(const SetCollection& c, int jobs) {
  return enumerate_subfamilies(
      c, jobs, /*track_levels=*/false,
      [](const WalkState& s) { return s.carleson_value(); });
}

OracleReport weak_carleson_exact(const SetCollection& c, int jobs) {
  return enumerate_subfamilies(
      c, jobs, /*track_levels=*/true,
      [](const WalkState& s) { return s.weak_value(); });
}

OracleReport carleson_exact_ref(const SetCollection& c) {
  check_oracle_size(c);
  const std::uint64_t count = (std::uint64_t{1} << c.size()) - 1;
  Best best;
  for (std::uint64_t mask = 1; mask <= count; ++mask) {
    Rat total = 0;
    MSet sh = MSet::empty_set(c.space());
    for (std::size_t i = 0; i < c.size(); ++i) {
      if ((mask >> i) & 1u) {
        total += c.entry(i).mass;
        sh = sh.unite(c.entry(i).set);
      }
    }
    consider(best, total / mu(sh), mask);
  }
  OracleReport report;
  report.value = best.value;
  for (std::size_t i = 0; i < c.size(); ++i)
    if ((best.mask >> i) & 1u) report.argmax.push_back(c.entry(i).set_id);
  report.enumerated_count = count;
  return report;
}

OracleReport weak_carleson_exact_ref(const SetCollection& c) {
  check_oracle_size(c);
  const std::uint64_t count = (std::uint64_t{1} << c.size()) - 1;
  Best best;
  for (std::uint64_t mask = 1; mask <= count; ++mask) {
    std::vector<long> ids;
    for (std::size_t i = 0; i < c.size(); ++i)
      if ((mask >> i) & 1u) ids.push_back(c.entry(i).set_id);
    const SetCollection sub = c.subfamily(ids);
    consider(best, weak_height(sub), mask);
  }
  OracleReport report;
  report.value = best.value;
  for (std::size_t i = 0; i < c.size(); ++i)
    if ((best.mask >> i) & 1u) report.argmax.push_back(c.entry(i).set_id);
  report.enumerated_count = count;
  return report;
}

Rat verify_sparse_witness(const SetCollection& c, const SparseWitness& w) {
  if (c.empty()) fail(Errc::empty_collection, "witness over empty collection");
  if (w.phi.size() != c.size())
    fail(Errc::validation,
         "witness carries " + std::to_string(w.phi.size()) + " functions for " +
             std::to_string(c.size()) + " sets");
  std::unordered_set<long> seen;
  for (const auto& [id, f] : w.phi) {
    if (!c.has_id(id))
      fail(Errc::validation, "witness names unknown set id " + std::to_string(id));
    if (!seen.insert(id).second)
      fail(Errc::validation, "witness repeats set id " + std::to_string(id));
    if (!f.supported_in(c.by_id(id).set))
      fail(Errc::support_violation,
           "phi for set " + std::to_string(id) + " leaves the set");
  }

  std::vector<Rat> column(c.space()->size(), Rat(0));
  for (const auto& [id, f] : w.phi)
    for (const auto& [pos, value] : f.entries()) column[pos] += value;
  for (std::size_t pos = 0; pos < column.size(); ++pos)
    if (column[pos] > 1)
      fail(Errc::sum_exceeds_one,
           "phi sums to " + rat_to_string(column[pos]) + " > 1 at atom " +
               std::to_string(c.space()->atom(pos).id));

  Rat eta = 0;
  bool first = true;
  for (const auto& [id, f] : w.phi) {
    const Rat ratio = f.integral(*c.space()) / c.by_id(id).mass;
    if (first || ratio < eta) {
      eta = ratio;
      first = false;
    }
  }
  return eta;
}

MSet maximal_levelset(const SetCollection& c, const MSet& B, const Rat& eta) {
  if (B.space() != c.space())
    fail(Errc::space_mismatch, "candidate set lives on another space");
  if (B.empty()) fail(Errc::zero_measure_set, "candidate set is empty");

  MSet out = MSet::empty_set(c.space());
  for (const auto& e : c.entries())
    if (mu(e.set.intersect(B)) > eta * e.mass) out = out.unite(e.set);
  return out;
}

CandidateStrategy CandidateStrategy::atoms() { return CandidateStrategy{}; }

CandidateStrategy CandidateStrategy::subfamily_shadows(std::size_t size_limit) {
  CandidateStrategy s;
  s.kind = Kind::subfamily_shadows;
  s.size_limit = size_limit;
  return s;
}

CandidateStrategy CandidateStrategy::user(std::vector<MSet> sets) {
  CandidateStrategy s;
  s.kind = Kind::user;
  s.user_sets = std::move(sets);
  return s;
}

CandidateStrategy CandidateStrategy::random(std::uint64_t seed,
                                            std::size_t count) {
  CandidateStrategy s;
  s.kind = Kind::random;
  s.seed = seed;
  s.count = count;
  return s;
}

Rat m_eta_lower_bound(const SetCollection& c, const Rat& eta,
                      const CandidateStrategy& strategy) {
  if (eta <= 0 || eta >= 1)
    fail(Errc::bad_parameter, "eta must lie strictly between 0 and 1");
  if (c.empty()) fail(Errc::empty_collection, "lower bound on empty collection");

  std::vector<MSet> candidates;
  switch (strategy.kind) {
    case CandidateStrategy::Kind::atoms: {
      for (std::size_t pos = 0; pos < c.space()->size(); ++pos) {
        MSet b = MSet::empty_set(c.space());
        b.add_pos(pos);
        candidates.push_back(std::move(b));
      }
      break;
    }
    case CandidateStrategy::Kind::subfamily_shadows: {
      check_oracle_size(c);
      const std::uint64_t count = (std::uint64_t{1} << c.size()) - 1;
      for (std::uint64_t mask = 1; mask <= count; ++mask) {
        if (static_cast<std::size_t>(__builtin_popcountll(mask)) >
            strategy.size_limit)
          continue;
        MSet sh = MSet::empty_set(c.space());
        for (std::size_t i = 0; i < c.size(); ++i)
          if ((mask >> i) & 1u) sh = sh.unite(c.entry(i).set);
        candidates.push_back(std::move(sh));
      }
      break;
    }
    case CandidateStrategy::Kind::user: {
      for (const MSet& b : strategy.user_sets) {
        if (b.space() != c.space())
          fail(Errc::space_mismatch, "candidate set lives on another space");
        if (b.empty()) fail(Errc::zero_measure_set, "candidate set is empty");
        candidates.push_back(b);
      }
      break;
    }
    case CandidateStrategy::Kind::random: {
      std::mt19937_64 rng(strategy.seed);
      const std::size_t atoms = c.space()->size();
      for (std::size_t i = 0; i < strategy.count; ++i) {
        MSet b = MSet::empty_set(c.space());
        while (b.empty()) {
          b = MSet::empty_set(c.space());
          std::uint64_t word = 0;
          for (std::size_t pos = 0; pos < atoms; ++pos) {
            if (pos % 64 == 0) word = rng();
            if ((word >> (pos % 64)) & 1u) b.add_pos(pos);
          }
        }
        candidates.push_back(std::move(b));
      }
      break;
    }
  }
  if (candidates.empty())
    fail(Errc::no_candidates, "candidate strategy produced no sets");

  Rat best = 0;
  for (const MSet& b : candidates) {
    const MSet level = maximal_levelset(c, b, eta);
    const Rat ratio = mu(level) / mu(b);
    if (ratio > best) best = ratio;
  }
  return best;
}

}  // namespace carleson
