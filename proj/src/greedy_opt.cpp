#include "carleson/greedy_opt.hpp"

#include <limits>
#include <utility>

#include "carleson/error.hpp"
#include "greedy_state.hpp"

namespace carleson {
namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

void check_mode(const ThresholdMode& mode) {
  if (mode.eta <= 0 || mode.eta >= 1)
    fail(Errc::bad_parameter, "eta must lie strictly between 0 and 1");
  if (mode.kind == ThresholdMode::Kind::fixed && mode.M < 1)
    fail(Errc::bad_parameter, "M must be at least 1");
}

Rat good_mass(const GroundSpace& space, const MSet& set,
              const std::vector<int>& h, const Rat& threshold) {
  Rat total = 0;
  set.for_each_pos([&](std::size_t pos) {
    if (Rat(h[pos]) <= threshold) total += space.weight(pos);
  });
  return total;
}

MSet good_set_from_heights(SpacePtr space, const MSet& set,
                           const std::vector<int>& h, const Rat& threshold) {
  MSet out = MSet::empty_set(std::move(space));
  set.for_each_pos([&](std::size_t pos) {
    if (Rat(h[pos]) <= threshold) out.add_pos(pos);
  });
  return out;
}

// Smallest qualifying set_id at the given threshold, or kNone.
std::size_t find_qualifier(const detail::GreedyState& st, const Rat& threshold,
                           const Rat& eta) {
  for (std::size_t index : st.order_by_id) {
    if (st.removed[index]) continue;
    const CollectionEntry& e = st.collection.entry(index);
    if (good_mass(*st.collection.space(), e.set, st.h, threshold) >=
        (1 - eta) * e.mass)
      return index;
  }
  return kNone;
}

// One selection against the current state. Returns (entry index, threshold).
std::pair<std::size_t, Rat> select_against(const detail::GreedyState& st,
                                           const ThresholdMode& mode) {
  if (mode.kind == ThresholdMode::Kind::fixed) {
    const Rat threshold = 2 * mode.M * st.weak();
    const std::size_t index = find_qualifier(st, threshold, mode.eta);
    if (index == kNone)
      fail(Errc::no_qualifying_set,
           "no set keeps a (1-eta) fraction below 2*M*weak_height; "
           "M understates the restricted weak-type constant here");
    return {index, threshold};
  }
  for (int level : st.distinct_heights()) {
    const Rat threshold(level);
    const std::size_t index = find_qualifier(st, threshold, mode.eta);
    if (index != kNone) return {index, threshold};
  }
  // Unreachable: the maximum height qualifies every remaining set.
  fail(Errc::selection_impossible, "adaptive threshold scan found no set");
}

}  // namespace

ThresholdMode ThresholdMode::fixed_mode(Rat m, Rat eta) {
  ThresholdMode mode;
  mode.kind = Kind::fixed;
  mode.M = std::move(m);
  mode.eta = std::move(eta);
  check_mode(mode);
  return mode;
}

ThresholdMode ThresholdMode::adaptive(Rat eta) {
  ThresholdMode mode;
  mode.kind = Kind::adaptive;
  mode.eta = std::move(eta);
  check_mode(mode);
  return mode;
}

MSet good_set(const SetCollection& c, long set_id, const Rat& threshold) {
  const CollectionEntry& e = c.by_id(set_id);
  const HeightProfile profile = height(c);
  std::vector<int> h(profile.counts().begin(), profile.counts().end());
  return good_set_from_heights(c.space(), e.set, h, threshold);
}

std::pair<long, Rat> select_opt(const SetCollection& c,
                                const ThresholdMode& mode) {
  check_mode(mode);
  if (c.empty()) fail(Errc::empty_collection, "select_opt on empty collection");
  detail::GreedyState st(c);
  auto [index, threshold] = select_against(st, mode);
  return {c.entry(index).set_id, std::move(threshold)};
}

OptTrace run_opt(const SetCollection& c, const ThresholdMode& mode) {
  check_mode(mode);
  if (c.empty()) fail(Errc::empty_collection, "run_opt on empty collection");
  detail::GreedyState st(c);
  OptTrace trace;
  trace.steps.reserve(c.size());
  Rat a_value = 1;
  while (st.remaining > 0) {
    const Rat lambda_weak = st.weak();
    if (lambda_weak > a_value) a_value = lambda_weak;
    auto [index, threshold] = select_against(st, mode);
    const CollectionEntry& e = st.collection.entry(index);
    trace.steps.push_back(OptStep{
        e.set_id, threshold,
        good_set_from_heights(c.space(), e.set, st.h, threshold),
        lambda_weak});
    st.remove_entry(index);
  }
  trace.A = std::move(a_value);
  return trace;
}

SparseWitness witness_from_trace(const OptTrace& t, const SetCollection& c) {
  if (t.steps.empty()) fail(Errc::validation, "empty trace");
  Rat lambda_star = 1;
  for (const OptStep& step : t.steps)
    if (step.threshold > lambda_star) lambda_star = step.threshold;
  const Rat inv = Rat(1) / lambda_star;

  SparseWitness w;
  w.phi.reserve(t.steps.size());
  // Collection entry order keeps serialization stable against the input file.
  for (const auto& e : c.entries()) {
    const OptStep* found = nullptr;
    for (const OptStep& step : t.steps) {
      if (step.set_id == e.set_id) {
        found = &step;
        break;
      }
    }
    if (!found) fail(Errc::validation, "trace does not cover the collection");
    AtomFunction f;
    found->e_set.for_each_pos([&](std::size_t pos) { f.push(pos, inv); });
    w.phi.emplace_back(e.set_id, std::move(f));
  }

  Rat eta = 0;
  bool first = true;
  for (const auto& [id, f] : w.phi) {
    const Rat ratio = f.integral(*c.space()) / c.by_id(id).mass;
    if (first || ratio < eta) {
      eta = ratio;
      first = false;
    }
  }
  w.achieved_eta = std::move(eta);
  return w;
}

Rat carleson_certificate(const OptTrace& t, const Rat& eta) {
  if (eta <= 0 || eta >= 1)
    fail(Errc::bad_parameter, "eta must lie strictly between 0 and 1");
  if (t.steps.empty()) fail(Errc::validation, "empty trace");
  Rat max_threshold = t.steps.front().threshold;
  for (const OptStep& step : t.steps)
    if (step.threshold > max_threshold) max_threshold = step.threshold;
  return max_threshold / (1 - eta);
}

}  // namespace carleson
