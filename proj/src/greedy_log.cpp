#include "carleson/greedy_log.hpp"

#include <limits>
#include <utility>

#include "carleson/error.hpp"
#include "greedy_state.hpp"

namespace carleson {
namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

// integral of g_R over the heights in `h`, cutoff at h <= 2 Lambda.
Rat g_integral(const GroundSpace& space, const MSet& set,
               const std::vector<int>& h, const Rat& cutoff) {
  Rat total = 0;
  set.for_each_pos([&](std::size_t pos) {
    if (Rat(h[pos]) <= cutoff) total += space.weight(pos) / h[pos];
  });
  return total;
}

AtomFunction g_function(const GroundSpace& space, const MSet& set,
                        const std::vector<int>& h, const Rat& cutoff) {
  AtomFunction f;
  set.for_each_pos([&](std::size_t pos) {
    if (Rat(h[pos]) <= cutoff) f.push(pos, make_rat(1, h[pos]));
  });
  return f;
}

// Smallest qualifying set_id in the remaining family, or kNone.
std::size_t find_qualifier(const detail::GreedyState& st, const Rat& lambda) {
  const Rat cutoff = 2 * lambda;
  for (std::size_t index : st.order_by_id) {
    if (st.removed[index]) continue;
    const CollectionEntry& e = st.collection.entry(index);
    const Rat integral =
        g_integral(*st.collection.space(), e.set, st.h, cutoff);
    if (integral * (2 * lambda) >= e.mass) return index;
  }
  return kNone;
}

}  // namespace

AtomFunction candidate_g(const SetCollection& c, long set_id) {
  const CollectionEntry& e = c.by_id(set_id);
  const HeightProfile profile = height(c);
  const Rat cutoff = 2 * avg_height(c);
  std::vector<int> h(profile.counts().begin(), profile.counts().end());
  return g_function(*c.space(), e.set, h, cutoff);
}

long select_log(const SetCollection& c) {
  if (c.empty()) fail(Errc::empty_collection, "select_log on empty collection");
  detail::GreedyState st(c);
  const std::size_t index = find_qualifier(st, st.avg());
  if (index == kNone)
    fail(Errc::selection_impossible,
         "no set meets the average-height selection bound");
  return c.entry(index).set_id;
}

LogTrace run_log(const SetCollection& c) {
  if (c.empty()) fail(Errc::empty_collection, "run_log on empty collection");
  detail::GreedyState st(c);
  LogTrace trace;
  trace.steps.reserve(c.size());
  Rat a_value = 1;
  while (st.remaining > 0) {
    const Rat lambda = st.avg();
    if (lambda > a_value) a_value = lambda;
    const std::size_t index = find_qualifier(st, lambda);
    if (index == kNone)
      fail(Errc::selection_impossible,
           "no set meets the average-height selection bound");
    const CollectionEntry& e = st.collection.entry(index);
    trace.steps.push_back(LogStep{
        e.set_id, lambda,
        g_function(*c.space(), e.set, st.h, 2 * lambda)});
    st.remove_entry(index);
  }
  trace.A = std::move(a_value);
  return trace;
}

Rat witness_normalizer(const LogTrace& t, const SetCollection& c) {
  std::vector<Rat> column(c.space()->size(), Rat(0));
  for (const LogStep& step : t.steps)
    for (const auto& [pos, value] : step.f.entries()) column[pos] += value;
  Rat s = 0;
  for (const Rat& v : column)
    if (v > s) s = v;
  if (s == 0)
    fail(Errc::validation, "trace carries no mass; cannot normalize");
  return s;
}

SparseWitness normalize_witness(const LogTrace& t, const SetCollection& c) {
  const Rat s = witness_normalizer(t, c);
  const Rat inv = Rat(1) / s;

  std::vector<std::pair<long, AtomFunction>> by_id;
  by_id.reserve(t.steps.size());
  for (const LogStep& step : t.steps)
    by_id.emplace_back(step.set_id, step.f.scaled(inv));

  SparseWitness w;
  w.phi.reserve(by_id.size());
  // Collection entry order keeps serialization stable against the input file.
  for (const auto& e : c.entries()) {
    for (auto& [id, f] : by_id) {
      if (id == e.set_id) {
        w.phi.emplace_back(id, std::move(f));
        break;
      }
    }
  }
  if (w.phi.size() != c.size())
    fail(Errc::validation, "trace does not cover the collection");

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

}  // namespace carleson
