#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "carleson/collection.hpp"

namespace carleson::detail {

// Decremental bookkeeping shared by both greedy loops: per-atom heights of
// the remaining subfamily plus its total mass and shadow mass, updated in
// O(|R|) per removal instead of recounting.
struct GreedyState {
  const SetCollection& collection;
  std::vector<int> h;                     // height of the remaining family
  std::vector<char> removed;              // per entry index
  std::vector<std::size_t> order_by_id;   // entry indices, ascending set_id
  Rat total_mass;                         // sum of mu(R) over remaining
  Rat shadow_mass;                        // mu(shadow of remaining)
  std::size_t remaining;

  explicit GreedyState(const SetCollection& c)
      : collection(c),
        h(c.space()->size(), 0),
        removed(c.size(), 0),
        total_mass(0),
        shadow_mass(0),
        remaining(c.size()) {
    for (const auto& e : c.entries()) {
      total_mass += e.mass;
      e.set.for_each_pos([&](std::size_t pos) {
        if (h[pos]++ == 0) shadow_mass += c.space()->weight(pos);
      });
    }
    order_by_id.resize(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) order_by_id[i] = i;
    std::sort(order_by_id.begin(), order_by_id.end(),
              [&](std::size_t a, std::size_t b) {
                return c.entry(a).set_id < c.entry(b).set_id;
              });
  }

  void remove_entry(std::size_t index) {
    const CollectionEntry& e = collection.entry(index);
    e.set.for_each_pos([&](std::size_t pos) {
      if (--h[pos] == 0) shadow_mass -= collection.space()->weight(pos);
    });
    total_mass -= e.mass;
    removed[index] = 1;
    --remaining;
  }

  Rat avg() const { return total_mass / shadow_mass; }

  // Weak height of the remaining family: max_k k * mu({h >= k}) / mu(shadow).
  Rat weak() const {
    int hmax = 0;
    for (int v : h) hmax = std::max(hmax, v);
    std::vector<Rat> level_mass(static_cast<std::size_t>(hmax) + 1, Rat(0));
    for (std::size_t pos = 0; pos < h.size(); ++pos)
      if (h[pos] > 0)
        level_mass[static_cast<std::size_t>(h[pos])] +=
            collection.space()->weight(pos);
    Rat suffix = 0;
    Rat best = 0;
    for (int k = hmax; k >= 1; --k) {
      suffix += level_mass[static_cast<std::size_t>(k)];
      Rat candidate = Rat(k) * suffix;
      if (candidate > best) best = candidate;
    }
    return best / shadow_mass;
  }

  // Sorted distinct heights realized on the remaining shadow.
  std::vector<int> distinct_heights() const {
    std::vector<int> values;
    for (int v : h)
      if (v > 0) values.push_back(v);
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    return values;
  }
};

}  // namespace carleson::detail
