#include <functional>
#include <utility>
#include <vector>

#include "doctest.h"
#include "fixtures.hpp"

#include "carleson/collection.hpp"
#include "carleson/error.hpp"

using namespace carleson;

namespace {

Errc thrown_code(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected a carleson::Error");
  return Errc::io;
}

}  // namespace

TEST_CASE("collection construction validates entries") {
  auto s = fixtures::unit_space(4);

  CHECK(thrown_code([&] {
          SetCollection(s, {{1, MSet::from_ids(s, {0})},
                            {1, MSet::from_ids(s, {1})}});
        }) == Errc::duplicate_set_id);

  CHECK(thrown_code([&] {
          SetCollection(s, {{1, MSet::empty_set(s)}});
        }) == Errc::zero_measure_set);

  auto other = fixtures::unit_space(4);
  CHECK(thrown_code([&] {
          SetCollection(s, {{1, MSet::from_ids(other, {0})}});
        }) == Errc::space_mismatch);

  // Repeated sets under distinct ids are a legal multiset.
  SetCollection twice(s, {{1, MSet::from_ids(s, {0, 1})},
                          {2, MSet::from_ids(s, {0, 1})}});
  CHECK(twice.size() == 2);
  CHECK(twice.total_mass() == Rat(4));
}

TEST_CASE("lookup and subfamilies") {
  auto c = fixtures::f1();
  CHECK(c.size() == 3);
  CHECK(c.has_id(2));
  CHECK_FALSE(c.has_id(4));
  CHECK(c.by_id(2).mass == Rat(2));
  CHECK(thrown_code([&] { (void)c.by_id(99); }) == Errc::unknown_set_id);
  CHECK(c.ids() == std::vector<long>{1, 2, 3});

  auto sub = c.subfamily_mask(0b101);  // entries 0 and 2 -> ids 1 and 3
  CHECK(sub.ids() == std::vector<long>{1, 3});

  std::vector<long> pick = {3, 1};
  auto sub2 = c.subfamily(pick);
  CHECK(sub2.ids() == std::vector<long>{3, 1});
  CHECK(thrown_code([&] {
          std::vector<long> bad = {7};
          (void)c.subfamily(bad);
        }) == Errc::unknown_set_id);

  CHECK(c.family_shadow() == MSet::full_set(c.space()));
  CHECK(c.total_mass() == Rat(6));
}

TEST_CASE("height profile of the chain fixture") {
  auto c = fixtures::f1();
  auto h = height(c);
  CHECK(h.at_id(0) == 1);
  CHECK(h.at_id(1) == 2);
  CHECK(h.at_id(2) == 2);
  CHECK(h.at_id(3) == 1);
  CHECK(h.max_height() == 2);
  CHECK(h.at_pos(0) == 1);
}

TEST_CASE("average height on known families") {
  CHECK(avg_height(fixtures::f1()) == make_rat(3, 2));
  CHECK(avg_height(fixtures::disjoint(5)) == Rat(1));
  CHECK(avg_height(fixtures::copies(6)) == Rat(6));
  // Line family with k sets at lambda = 2: k*2/(2-1+k).
  CHECK(avg_height(gen_line_family(Rat(2), 5)) == make_rat(10, 6));
  CHECK(avg_height(gen_line_family(Rat(10), 15)) == make_rat(25, 4));
}

TEST_CASE("weak height on known families") {
  CHECK(weak_height(fixtures::f1()) == Rat(1));
  CHECK(weak_height(fixtures::disjoint(5)) == Rat(1));
  CHECK(weak_height(fixtures::copies(6)) == Rat(6));
  // Line family, lambda = 10, 1000 sets: level k=1 covers everything; the
  // best level works out to 9000/1009.
  CHECK(weak_height(gen_line_family(Rat(10), 1000)) == make_rat(9000, 1009));
  // Staircase at lambda = 3 with 8 sets: 8/5.
  CHECK(weak_height(gen_staircase(3, 8)) == make_rat(8, 5));
}

TEST_CASE("height statistics reject empty families") {
  auto s = fixtures::unit_space(2);
  SetCollection empty(s, {});
  CHECK(empty.empty());
  CHECK(thrown_code([&] { (void)height(empty); }) == Errc::empty_collection);
  CHECK(thrown_code([&] { (void)avg_height(empty); }) == Errc::empty_collection);
  CHECK(thrown_code([&] { (void)weak_height(empty); }) == Errc::empty_collection);
}

TEST_CASE("weak height never exceeds average height") {
  for (int i = 0; i < 24; ++i) {
    auto c = generate(fixtures::interval_spec(i));
    CAPTURE(i);
    CHECK(weak_height(c) <= avg_height(c));
    CHECK(weak_height(c) >= Rat(1));
  }
}

TEST_CASE("integral of the height equals the total mass") {
  for (int i = 0; i < 12; ++i) {
    auto c = generate(fixtures::rectangle_spec(i));
    auto h = height(c);
    Rat integral(0);
    for (std::size_t p = 0; p < c.space()->size(); ++p)
      integral += Rat(h.at_pos(p)) * c.space()->weight(p);
    CHECK(integral == c.total_mass());
  }
}

TEST_CASE("height profile validates atom lookups") {
  auto c = fixtures::f1();
  auto h = height(c);
  CHECK_THROWS_AS((void)h.at_id(99), Error);
}
