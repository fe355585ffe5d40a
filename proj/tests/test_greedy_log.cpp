#include <vector>

#include "doctest.h"
#include "fixtures.hpp"

#include "carleson/greedy_log.hpp"
#include "carleson/oracle.hpp"

using namespace carleson;

TEST_CASE("candidate_g restricts to low-height atoms and divides by height") {
  auto c = fixtures::f1();
  // Full family: h = (1,2,2,1), Lambda = 3/2, cutoff 2*Lambda = 3 keeps all.
  auto g = candidate_g(c, 1);
  CHECK(g.value_at(0) == Rat(1));
  CHECK(g.value_at(1) == make_rat(1, 2));
  CHECK(g.value_at(2) == Rat(0));
  CHECK(g.value_at(3) == Rat(0));
  CHECK(g.integral(*c.space()) == make_rat(3, 2));

  // Five copies: h = 5 everywhere, Lambda = 5, cutoff 10 keeps everything,
  // so g = (1/5) * 1_S.
  auto copies = fixtures::copies(5);
  auto gc = candidate_g(copies, 3);
  for (std::size_t p = 0; p < copies.space()->size(); ++p)
    CHECK(gc.value_at(p) == make_rat(1, 5));
}

TEST_CASE("candidate_g drops atoms above the cutoff") {
  // Line family, lambda = 2, 8 sets: base atom has height 8 while
  // Lambda = 16/9 < 4, so the base atom is cut and only the tail remains.
  auto line = gen_line_family(Rat(2), 8);
  auto g = candidate_g(line, 1);
  auto base_pos = line.space()->position_of_checked(0);
  CHECK(g.value_at(base_pos) == Rat(0));
  auto tail_pos = line.space()->position_of_checked(1);
  CHECK(g.value_at(tail_pos) == Rat(1));
}

TEST_CASE("select_log prefers the smallest qualifying id") {
  CHECK(select_log(fixtures::f1()) == 1);
  CHECK(select_log(fixtures::copies(4)) == 1);   // all qualify equally
  CHECK(select_log(fixtures::disjoint(3)) == 1);
}

TEST_CASE("run_log on the chain fixture reproduces the worked trace") {
  auto c = fixtures::f1();
  auto t = run_log(c);

  REQUIRE(t.steps.size() == 3);
  CHECK(t.A == make_rat(3, 2));
  CHECK(t.steps[0].set_id == 1);
  CHECK(t.steps[1].set_id == 2);
  CHECK(t.steps[2].set_id == 3);
  CHECK(t.steps[0].lambda == make_rat(3, 2));
  CHECK(t.steps[1].lambda == make_rat(4, 3));
  CHECK(t.steps[2].lambda == Rat(1));

  // Step 1 keeps both atoms of R1 at g = (1, 1/2).
  CHECK(t.steps[0].f.value_at(0) == Rat(1));
  CHECK(t.steps[0].f.value_at(1) == make_rat(1, 2));
  // Step 2 sees h = (0,1,2,1): g on R2 = (1, 1/2) at atoms 1,2.
  CHECK(t.steps[1].f.value_at(1) == Rat(1));
  CHECK(t.steps[1].f.value_at(2) == make_rat(1, 2));
  // Step 3 sees h = 1 on R3.
  CHECK(t.steps[2].f.value_at(2) == Rat(1));
  CHECK(t.steps[2].f.value_at(3) == Rat(1));

  // Column sums: (1, 3/2, 3/2, 1), so S = 3/2.
  CHECK(witness_normalizer(t, c) == make_rat(3, 2));

  auto w = normalize_witness(t, c);
  CHECK(w.achieved_eta == make_rat(1, 2));
  REQUIRE(w.phi.size() == 3);
  // Entries arrive in collection entry order.
  CHECK(w.phi[0].first == 1);
  CHECK(w.phi[1].first == 2);
  CHECK(w.phi[2].first == 3);
  // Ratios integral(phi_R)/mu(R): (1/2, 1/2, 2/3).
  CHECK(w.phi[0].second.integral(*c.space()) == Rat(1));
  CHECK(w.phi[1].second.integral(*c.space()) == Rat(1));
  CHECK(w.phi[2].second.integral(*c.space()) == make_rat(4, 3));
  CHECK(verify_sparse_witness(c, w) == make_rat(1, 2));
}

TEST_CASE("run_log on disjoint singletons is the identity witness") {
  auto c = fixtures::disjoint(4);
  auto t = run_log(c);
  CHECK(t.A == Rat(1));
  CHECK(witness_normalizer(t, c) == Rat(1));
  auto w = normalize_witness(t, c);
  CHECK(w.achieved_eta == Rat(1));
}

TEST_CASE("run_log on N copies yields the harmonic normalizer") {
  const long n = 5;
  auto c = fixtures::copies(n);
  auto t = run_log(c);
  REQUIRE(t.steps.size() == static_cast<std::size_t>(n));
  CHECK(t.A == Rat(n));
  // Step k removes one copy from a family of n-k+1 copies; g = 1/(n-k+1).
  for (long k = 0; k < n; ++k) {
    CHECK(t.steps[static_cast<std::size_t>(k)].lambda == Rat(n - k));
    CHECK(t.steps[static_cast<std::size_t>(k)].f.value_at(0) ==
          make_rat(1, n - k));
  }
  CHECK(witness_normalizer(t, c) == harmonic_number(n));
  auto w = normalize_witness(t, c);
  // eta = 1/(n * H_n) = 12/137 for n = 5.
  CHECK(w.achieved_eta == make_rat(12, 137));
}

TEST_CASE("log greedy invariants across the dyadic corpus sample") {
  for (int i = 0; i < 40; ++i) {
    auto spec = (i % 2 == 0) ? fixtures::interval_spec(i / 2)
                             : fixtures::rectangle_spec(i / 2);
    auto c = generate(spec);
    CAPTURE(i);

    auto t = run_log(c);
    REQUIRE(t.steps.size() == c.size());

    auto car = carleson_exact(c).value;
    auto s = witness_normalizer(t, c);

    CHECK(t.A <= car);
    CHECK(car <= Rat(2) * t.A * s);
    CHECK(s <= harmonic_number(rat_floor(Rat(2) * t.A)));

    auto w = normalize_witness(t, c);
    CHECK(verify_sparse_witness(c, w) == w.achieved_eta);
    CHECK(w.achieved_eta * car <= Rat(1));
    CHECK(w.achieved_eta >= Rat(1) / (Rat(2) * t.A * s));
  }
}
