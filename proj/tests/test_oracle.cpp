#include <functional>
#include <vector>

#include "doctest.h"
#include "fixtures.hpp"

#include "carleson/error.hpp"
#include "carleson/greedy_opt.hpp"
#include "carleson/oracle.hpp"

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

TEST_CASE("exact oracle on the chain fixture") {
  auto c = fixtures::f1();
  auto r = carleson_exact(c);
  CHECK(r.value == make_rat(3, 2));
  CHECK(r.argmax == std::vector<long>{1, 2, 3});
  CHECK(r.enumerated_count == 7);

  auto w = weak_carleson_exact(c);
  CHECK(w.value == Rat(1));
  CHECK(w.argmax == std::vector<long>{1});  // smallest mask among the ties
  CHECK(w.enumerated_count == 7);
}

TEST_CASE("exact oracle on degenerate families") {
  auto copies = fixtures::copies(6);
  auto r = carleson_exact(copies);
  CHECK(r.value == Rat(6));
  CHECK(r.argmax == std::vector<long>{1, 2, 3, 4, 5, 6});
  CHECK(weak_carleson_exact(copies).value == Rat(6));

  auto d = fixtures::disjoint(5);
  auto rd = carleson_exact(d);
  CHECK(rd.value == Rat(1));
  CHECK(rd.argmax == std::vector<long>{1});  // every subfamily ties at 1
  CHECK(weak_carleson_exact(d).value == Rat(1));

  auto line = gen_line_family(Rat(2), 5);
  CHECK(carleson_exact(line).value == make_rat(5, 3));
  CHECK(carleson_exact(gen_line_family(Rat(10), 15)).value == make_rat(25, 4));
}

TEST_CASE("oracle guards size and emptiness") {
  CHECK(thrown_code([] { (void)carleson_exact(fixtures::copies(21)); }) ==
        Errc::too_large);
  CHECK(thrown_code([] { (void)weak_carleson_exact(fixtures::copies(21)); }) ==
        Errc::too_large);
  auto s = fixtures::unit_space(2);
  SetCollection empty(s, {});
  CHECK(thrown_code([&] { (void)carleson_exact(empty); }) ==
        Errc::empty_collection);
  // Exactly 20 sets is still allowed.
  CHECK_NOTHROW((void)carleson_exact(fixtures::disjoint(20), 2));
}

TEST_CASE("incremental kernels agree with the serial references") {
  for (int i = 0; i < 30; ++i) {
    auto spec = (i % 2 == 0) ? fixtures::interval_spec(17 + i)
                             : fixtures::rectangle_spec(17 + i);
    auto c = generate(spec);
    CAPTURE(i);

    auto ref = carleson_exact_ref(c);
    for (int jobs : {1, 4}) {
      auto got = carleson_exact(c, jobs);
      CHECK(got.value == ref.value);
      CHECK(got.argmax == ref.argmax);
      CHECK(got.enumerated_count == ref.enumerated_count);
    }

    auto wref = weak_carleson_exact_ref(c);
    for (int jobs : {1, 4}) {
      auto got = weak_carleson_exact(c, jobs);
      CHECK(got.value == wref.value);
      CHECK(got.argmax == wref.argmax);
    }
  }
}

TEST_CASE("witness verification accepts sound witnesses and rejects broken ones") {
  auto c = fixtures::f1();
  auto t = run_opt(c, ThresholdMode::adaptive(make_rat(1, 2)));
  auto w = witness_from_trace(t, c);
  CHECK(verify_sparse_witness(c, w) == make_rat(1, 2));

  // All-zero functions are a legal witness of eta = 0.
  SparseWitness zero;
  for (long id : {1, 2, 3}) zero.phi.emplace_back(id, AtomFunction());
  zero.achieved_eta = Rat(0);
  CHECK(verify_sparse_witness(c, zero) == Rat(0));

  // Missing a set entirely.
  SparseWitness missing = w;
  missing.phi.pop_back();
  CHECK(thrown_code([&] { (void)verify_sparse_witness(c, missing); }) ==
        Errc::validation);

  // Duplicate entry for one set.
  SparseWitness dup = w;
  dup.phi.push_back(dup.phi.front());
  CHECK(thrown_code([&] { (void)verify_sparse_witness(c, dup); }) ==
        Errc::validation);

  // Mass outside the owning set.
  SparseWitness outside = w;
  auto bad = AtomFunction::from_entries({{3, Rat(1)}});  // atom 3 not in R1
  outside.phi[0].second = bad;
  CHECK(thrown_code([&] { (void)verify_sparse_witness(c, outside); }) ==
        Errc::support_violation);

  // Atomwise sum above one.
  auto copies = fixtures::copies(2);
  SparseWitness heavy;
  auto three_quarters =
      AtomFunction::from_entries({{0, make_rat(3, 4)}, {1, make_rat(3, 4)},
                                  {2, make_rat(3, 4)}});
  heavy.phi.emplace_back(1, three_quarters);
  heavy.phi.emplace_back(2, three_quarters);
  heavy.achieved_eta = Rat(0);
  CHECK(thrown_code([&] { (void)verify_sparse_witness(copies, heavy); }) ==
        Errc::sum_exceeds_one);
}

TEST_CASE("maximal_levelset computes the strict level set") {
  auto c = fixtures::f1();
  auto b = MSet::from_ids(c.space(), {1});  // the atom shared by R1 and R2
  // mu(R cap B)/mu(R) = 1/2 for R1 and R2, 0 for R3.
  CHECK(maximal_levelset(c, b, make_rat(1, 3)) ==
        MSet::from_ids(c.space(), {0, 1, 2}));
  // Strict inequality: eta = 1/2 excludes them.
  CHECK(maximal_levelset(c, b, make_rat(1, 2)).empty());
  // Any eta < 1 with B = the shadow recovers the shadow.
  CHECK(maximal_levelset(c, c.family_shadow(), make_rat(9, 10)) ==
        c.family_shadow());

  auto other = fixtures::unit_space(4);
  CHECK(thrown_code([&] {
          (void)maximal_levelset(c, MSet::from_ids(other, {0}), make_rat(1, 2));
        }) == Errc::space_mismatch);
  CHECK(thrown_code([&] {
          (void)maximal_levelset(c, MSet::empty_set(c.space()), make_rat(1, 2));
        }) == Errc::zero_measure_set);
}

TEST_CASE("restricted weak-type lower bound via candidate strategies") {
  auto c = fixtures::f1();

  // Atoms strategy at eta = 1/3: B = {atom 1} covers R1 and R2, whose union
  // with their level set has measure 3, so the ratio is 3.
  CHECK(m_eta_lower_bound(c, make_rat(1, 3), CandidateStrategy::atoms()) ==
        Rat(3));

  // Singleton-subfamily shadows at eta = 1/3: best is B = sh(R2) = {1,2}
  // whose level set is everything, ratio 4/2 = 2.
  CHECK(m_eta_lower_bound(c, make_rat(1, 3),
                          CandidateStrategy::subfamily_shadows(1)) == Rat(2));

  // User candidates.
  std::vector<MSet> user = {c.family_shadow()};
  CHECK(m_eta_lower_bound(c, make_rat(1, 2), CandidateStrategy::user(user)) ==
        Rat(1));

  // Random candidates are deterministic under a fixed seed.
  auto r1 = m_eta_lower_bound(c, make_rat(1, 3), CandidateStrategy::random(7, 32));
  auto r2 = m_eta_lower_bound(c, make_rat(1, 3), CandidateStrategy::random(7, 32));
  CHECK(r1 == r2);
  CHECK(r1 >= Rat(1));

  // Disjoint singletons: every candidate atom gives ratio 1.
  CHECK(m_eta_lower_bound(fixtures::disjoint(4), make_rat(1, 2),
                          CandidateStrategy::atoms()) == Rat(1));

  CHECK(thrown_code([&] {
          (void)m_eta_lower_bound(c, make_rat(1, 3), CandidateStrategy::user({}));
        }) == Errc::no_candidates);
  CHECK(thrown_code([&] {
          (void)m_eta_lower_bound(c, Rat(1), CandidateStrategy::atoms());
        }) == Errc::bad_parameter);
}

TEST_CASE("line family separates the weak-type constant from the Carleson constant") {
  // With 90 sets at lambda = 10, the base atom as candidate B certifies
  // M_{1/2} >= 1 + 90/9 = 11, while the Carleson constant stays at
  // 90*10/(9+90) = 100/11 < 10. The weak-type constant is NOT controlled
  // by the Carleson constant — the reason understated-M runs must fail.
  auto line = gen_line_family(Rat(10), 90);
  auto lower = m_eta_lower_bound(line, make_rat(1, 2), CandidateStrategy::atoms());
  CHECK(lower == Rat(11));

  // Closed form for the full line family (90 sets exceeds the oracle guard):
  // every k-set subfamily has ratio k*10/(9+k), increasing in k.
  Rat car = avg_height(line);
  CHECK(car == make_rat(100, 11));
  CHECK(lower > car);
}
