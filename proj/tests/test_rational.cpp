#include "doctest.h"

#include "carleson/error.hpp"
#include "carleson/rational.hpp"

using namespace carleson;

TEST_CASE("make_rat canonicalizes and validates") {
  CHECK(make_rat(6, 4) == make_rat(3, 2));
  CHECK(make_rat(-6, 4) == make_rat(-3, 2));
  CHECK(make_rat(6, -4) == make_rat(-3, 2));
  CHECK(make_rat(0, 7) == Rat(0));
  CHECK(make_rat(5) == Rat(5));
  CHECK_THROWS_AS(make_rat(1, 0), Error);
}

TEST_CASE("rat_from_string accepts p and p/q only") {
  CHECK(rat_from_string("3/2") == make_rat(3, 2));
  CHECK(rat_from_string("-7") == Rat(-7));
  CHECK(rat_from_string("10") == Rat(10));
  CHECK(rat_from_string("-1/2") == make_rat(-1, 2));
  CHECK(rat_from_string("2/4") == make_rat(1, 2));  // canonicalized on entry

  for (const char* bad : {"", "1.5", "3/", "/2", "a", "1/0", "1 / 2", "+3",
                          "0x10", "2/-4", "--1", "1/2/3"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS((void)rat_from_string(bad), Error);
    try {
      (void)rat_from_string(bad);
    } catch (const Error& e) {
      CHECK(e.code() == Errc::parse);
    }
  }
}

TEST_CASE("rat_to_string renders canonical form") {
  CHECK(rat_to_string(make_rat(3, 2)) == "3/2");
  CHECK(rat_to_string(Rat(5)) == "5");
  CHECK(rat_to_string(make_rat(-1, 3)) == "-1/3");
  CHECK(rat_to_string(Rat(0)) == "0");
  CHECK(rat_to_string(rat_from_string("2/4")) == "1/2");
}

TEST_CASE("rat_to_double is a plain conversion") {
  CHECK(rat_to_double(make_rat(3, 2)) == doctest::Approx(1.5));
  CHECK(rat_to_double(Rat(0)) == 0.0);
}

TEST_CASE("rat_floor matches mathematical floor") {
  CHECK(rat_floor(make_rat(3, 2)) == 1);
  CHECK(rat_floor(make_rat(-3, 2)) == -2);
  CHECK(rat_floor(Rat(4)) == 4);
  CHECK(rat_floor(Rat(0)) == 0);
  CHECK(rat_floor(make_rat(25, 4)) == 6);
}

TEST_CASE("harmonic numbers are exact") {
  CHECK(harmonic_number(0) == Rat(0));
  CHECK(harmonic_number(1) == Rat(1));
  CHECK(harmonic_number(2) == make_rat(3, 2));
  CHECK(harmonic_number(3) == make_rat(11, 6));
  CHECK(harmonic_number(5) == make_rat(137, 60));
}

TEST_CASE("pow2_rat handles both signs of the exponent") {
  CHECK(pow2_rat(0) == Rat(1));
  CHECK(pow2_rat(3) == Rat(8));
  CHECK(pow2_rat(-2) == make_rat(1, 4));
  CHECK(pow2_rat(-16) == make_rat(1, 65536));
}

TEST_CASE("error codes map to their wire names") {
  CHECK(std::string(errc_name(Errc::parse)) == "ParseError");
  CHECK(std::string(errc_name(Errc::validation)) == "ValidationError");
  CHECK(std::string(errc_name(Errc::too_large)) == "TooLarge");
  CHECK(std::string(errc_name(Errc::grid_too_large)) == "GridTooLarge");
  CHECK(std::string(errc_name(Errc::no_qualifying_set)) == "NoQualifyingSet");
  CHECK(std::string(errc_name(Errc::duplicate_atom_id)) == "DuplicateAtomId");
  CHECK(std::string(errc_name(Errc::sum_exceeds_one)) == "SumExceedsOne");
  CHECK(std::string(errc_name(Errc::support_violation)) == "SupportViolation");
  CHECK(std::string(errc_name(Errc::bad_order)) == "BadOrder");
  CHECK(std::string(errc_name(Errc::gamma_out_of_range)) == "GammaOutOfRange");
  CHECK(std::string(errc_name(Errc::bucket_limit_exceeded)) ==
        "BucketLimitExceeded");
  CHECK(std::string(errc_name(Errc::no_candidates)) == "NoCandidates");
}
