#include "carleson/rational.hpp"

#include <cctype>

#include "carleson/error.hpp"

namespace carleson {

Rat make_rat(long num, long den) {
  if (den == 0) fail(Errc::bad_parameter, "rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Rat rat_from_string(const std::string& text) {
  // Strict shape check first; mpq_set_str is laxer than we want.
  const auto digits_only = [](const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  std::string body = text;
  if (!body.empty() && body[0] == '-') body.erase(0, 1);
  const auto slash = body.find('/');
  bool ok;
  if (slash == std::string::npos) {
    ok = digits_only(body);
  } else {
    ok = digits_only(body.substr(0, slash)) && digits_only(body.substr(slash + 1));
  }
  if (!ok) fail(Errc::parse, "malformed rational '" + text + "'");

  Rat r;
  if (mpq_set_str(r.get_mpq_t(), text.c_str(), 10) != 0)
    fail(Errc::parse, "malformed rational '" + text + "'");
  if (r.get_den() == 0) fail(Errc::parse, "zero denominator in '" + text + "'");
  r.canonicalize();
  return r;
}

std::string rat_to_string(const Rat& value) { return value.get_str(); }

double rat_to_double(const Rat& value) { return value.get_d(); }

long rat_floor(const Rat& value) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  if (!q.fits_slong_p()) fail(Errc::bad_parameter, "floor out of range");
  return q.get_si();
}

Rat harmonic_number(long n) {
  Rat h = 0;
  for (long k = 1; k <= n; ++k) h += make_rat(1, k);
  return h;
}

Rat pow2_rat(long exp) {
  Rat r = 1;
  if (exp >= 0) {
    mpz_mul_2exp(r.get_num_mpz_t(), r.get_num_mpz_t(), static_cast<unsigned long>(exp));
  } else {
    mpz_mul_2exp(r.get_den_mpz_t(), r.get_den_mpz_t(), static_cast<unsigned long>(-exp));
  }
  r.canonicalize();
  return r;
}

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::duplicate_atom_id: return "DuplicateAtomId";
    case Errc::nonpositive_weight: return "NonpositiveWeight";
    case Errc::zero_measure_set: return "ZeroMeasureSet";
    case Errc::space_mismatch: return "SpaceMismatch";
    case Errc::unknown_atom_id: return "UnknownAtomId";
    case Errc::duplicate_set_id: return "DuplicateSetId";
    case Errc::unknown_set_id: return "UnknownSetId";
    case Errc::empty_collection: return "EmptyCollection";
    case Errc::selection_impossible: return "SelectionImpossible";
    case Errc::no_qualifying_set: return "NoQualifyingSet";
    case Errc::bucket_limit_exceeded: return "BucketLimitExceeded";
    case Errc::bad_order: return "BadOrder";
    case Errc::gamma_out_of_range: return "GammaOutOfRange";
    case Errc::too_large: return "TooLarge";
    case Errc::grid_too_large: return "GridTooLarge";
    case Errc::sum_exceeds_one: return "SumExceedsOne";
    case Errc::support_violation: return "SupportViolation";
    case Errc::no_candidates: return "NoCandidates";
    case Errc::bad_parameter: return "BadParameter";
    case Errc::parse: return "ParseError";
    case Errc::validation: return "ValidationError";
    case Errc::io: return "IoError";
  }
  return "UnknownError";
}

}  // namespace carleson
