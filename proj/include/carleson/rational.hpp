#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace carleson {

// All scalar quantities (weights, masses, heights, thresholds, eta, gamma,
// certificates) are exact rationals. GMP keeps them canonical: gcd(p,q) = 1,
// q > 0.
using Rat = mpq_class;

// Canonicalized p/q. Throws on q == 0.
Rat make_rat(long num, long den = 1);

// Accepts "p" or "p/q" in base 10 (optional leading '-').
// Throws Error{Errc::parse} on anything else, including q == 0.
Rat rat_from_string(const std::string& text);

// Canonical "p" or "p/q" rendering (GMP's own format).
std::string rat_to_string(const Rat& value);

// Non-authoritative decimal rendering for report convenience fields.
double rat_to_double(const Rat& value);

// Largest integer n with n <= value.
long rat_floor(const Rat& value);

// H_n = 1 + 1/2 + ... + 1/n, exact. H_0 = 0.
Rat harmonic_number(long n);

// 2^exp as an exact rational; exp may be negative.
Rat pow2_rat(long exp);

}  // namespace carleson
