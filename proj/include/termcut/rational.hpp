#pragma once

#include <gmpxx.h>

#include <string>

namespace termcut {

// All arithmetic in the library is exact; Rat is the only numeric type
// that ever touches a cut value, length, or LP coefficient.
using Rat = mpq_class;

// Parses "p", "-p", "p/q" (decimal digits, q > 0 after sign normalization).
// Throws InvalidInput on anything else, including "1/0".
Rat parse_rational(const std::string& text);

// Like parse_rational but additionally requires value > 0 (or >= 0).
Rat parse_positive_rational(const std::string& text);
Rat parse_nonnegative_rational(const std::string& text);

// Canonical text form: "p" when the denominator is 1, else "p/q".
std::string rat_str(const Rat& value);

// Decimal rendering for humans only; never used in comparisons.
double rat_approx(const Rat& value);

}  // namespace termcut
