#pragma once

#include <gmpxx.h>

#include <string>

#include "ellh/errors.hpp"

namespace ellh {

// Exact arithmetic substrate. mpq_class keeps values in lowest terms with a
// positive denominator, which is exactly the representation contract the
// rest of the library relies on.
using Int = mpz_class;
using Rat = mpq_class;

// Parses "n" or "n/d" (optional sign, arbitrary size). Throws Error on
// malformed input or zero denominator.
Rat rat_from_string(const std::string& s);

// Inverse of rat_from_string: "n" when the denominator is 1, else "n/d".
std::string rat_to_string(const Rat& q);

bool rat_is_integer(const Rat& q);

// p-adic valuation of a nonzero integer/rational.
long valuation(const Int& z, unsigned long p);
long valuation(const Rat& q, unsigned long p);

// Natural log of |z| resp. |q|, correct for values far beyond double range.
double log_abs(const Int& z);
double log_abs(const Rat& q);

// max(|num|, |den|) of a rational in lowest terms.
Int naive_height(const Rat& q);

Int floor_to_int(const Rat& q);
Int ceil_to_int(const Rat& q);

} // namespace ellh
