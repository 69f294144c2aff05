#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace qset {

// Arbitrary-precision natural number (mpz used non-negative throughout).
using Nat = mpz_class;

// Exact rational coefficient, always kept in canonical form.
using Rat = mpq_class;

// 2^e for machine-word exponents; covers every serial exponent up to rank 5.
Nat pow2(unsigned long e);

// Parses "p", "-p", or "p/q" (q > 0 after canonicalization).
// Throws SyntaxError on malformed input or zero denominator.
Rat parse_rat(std::string_view text);

// Canonical "p" / "p/q" rendering.
std::string rat_str(const Rat& q);

std::string nat_str(const Nat& n);

// Parses a decimal natural. Throws SyntaxError on malformed input.
Nat parse_nat(std::string_view text);

} // namespace qset
