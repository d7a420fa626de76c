#pragma once

#include <string>

#include <gmpxx.h>

namespace eo {

// Exact arbitrary-precision integer. Counts (orientations, spanning trees)
// are non-negative; determinants may carry a sign.
using BigInt = mpz_class;
using BigCount = mpz_class;

// Natural log of a positive integer, accurate to double precision even when
// the value is far outside the double range.
double ln(const BigInt& value);

inline std::string to_string(const BigInt& value) { return value.get_str(); }

}  // namespace eo
