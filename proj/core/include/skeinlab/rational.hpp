#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace skeinlab {

/// Exact rational coefficient type. All arithmetic in the library is exact;
/// there is no floating point anywhere on a value path.
using Rational = mpq_class;
using Integer = mpz_class;

/// Exponents live on integer lattices (powers of q, A, alpha, z).
using Exp = std::int64_t;

Rational ratPow(const Rational& base, long e);
Integer factorial(unsigned n);

/// Canonical rendering: "p" for integers, "p/r" otherwise.
std::string ratToString(const Rational& r);

}  // namespace skeinlab
