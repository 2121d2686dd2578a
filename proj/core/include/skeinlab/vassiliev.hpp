#pragma once

#include <string>
#include <vector>

#include "skeinlab/diagram.hpp"
#include "skeinlab/laurent.hpp"
#include "skeinlab/rational.hpp"
#include "skeinlab/skein.hpp"

namespace skeinlab {

enum class Family { Jones, Homfly, Dubrovnik };

const char* familyName(Family f);

/// Finite prefix v_0..v_n of one invariant family, exact rationals.
/// twiceA is 2a for the homfly/dubrovnik families and -1 for jones.
struct InvariantSequence {
  Family family = Family::Jones;
  long twiceA = -1;
  std::vector<Rational> values;
};

/// Coefficients of x^0..x^n in F(e^x) for F in q = e^(x/2):
/// v_j = (1/j!) sum_k c_k (k/2)^j, computed exactly.
std::vector<Rational> taylorCoeffs(const LaurentPoly& F, long n);

/// Composes the matching engine, the t-specialization where needed
/// (dubrovnik uses Y), and taylorCoeffs.
InvariantSequence invariantFamily(const Diagram& d, Family family, long twiceA, long n,
                                  MemoCache* cache, const EngineConfig& cfg);

}  // namespace skeinlab
