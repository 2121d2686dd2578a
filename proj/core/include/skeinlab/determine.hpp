#pragma once

#include <string>
#include <vector>

#include "skeinlab/diagram.hpp"
#include "skeinlab/laurent.hpp"
#include "skeinlab/rational.hpp"
#include "skeinlab/skein.hpp"
#include "skeinlab/vassiliev.hpp"
#include "skeinlab/windows.hpp"

namespace skeinlab {

/// The correspondence behind all of this: with t-exponents e_i (q-exponent
/// over two) the fundamental solutions are e^(e_i x), so derivative data
/// d_j = d^j/dx^j F(e^x)|_0 and amplitudes a_i at the exponents are related
/// by the Vandermonde system d_j = sum_i a_i e_i^j.

/// Exact amplitudes from derivative data; |data| must equal |qExps|.
std::vector<Rational> vandermondeSolve(const std::vector<Exp>& qExps,
                                       const std::vector<Rational>& data);

/// Row vector expressing d_j as a linear function of (d_0..d_K).
struct LinearFunctional {
  std::vector<Exp> qExponents;
  long order = 0;
  std::vector<Rational> coefficients;

  Rational apply(const std::vector<Rational>& data) const;
};
LinearFunctional linearFunctional(const std::vector<Exp>& qExps, long j);

/// d_j extrapolated from d_0..d_K; returns data[j] for j <= K.
Rational extrapolate(const std::vector<Exp>& qExps, const std::vector<Rational>& data, long j);

/// The Laurent polynomial sum_i a_i t^(e_i) recovered from derivative data.
LaurentPoly reconstructPolynomial(const std::vector<Exp>& qExps,
                                  const std::vector<Rational>& data);

enum class LatticeUsed { None, Coarse, Fine };
const char* latticeName(LatticeUsed l);

struct DeterminationReport {
  Family family = Family::Jones;
  long twiceA = -1;
  WindowSource windowSource = WindowSource::Theorem1;
  long N = 0;
  long jmax = 0;
  LatticeUsed lattice = LatticeUsed::None;  // lattice that determined, if any
  long K = 0;                               // |lattice| - 1 for that lattice
  long ordersChecked = 0;
  bool coarseTried = false;
  bool coarseOk = false;
  bool determined = false;
  bool supportContained = false;  // support(F) inside the fine lattice
  std::vector<long> failedOrders; // on the last lattice tried
};

/// Runs the theorem window for the family: derivative data d_j = j! v_j on
/// the coarse lattice first, then fine; each order K+1..jmax must match the
/// directly computed derivative exactly.
DeterminationReport verifyDetermination(const Diagram& d, Family family, long twiceA, long jmax,
                                        MemoCache* cache, const EngineConfig& cfg);

/// Corollary check for knot diagrams: true iff v_1..v_c all vanish; a true
/// result is cross-checked against jones == 1 internally.
bool jonesTrivialityCheck(const Diagram& d, long bracketCap = 16);

}  // namespace skeinlab
