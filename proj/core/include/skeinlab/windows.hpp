#pragma once

#include <vector>

#include "skeinlab/diagram.hpp"
#include "skeinlab/laurent.hpp"

namespace skeinlab {

enum class WindowSource { Theorem1, Theorem2, Theorem3, Support };

const char* windowSourceName(WindowSource s);

/// Candidate t-exponent window for the determination machinery. Exponents
/// are stored as q-exponents (integers; q-exponent k is t^(k/2)). The
/// coarse lattice has spacing 1 in t, the fine lattice spacing 1/2.
struct Window {
  WindowSource source = WindowSource::Support;
  long twiceA = -1;
  long N = 0;        // the theorem's count
  Exp qLo = 0;       // window bounds in q units
  Exp qHi = 0;
  std::vector<Exp> coarseQ;
  std::vector<Exp> fineQ;

  // Theorem-3 extras: bounds for the regular-isotopy polynomial D (qLo/qHi
  // are the Y bounds) and the looser N estimate 3ac + (2a-1)(g-1) in
  // q units.
  Exp dQLo = 0;
  Exp dQHi = 0;
  Exp looseNQ = 0;
};

/// Theorem-1 window: bracket-state degree bounds shifted by the writhe
/// normalization, on the component-parity t-lattice. N = c.
Window jonesWindow(const Diagram& d);

struct MortonBounds {
  long zMax = 0;      // d_max(z) <= c - s + 1
  long alphaMin = 0;  // w - s + 1 <= d_min(alpha)
  long alphaMax = 0;  // d_max(alpha) <= w + s - 1
};
MortonBounds mortonBounds(const Diagram& d);

/// Theorem-2 window: N = (2a-1)(s-1) + c, t-bounds a*w -/+ N/2; the coarse
/// lattice is anchored at a*w (exactly N+1 points).
Window homflyWindow(const Diagram& d, long twiceA);

/// Theorem-3 window with the sign-corrected lower bound; qLo/qHi bound the
/// specialized Y, dQLo/dQHi the specialized D. N is the greatest integer
/// strictly less than 3ac (clamped at 0).
Window dubrovnikWindow(const Diagram& d, long twiceA);

/// Ground-truth window: the exact support.
Window supportWindow(const LaurentPoly& F);

}  // namespace skeinlab
