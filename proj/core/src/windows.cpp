#include "skeinlab/windows.hpp"

#include <stdexcept>

#include "skeinlab/errors.hpp"
#include "skeinlab/skein.hpp"

namespace skeinlab {

namespace {

std::vector<Exp> latticePoints(Exp lo, Exp hi, Exp anchor, Exp step) {
  std::vector<Exp> pts;
  if (lo > hi) return pts;
  // first point >= lo congruent to anchor mod step
  Exp rem = ((lo - anchor) % step + step) % step;
  Exp first = rem == 0 ? lo : lo + (step - rem);
  for (Exp q = first; q <= hi; q += step) pts.push_back(q);
  return pts;
}

}  // namespace

const char* windowSourceName(WindowSource s) {
  switch (s) {
    case WindowSource::Theorem1: return "theorem1";
    case WindowSource::Theorem2: return "theorem2";
    case WindowSource::Theorem3: return "theorem3";
    case WindowSource::Support: return "support";
  }
  return "?";
}

Window jonesWindow(const Diagram& d) {
  Window w;
  w.source = WindowSource::Theorem1;

  const DiagramStats st = d.stats();
  w.N = st.c;
  if (d.empty()) {
    w.coarseQ = w.fineQ = {0};
    return w;
  }

  const auto [sA, sB] = bracketStateLoops(d);
  // bracket degrees: max <= c + 2(sA - 1), min >= -c - 2(sB - 1); shift by
  // -3w for the (-A^3)^(-w) factor; q = A^(-2) flips and halves
  const Exp aMax = st.c + 2 * (sA - 1);
  const Exp aMin = -st.c - 2 * (sB - 1);
  w.qLo = (3 * st.writhe - aMax) / 2;
  w.qHi = (3 * st.writhe - aMin) / 2;

  // Jones exponents of an l-component link live on q = l - 1 (mod 2)
  const Exp parity = ((st.linkComponents - 1) % 2 + 2) % 2;
  w.coarseQ = w.fineQ = latticePoints(w.qLo, w.qHi, parity, 2);
  if (w.fineQ.empty()) throw std::logic_error("empty jones window lattice");
  return w;
}

MortonBounds mortonBounds(const Diagram& d) {
  const DiagramStats st = d.stats();
  MortonBounds m;
  m.zMax = st.c - st.seifertCircles + 1;
  m.alphaMin = st.writhe - st.seifertCircles + 1;
  m.alphaMax = st.writhe + st.seifertCircles - 1;
  return m;
}

Window homflyWindow(const Diagram& d, long twiceA) {
  if (twiceA < 0) throw std::domain_error("homflyWindow: 2a must be nonnegative");
  Window w;
  w.source = WindowSource::Theorem2;
  w.twiceA = twiceA;

  const DiagramStats st = d.stats();
  if (d.empty()) {
    w.coarseQ = w.fineQ = {0};
    return w;
  }
  w.N = (twiceA - 1) * (st.seifertCircles - 1) + st.c;
  if (w.N < 0) w.N = 0;  // a = 0 with many Seifert circles and few crossings
  const Exp center = twiceA * st.writhe;  // a*w in q units
  w.qLo = center - w.N;
  w.qHi = center + w.N;
  w.coarseQ = latticePoints(w.qLo, w.qHi, center, 2);
  w.fineQ = latticePoints(w.qLo, w.qHi, 0, 1);
  return w;
}

Window dubrovnikWindow(const Diagram& d, long twiceA) {
  if (twiceA < 0) throw std::domain_error("dubrovnikWindow: 2a must be nonnegative");
  Window w;
  w.source = WindowSource::Theorem3;
  w.twiceA = twiceA;

  const DiagramStats st = d.stats();
  if (d.empty()) {
    w.coarseQ = w.fineQ = {0};
    return w;
  }

  // N: greatest integer strictly below 3ac = 3*twiceA*c/2, clamped at 0
  const long threeAC2 = 3 * twiceA * st.c;  // 2 * 3ac
  long n = threeAC2 % 2 == 0 ? threeAC2 / 2 - 1 : (threeAC2 - 1) / 2;
  w.N = n < 0 ? 0 : n;

  const Exp spread = st.c + (twiceA - 1) * (st.c + st.g - 1);  // c + 2(a-1/2)(c+g-1) in q
  w.dQLo = -twiceA * st.cMinus - spread;
  w.dQHi = twiceA * st.cPlus + spread;
  // Y = alpha^(-w) D shifts t-degrees by -a*w
  w.qLo = w.dQLo - twiceA * st.writhe;
  w.qHi = w.dQHi - twiceA * st.writhe;
  w.looseNQ = threeAC2 + 2 * (twiceA - 1) * (st.g - 1);

  w.coarseQ = latticePoints(w.qLo, w.qHi, 0, 2);
  w.fineQ = latticePoints(w.qLo, w.qHi, 0, 1);
  return w;
}

Window supportWindow(const LaurentPoly& F) {
  const auto sup = F.support();  // throws ZeroPolynomial
  Window w;
  w.source = WindowSource::Support;
  w.qLo = sup.min;
  w.qHi = sup.max;
  w.fineQ.assign(sup.exponents.begin(), sup.exponents.end());
  w.coarseQ = w.fineQ;
  w.N = (sup.span() + 1) / 2;  // span in t, rounded up on the half-lattice
  return w;
}

}  // namespace skeinlab
