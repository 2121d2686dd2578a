#include "skeinlab/vassiliev.hpp"

#include "skeinlab/errors.hpp"
#include "skeinlab/twovar.hpp"

namespace skeinlab {

const char* familyName(Family f) {
  switch (f) {
    case Family::Jones: return "jones";
    case Family::Homfly: return "homfly";
    case Family::Dubrovnik: return "dubrovnik";
  }
  return "?";
}

std::vector<Rational> taylorCoeffs(const LaurentPoly& F, long n) {
  if (F.var() != Var::Q) throw VariableMismatch("taylorCoeffs expects a q-polynomial");
  if (n < 0) throw SizeMismatch("taylorCoeffs: negative order");
  std::vector<Rational> v(n + 1, Rational(0));
  std::vector<Rational> invFact(n + 1);
  Rational f(1);
  for (long j = 0; j <= n; ++j) {
    if (j > 0) f *= j;
    invFact[j] = Rational(1) / f;
  }
  for (const auto& [k, c] : F.terms()) {
    Rational half(k, 2);
    half.canonicalize();
    Rational p(1);  // (k/2)^j
    for (long j = 0; j <= n; ++j) {
      v[j] += c * p * invFact[j];
      p *= half;
    }
  }
  return v;
}

InvariantSequence invariantFamily(const Diagram& d, Family family, long twiceA, long n,
                                  MemoCache* cache, const EngineConfig& cfg) {
  LaurentPoly F(Var::Q);
  switch (family) {
    case Family::Jones:
      F = jones(d, cfg.bracketCap);
      twiceA = -1;
      break;
    case Family::Homfly:
      F = tvSpecialize(homfly(d, cache, cfg.homflyCap), twiceA);
      break;
    case Family::Dubrovnik:
      F = tvSpecialize(dubrovnik(d, cache, cfg.dubrovnikCap).yPoly, twiceA);
      break;
  }
  InvariantSequence seq;
  seq.family = family;
  seq.twiceA = twiceA;
  seq.values = taylorCoeffs(F, n);
  return seq;
}

}  // namespace skeinlab
