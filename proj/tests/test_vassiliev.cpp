#include <random>

#include "doctest.h"
#include "skeinlab/notation.hpp"
#include "skeinlab/vassiliev.hpp"

using namespace skeinlab;

namespace {

LaurentPoly qPow(Exp e, long num = 1, long den = 1) {
  Rational c(num, den);
  c.canonicalize();
  return LaurentPoly::monomial(Var::Q, c, e);
}

Rational rat(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace

TEST_CASE("taylor coefficients of constants and powers of t") {
  CHECK(taylorCoeffs(qPow(0), 3) == std::vector<Rational>{1, 0, 0, 0});
  // t = e^x
  CHECK(taylorCoeffs(qPow(2), 3) == std::vector<Rational>{1, 1, rat(1, 2), rat(1, 6)});
  // t + t^-1 = 2cosh(x)
  CHECK(taylorCoeffs(qPow(2) + qPow(-2), 4) == std::vector<Rational>{2, 0, 1, 0, rat(1, 12)});
  CHECK(taylorCoeffs(LaurentPoly::zero(Var::Q), 2) == std::vector<Rational>{0, 0, 0});
}

TEST_CASE("jones family of the unknot and trefoil") {
  const EngineConfig cfg;
  const auto unknot = invariantFamily(parsePd("O*1"), Family::Jones, -1, 4, nullptr, cfg);
  CHECK(unknot.values == std::vector<Rational>{1, 0, 0, 0, 0});

  // left trefoil: V = -t^-4 + t^-3 + t^-1, v_2 = (-16 + 9 + 1)/2 = -3
  const auto tref = invariantFamily(parsePd("X[1,4,2,5];X[3,6,4,1];X[5,2,6,3]"),
                                    Family::Jones, -1, 2, nullptr, cfg);
  CHECK(tref.values == std::vector<Rational>{1, 0, -3});
}

TEST_CASE("homfly family at a=1 equals the jones family") {
  const EngineConfig cfg;
  const char* notations[] = {"braid:2|1 1 1", "braid:3|1 -2 1 -2", "braid:2|1 1",
                             "X[1,4,2,5];X[3,6,4,1];X[5,2,6,3]", "braid:3|1 1 2 2"};
  for (const char* text : notations) {
    const Diagram d = parseNotation(text);
    MemoCache cache;
    const auto viaJones = invariantFamily(d, Family::Jones, -1, 8, nullptr, cfg);
    const auto viaHomfly = invariantFamily(d, Family::Homfly, 2, 8, &cache, cfg);
    CHECK(viaJones.values == viaHomfly.values);
  }
}

TEST_CASE("v_0 is (-2)^(components-1) and v_1 vanishes on knots") {
  const EngineConfig cfg;
  const char* notations[] = {"O*1",           "O*2",
                             "braid:2|1 1",   "braid:2|1 1 1",
                             "braid:3|1 -2 1 -2", "braid:3|1 2 1 2",
                             "braid:3|1 -2 1 -2 1 -2"};
  for (const char* text : notations) {
    const Diagram d = parseNotation(text);
    const DiagramStats st = d.stats();
    const auto seq = invariantFamily(d, Family::Jones, -1, 1, nullptr, cfg);
    CHECK(seq.values[0] == ratPow(Rational(-2), st.linkComponents - 1));
    if (st.linkComponents == 1) CHECK(seq.values[1] == 0);
  }
}

TEST_CASE("taylor extraction is linear") {
  std::mt19937 rng(31337);
  std::uniform_int_distribution<int> exp(-6, 6), num(-5, 5);
  for (int trial = 0; trial < 100; ++trial) {
    LaurentPoly f(Var::Q), g(Var::Q);
    for (int i = 0; i < 4; ++i) {
      f.addTerm(exp(rng), num(rng));
      g.addTerm(exp(rng), num(rng));
    }
    const auto vf = taylorCoeffs(f, 6);
    const auto vg = taylorCoeffs(g, 6);
    const auto vs = taylorCoeffs(f + g, 6);
    for (int j = 0; j <= 6; ++j) CHECK(vs[j] == vf[j] + vg[j]);
  }
}

TEST_CASE("recomputation at higher order extends the prefix") {
  const LaurentPoly F = qPow(4) - qPow(2, 3) + qPow(-1, 1, 2);
  const auto shortRun = taylorCoeffs(F, 5);
  const auto longRun = taylorCoeffs(F, 11);
  for (int j = 0; j <= 5; ++j) CHECK(shortRun[j] == longRun[j]);
}
