#include <random>

#include "doctest.h"
#include "skeinlab/errors.hpp"
#include "skeinlab/laurent.hpp"
#include "skeinlab/twovar.hpp"

using namespace skeinlab;

namespace {

LaurentPoly q(Exp e, long num = 1, long den = 1) {
  Rational c(num, den);
  c.canonicalize();
  return LaurentPoly::monomial(Var::Q, c, e);
}

LaurentPoly randomPoly(std::mt19937& rng, Var v = Var::Q) {
  std::uniform_int_distribution<int> nTerms(0, 5), exp(-6, 6), num(-5, 5), den(1, 3);
  LaurentPoly p(v);
  const int n = nTerms(rng);
  for (int i = 0; i < n; ++i) {
    Rational c(num(rng), den(rng));
    c.canonicalize();
    p.addTerm(exp(rng), c);
  }
  return p;
}

TwoVarLaurent randomTwoVar(std::mt19937& rng) {
  std::uniform_int_distribution<int> nTerms(0, 4), ae(-3, 3), ze(0, 3), num(-4, 4);
  TwoVarLaurent p;
  const int n = nTerms(rng);
  for (int i = 0; i < n; ++i) p.addTerm(ae(rng), ze(rng), num(rng));
  return p;
}

}  // namespace

TEST_CASE("laurent arithmetic on the q lattice") {
  const LaurentPoly a = q(1) + q(-1);
  const LaurentPoly b = q(1) - q(-1);
  CHECK(a * b == q(2) - q(-2));
  CHECK(a + LaurentPoly::zero(Var::Q) == a);
  CHECK(a * a == q(2) + q(0, 2) + q(-2));
}

TEST_CASE("laurent arithmetic rejects mixed variables") {
  const LaurentPoly qq = q(1);
  const LaurentPoly aa = LaurentPoly::monomial(Var::A, 1, 1);
  CHECK_THROWS_AS((void)(qq + aa), VariableMismatch);
  CHECK_THROWS_AS((void)(qq * aa), VariableMismatch);
}

TEST_CASE("exact division") {
  const LaurentPoly denom = q(1) + q(-1);
  CHECK((q(2) - q(-2)).divideExact(denom) == q(1) - q(-1));
  CHECK((-q(1) - q(-1)).divideExact(denom) == q(0, -1));
  CHECK_THROWS_AS((q(2) + q(1)).divideExact(denom), NotDivisible);
  CHECK_THROWS_AS(q(0).divideExact(LaurentPoly::zero(Var::Q)), NotDivisible);
}

TEST_CASE("support") {
  const auto sup = (q(3) - q(-1)).support();
  CHECK(sup.min == -1);
  CHECK(sup.max == 3);
  CHECK(sup.exponents == std::set<Exp>{-1, 3});
  CHECK(sup.span() == 4);

  const auto one = q(0).support();
  CHECK(one.min == 0);
  CHECK(one.max == 0);
  CHECK(one.exponents == std::set<Exp>{0});

  CHECK_THROWS_AS(LaurentPoly::zero(Var::Q).support(), ZeroPolynomial);
}

TEST_CASE("rendering is decreasing-exponent with rational coefficients") {
  LaurentPoly p = q(2) - q(-2, 1, 2);
  CHECK(p.toString() == "1*q^2 + -1/2*q^-2");
  CHECK(LaurentPoly::zero(Var::Q).toString() == "0");
  CHECK(LaurentPoly::monomial(Var::A, 3, -5).toString() == "3*A^-5");
}

TEST_CASE("specialization of single alpha power") {
  const TwoVarLaurent p = TwoVarLaurent::alphaPow(1);
  CHECK(tvSpecialize(p, 2) == q(2));  // a = 1: alpha -> t
}

TEST_CASE("specialization clears the loop-value z inverse") {
  // (alpha - alpha^-1) z^-1 at a = 1/2 is (q - q^-1)/(q - q^-1) = 1
  TwoVarLaurent delta;
  delta.addTerm(1, -1, 1);
  delta.addTerm(-1, -1, -1);
  CHECK(tvSpecialize(delta, 1) == q(0));
}

TEST_CASE("bare z inverse is not Laurent") {
  CHECK_THROWS_AS(tvSpecialize(TwoVarLaurent::zPow(-1), 1), NotLaurent);
}

TEST_CASE("two-variable rendering") {
  TwoVarLaurent delta;
  delta.addTerm(-1, -1, 1);
  delta.addTerm(1, -1, -1);
  CHECK(delta.toString() == "-1*a^1*z^-1 + 1*a^-1*z^-1");
  CHECK(TwoVarLaurent::zero().toString() == "0");
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937 rng(20240811);
  for (int trial = 0; trial < 200; ++trial) {
    const LaurentPoly a = randomPoly(rng);
    const LaurentPoly b = randomPoly(rng);
    const LaurentPoly c = randomPoly(rng);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
  }
}

TEST_CASE("divide undoes multiply") {
  std::mt19937 rng(7);
  int done = 0;
  while (done < 100) {
    const LaurentPoly a = randomPoly(rng);
    const LaurentPoly b = randomPoly(rng);
    if (b.isZero()) continue;
    CHECK((a * b).divideExact(b) == a);
    ++done;
  }
}

TEST_CASE("specialization is a ring homomorphism") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    const TwoVarLaurent p = randomTwoVar(rng);
    const TwoVarLaurent r = randomTwoVar(rng);
    for (long twiceA : {1L, 2L, 3L}) {
      CHECK(tvSpecialize(p * r, twiceA) == tvSpecialize(p, twiceA) * tvSpecialize(r, twiceA));
      CHECK(tvSpecialize(p + r, twiceA) == tvSpecialize(p, twiceA) + tvSpecialize(r, twiceA));
    }
  }
}
