#include <random>
#include <vector>

#include "doctest.h"
#include "skeinlab/errors.hpp"
#include "skeinlab/notation.hpp"
#include "skeinlab/skein.hpp"
#include "skeinlab/twovar.hpp"

using namespace skeinlab;

namespace {

const char* kTrefoilPd = "X[1,4,2,5];X[3,6,4,1];X[5,2,6,3]";

LaurentPoly aPow(Exp e, long c = 1) { return LaurentPoly::monomial(Var::A, c, e); }
LaurentPoly qPow(Exp e, long c = 1) { return LaurentPoly::monomial(Var::Q, c, e); }

TwoVarLaurent tv(std::initializer_list<std::tuple<Exp, Exp, long>> terms) {
  TwoVarLaurent p;
  for (const auto& [a, z, c] : terms) p.addTerm(a, z, c);
  return p;
}

// pool of small census-flavored diagrams for the property suites
const std::vector<std::string>& diagramPool() {
  static const std::vector<std::string> pool{
      kTrefoilPd,
      "braid:2|1 1 1",
      "braid:2|-1 -1 -1",
      "braid:2|1 1",
      "braid:2|-1 -1",
      "braid:2|1 1 1 1",
      "braid:2|1 1 1 1 1",
      "braid:3|1 -2 1 -2",
      "braid:3|1 1 2 2",
      "braid:3|1 2 1 2",
      "braid:3|-1 2 -1 2",
      "braid:3|1 -2 1 -2 1 -2",
      "braid:2|1 -1",
      "X[1,1,2,2]",
      "X[1,1,2,3];X[2,4,4,3]",
      "braid:4|1 2 3 1 2",
      "braid:3|1 1 1 2 2",
  };
  return pool;
}

}  // namespace

TEST_CASE("bracket normalization") {
  CHECK(kauffmanBracket(parsePd("O*1")) == aPow(0));
  CHECK(kauffmanBracket(parsePd("O*2")) == aPow(2, -1) + aPow(-2, -1));
}

TEST_CASE("bracket of the standard left trefoil") {
  const LaurentPoly b = kauffmanBracket(parsePd(kTrefoilPd));
  CHECK(b == aPow(7) - aPow(3) - aPow(-5));
}

TEST_CASE("bracket kink values") {
  CHECK(kauffmanBracket(parsePd("X[1,1,2,2]")) == aPow(3, -1));   // positive curl
  CHECK(kauffmanBracket(parsePd("X[1,2,2,1]")) == aPow(-3, -1));  // negative curl
}

TEST_CASE("bracket cap") {
  CHECK_THROWS_AS(kauffmanBracket(parseBraid("braid:2|1 1 1"), 2), DiagramTooLarge);
}

TEST_CASE("jones of small diagrams") {
  CHECK(jones(parsePd("O*1")) == qPow(0));
  CHECK(jones(parsePd("O*2")) == qPow(1, -1) + qPow(-1, -1));
  // left trefoil: -t^-4 + t^-3 + t^-1
  CHECK(jones(parsePd(kTrefoilPd)) == qPow(-8, -1) + qPow(-6) + qPow(-2));
  // right trefoil: -t^4 + t^3 + t
  CHECK(jones(parseBraid("braid:2|1 1 1")) == qPow(8, -1) + qPow(6) + qPow(2));
  // figure-eight: t^-2 - t^-1 + 1 - t + t^2
  CHECK(jones(parseBraid("braid:3|1 -2 1 -2")) ==
        qPow(4) - qPow(2) + qPow(0) - qPow(-2) + qPow(-4));
  // positive Hopf link: -t^(1/2) - t^(5/2)
  CHECK(jones(parseBraid("braid:2|1 1")) == qPow(5, -1) + qPow(1, -1));
  // kinked unknots normalize to 1
  CHECK(jones(parsePd("X[1,1,2,2]")) == qPow(0));
  CHECK(jones(parseBraid("braid:2|1 1 -1")) == qPow(0));
}

TEST_CASE("homfly base values") {
  CHECK(homfly(parsePd("O*1")) == TwoVarLaurent::constant(1));
  CHECK(homfly(parsePd("O*2")) == homflyLoopValue());
  CHECK(homflyLoopValue() == tv({{-1, -1, 1}, {1, -1, -1}}));
}

TEST_CASE("homfly of the right trefoil and Hopf link") {
  CHECK(homfly(parseBraid("braid:2|1 1")) == tv({{1, -1, 1}, {3, -1, -1}, {1, 1, 1}}));
  CHECK(homfly(parseBraid("braid:2|1 1 1")) == tv({{2, 0, 2}, {4, 0, -1}, {2, 2, 1}}));
}

TEST_CASE("homfly specialization at a=1 is jones") {
  for (const auto& text : diagramPool()) {
    const Diagram d = parseNotation(text);
    MemoCache cache;
    CHECK(tvSpecialize(homfly(d, &cache), 2) == jones(d));
  }
}

TEST_CASE("dubrovnik base values") {
  const auto unknot = dubrovnik(parsePd("O*1"));
  CHECK(unknot.dPoly == TwoVarLaurent::constant(1));
  CHECK(unknot.yPoly == TwoVarLaurent::constant(1));

  const auto unlink = dubrovnik(parsePd("O*2"));
  CHECK(unlink.dPoly == dubrovnikLoopValue());
  CHECK(dubrovnikLoopValue() == tv({{1, -1, 1}, {-1, -1, -1}, {0, 0, 1}}));

  const auto kink = dubrovnik(parsePd("X[1,1,2,2]"));
  CHECK(kink.dPoly == TwoVarLaurent::alphaPow(1));
  CHECK(kink.yPoly == TwoVarLaurent::constant(1));
}

TEST_CASE("dubrovnik of the right trefoil") {
  // worked by hand through the skein tree:
  // D = 2a - a^-1 + z(1 - a^-2) + z^2(a - a^-1)
  const auto tref = dubrovnik(parseBraid("braid:2|1 1 1"));
  CHECK(tref.dPoly ==
        tv({{1, 0, 2}, {-1, 0, -1}, {0, 1, 1}, {-2, 1, -1}, {1, 2, 1}, {-1, 2, -1}}));
  CHECK(tref.yPoly == TwoVarLaurent::alphaPow(-3) * tref.dPoly);
}

TEST_CASE("homfly skein closure on random census sites") {
  std::mt19937 rng(20250810);
  const auto& pool = diagramPool();
  int done = 0;
  while (done < 50) {
    const Diagram d = parseNotation(pool[rng() % pool.size()]);
    if (d.crossingCount() == 0) continue;
    const std::size_t i = rng() % d.crossingCount();
    const Diagram plus = d.crossings()[i].sign() > 0 ? d : d.switchCrossing(i);
    const Diagram minus = d.crossings()[i].sign() > 0 ? d.switchCrossing(i) : d;
    const Diagram zero = d.smoothCrossing(i, SmoothMode::Oriented);
    // independent computations, no shared cache
    const TwoVarLaurent lhs = TwoVarLaurent::alphaPow(-1) * homfly(plus) -
                              TwoVarLaurent::alphaPow(1) * homfly(minus) -
                              TwoVarLaurent::zPow(1) * homfly(zero);
    CHECK(lhs.isZero());
    ++done;
  }
}

TEST_CASE("dubrovnik skein closure on random census sites") {
  std::mt19937 rng(1618);
  const auto& pool = diagramPool();
  int done = 0;
  while (done < 50) {
    const Diagram d = parseNotation(pool[rng() % pool.size()]);
    if (d.crossingCount() == 0 || d.crossingCount() > 8) continue;
    const std::size_t i = rng() % d.crossingCount();
    const Diagram plus = d.crossings()[i].sign() > 0 ? d : d.switchCrossing(i);
    const Diagram minus = d.crossings()[i].sign() > 0 ? d.switchCrossing(i) : d;
    const Diagram sameSide = d.smoothCrossing(i, SmoothMode::Oriented);
    const Diagram crossSide = d.smoothCrossing(i, SmoothMode::Disoriented);
    const TwoVarLaurent lhs =
        dubrovnik(plus).dPoly - dubrovnik(minus).dPoly -
        TwoVarLaurent::zPow(1) * (dubrovnik(sameSide).dPoly - dubrovnik(crossSide).dPoly);
    CHECK(lhs.isZero());
    ++done;
  }
}

TEST_CASE("invariance across diagrams of one knot") {
  const std::vector<std::pair<std::string, std::string>> pairs{
      {kTrefoilPd, "braid:2|-1 -1 -1"},
      {kTrefoilPd, "braid:3|-1 -1 -1 -2"},           // stabilized mirror trefoil
      {"braid:2|1 1 1", "braid:3|1 1 1 2"},          // stabilized
      {"braid:2|1 1 1", "braid:2|1 1 1 1 -1"},       // R2 pair inserted
      {"braid:3|1 -2 1 -2", "braid:4|1 -2 1 -2 3"},  // figure-eight stabilized
      {"braid:3|1 -2 1 -2", "braid:3|-2 1 -2 1"},    // conjugated
      {"braid:2|1 1", "braid:3|1 1 2"},              // Hopf link stabilized
      {"braid:3|1 2 1 2", "braid:3|2 1 2 1"},
      {"O*2", "braid:2|1 -1 1 -1"},                  // doubly reducible unlink
      {"O*1", "braid:2|1 -1 1"},                     // reducible unknot
      {"braid:2|1 1 1 1 1", "braid:3|1 1 1 1 1 2"},
      {"braid:3|1 1 2 2", "braid:4|1 1 2 2 3"},
  };
  for (const auto& [lhs, rhs] : pairs) {
    CAPTURE(lhs);
    CAPTURE(rhs);
    const Diagram a = parseNotation(lhs);
    const Diagram b = parseNotation(rhs);
    CHECK(jones(a) == jones(b));
    CHECK(homfly(a) == homfly(b));
    CHECK(dubrovnik(a).yPoly == dubrovnik(b).yPoly);
  }
}

TEST_CASE("split union with an unknot multiplies by the loop value") {
  for (const auto& text : {std::string(kTrefoilPd), std::string("braid:2|1 1")}) {
    const Diagram d = parseNotation(text);
    const Diagram split = Diagram::make(d.crossings(), d.freeLoops() + 1, true);
    CHECK(jones(split) == jones(d) * (qPow(1, -1) + qPow(-1, -1)));
    CHECK(homfly(split) == homfly(d) * homflyLoopValue());
    CHECK(dubrovnik(split).dPoly == dubrovnik(d).dPoly * dubrovnikLoopValue());
  }
}

TEST_CASE("mirror law for jones") {
  for (const auto& text : diagramPool()) {
    const Diagram d = parseNotation(text);
    const LaurentPoly v = jones(d);
    const LaurentPoly vm = jones(d.mirrored());
    LaurentPoly flipped(Var::Q);
    for (const auto& [e, c] : v.terms()) flipped.addTerm(-e, c);
    CHECK(vm == flipped);
  }
}

TEST_CASE("memoization changes no value") {
  for (const auto& text : diagramPool()) {
    const Diagram d = parseNotation(text);
    MemoCache hc, dc;
    CHECK(homfly(d, &hc) == homfly(d, nullptr));
    CHECK(dubrovnik(d, &dc).dPoly == dubrovnik(d, nullptr).dPoly);
  }
}

TEST_CASE("engine caps throw") {
  const Diagram d = parseBraid("braid:2|1 1 1 1");
  CHECK_THROWS_AS(homfly(d, nullptr, 3), DiagramTooLarge);
  CHECK_THROWS_AS(dubrovnik(d, nullptr, 3), DiagramTooLarge);
}
