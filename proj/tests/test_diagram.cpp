#include <map>
#include <random>

#include "doctest.h"
#include "skeinlab/errors.hpp"
#include "skeinlab/notation.hpp"

using namespace skeinlab;

static const char* kTrefoilPd = "X[1,4,2,5];X[3,6,4,1];X[5,2,6,3]";

TEST_CASE("stats of the right trefoil braid closure") {
  const DiagramStats st = parseBraid("braid:2|1 1 1").stats();
  CHECK(st.c == 3);
  CHECK(st.cPlus == 3);
  CHECK(st.cMinus == 0);
  CHECK(st.writhe == 3);
  CHECK(st.g == 1);
  CHECK(st.linkComponents == 1);
  CHECK(st.seifertCircles == 2);
}

TEST_CASE("stats of the two-unlink") {
  const DiagramStats st = parsePd("O*2").stats();
  CHECK(st.c == 0);
  CHECK(st.writhe == 0);
  CHECK(st.g == 2);
  CHECK(st.linkComponents == 2);
  CHECK(st.seifertCircles == 2);
}

TEST_CASE("stats of the standard (left) trefoil PD") {
  const DiagramStats st = parsePd(kTrefoilPd).stats();
  CHECK(st.c == 3);
  CHECK(st.cMinus == 3);
  CHECK(st.writhe == -3);
  CHECK(st.seifertCircles == 2);
}

TEST_CASE("murasugi state components") {
  CHECK(parseBraid("braid:2|1 1 1").murasugiStateComponents() == 2);
  CHECK(parsePd(kTrefoilPd).murasugiStateComponents() == 3);
  CHECK(parsePd("O*3").murasugiStateComponents() == 3);
}

TEST_CASE("switching a crossing") {
  const Diagram tref = parseBraid("braid:2|1 1 1");
  const Diagram once = tref.switchCrossing(0);
  CHECK(once.stats().writhe == 1);
  CHECK(once.canonicalKey() == parseBraid("braid:2|-1 1 1").canonicalKey());
  CHECK(tref.switchCrossing(0).switchCrossing(0).canonicalKey() == tref.canonicalKey());
  CHECK_THROWS_AS(tref.switchCrossing(5), IndexOutOfRange);
}

TEST_CASE("oriented smoothing steps down the torus braids") {
  const Diagram tref = parseBraid("braid:2|1 1 1");
  const Diagram hopf = parseBraid("braid:2|1 1");
  bool anyMatches = false;
  for (std::size_t i = 0; i < 3; ++i) {
    const Diagram sm = tref.smoothCrossing(i, SmoothMode::Oriented);
    CHECK(sm.crossingCount() == 2);
    if (sm.canonicalKey() == hopf.canonicalKey()) anyMatches = true;
  }
  CHECK(anyMatches);
}

TEST_CASE("smoothing the one-crossing closure") {
  const Diagram kink = parseBraid("braid:2|1");
  const Diagram oriented = kink.smoothCrossing(0, SmoothMode::Oriented);
  CHECK(oriented.crossingCount() == 0);
  CHECK(oriented.freeLoops() == 2);
  const Diagram crossed = kink.smoothCrossing(0, SmoothMode::Disoriented);
  CHECK(crossed.crossingCount() == 0);
  CHECK(crossed.freeLoops() == 1);
}

TEST_CASE("simplify removes R2 pairs without kink records") {
  const SimplifyResult s = parseBraid("braid:2|1 -1").simplify();
  CHECK(s.diagram.freeLoops() == 2);
  CHECK(s.diagram.crossingCount() == 0);
  CHECK(s.kinkCount() == 0);
}

TEST_CASE("simplify records kink signs") {
  const SimplifyResult plus = parsePd("X[1,1,2,2]").simplify();
  CHECK(plus.diagram.freeLoops() == 1);
  CHECK(plus.kinkPlus == 1);
  CHECK(plus.kinkMinus == 0);

  const SimplifyResult minus = parsePd("X[1,2,2,1]").simplify();
  CHECK(minus.kinkMinus == 1);

  const SimplifyResult both = parsePd("X[1,1,2,3];X[2,4,4,3]").simplify();
  CHECK(both.diagram.freeLoops() == 1);
  CHECK(both.kinkPlus == 1);
  CHECK(both.kinkMinus == 1);
}

TEST_CASE("simplify leaves the trefoil alone") {
  const Diagram tref = parsePd(kTrefoilPd);
  const SimplifyResult s = tref.simplify();
  CHECK(s.diagram.canonicalKey() == tref.canonicalKey());
  CHECK(s.kinkCount() == 0);
}

TEST_CASE("canonical keys ignore labels, see signs") {
  const Diagram tref = parsePd(kTrefoilPd);
  const Diagram shifted = parsePd("X[11,14,12,15];X[13,16,14,11];X[15,12,16,13]");
  CHECK(tref.canonicalKey() == shifted.canonicalKey());
  CHECK(tref.canonicalKey() != tref.switchCrossing(0).canonicalKey());
  CHECK(parsePd("O*2").canonicalKey() == parsePd("O*2").canonicalKey());
}

TEST_CASE("canonical key invariant under random relabelings") {
  const Diagram base = parsePd(kTrefoilPd);
  const std::string key = base.canonicalKey();
  std::mt19937 rng(4242);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<int> perm{1, 2, 3, 4, 5, 6};
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<PDCrossing> cs = base.crossings();
    for (auto& c : cs)
      for (int p = 0; p < 4; ++p) c.arcs[p] = perm[c.arcs[p] - 1] * 7 + 3;
    const Diagram relabeled = Diagram::make(std::move(cs), 0, true);
    CHECK(relabeled.canonicalKey() == key);
  }
}

TEST_CASE("basic stat inequalities on assorted diagrams") {
  const char* notations[] = {
      kTrefoilPd,        "braid:2|1 1 1",   "braid:2|1 1",  "braid:3|1 -2 1 -2",
      "braid:3|1 1 2 2", "braid:2|1 -1",    "O*2",          "X[1,1,2,2]",
      "braid:3|1 2 1 2", "braid:4|1 2 3 -1 -2",
  };
  for (const char* text : notations) {
    const Diagram d = parseNotation(text);
    const DiagramStats st = d.stats();
    CHECK(st.c == st.cPlus + st.cMinus);
    CHECK(st.linkComponents >= st.g);
    CHECK(st.seifertCircles >= st.g);
    if (!d.empty()) CHECK(st.g >= 1);

    for (std::size_t i = 0; i < static_cast<std::size_t>(st.c); ++i) {
      CHECK(d.switchCrossing(i).switchCrossing(i).canonicalKey() == d.canonicalKey());
      CHECK(d.smoothCrossing(i, SmoothMode::Oriented).crossingCount() == st.c - 1);
      CHECK(d.smoothCrossing(i, SmoothMode::Disoriented).crossingCount() == st.c - 1);
    }
    const SimplifyResult s = d.simplify();
    CHECK(s.diagram.simplify().diagram.canonicalKey() == s.diagram.canonicalKey());
  }
}

TEST_CASE("mirroring flips every sign") {
  const Diagram tref = parseBraid("braid:2|1 1 1");
  const Diagram mir = tref.mirrored();
  CHECK(mir.stats().writhe == -3);
  CHECK(mir.canonicalKey() == parseBraid("braid:2|-1 -1 -1").canonicalKey());
}

TEST_CASE("adding kinks") {
  const Diagram tref = parseBraid("braid:2|1 1 1");
  const Diagram kinked = tref.withKink(-1);
  CHECK(kinked.crossingCount() == 4);
  CHECK(kinked.stats().writhe == 2);
  const SimplifyResult s = kinked.simplify();
  CHECK(s.kinkMinus == 1);
  CHECK(s.diagram.canonicalKey() == tref.canonicalKey());

  const Diagram fromLoop = parsePd("O*1").withKink(+1);
  CHECK(fromLoop.crossingCount() == 1);
  CHECK(fromLoop.stats().writhe == 1);
}
