// Generates the bundled census: 2-bridge knots (crossing number <= 9) and
// 2-bridge links (<= 7) enumerated through positive continued fractions,
// torus braids, pretzels, Borromean rings, and a handful of unknot
// presentations. Entries are deduplicated by engine fingerprints with
// mirrors folded, and every construction is cross-checked (alternating,
// reduced, determinant = p) before it is emitted.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"
#include "skeinlab/diagram.hpp"
#include "skeinlab/errors.hpp"
#include "skeinlab/laurent.hpp"
#include "skeinlab/notation.hpp"
#include "skeinlab/skein.hpp"
#include "skeinlab/twovar.hpp"

using namespace skeinlab;
using nlohmann::ordered_json;

namespace {

struct Tangle {
  int nw = 0, ne = 0, sw = 0, se = 0;
  std::vector<PDCrossing> crossings;
  int next = 1;

  int fresh() { return next++; }
};

Tangle zeroTangle() {
  Tangle t;
  const int top = t.fresh();
  const int bottom = t.fresh();
  t.nw = t.ne = top;
  t.sw = t.se = bottom;
  return t;
}

// One crossing under the tangle's bottom endpoints. The tuple is written
// with the under-strand pair at even positions; Diagram::make re-solves the
// actual directions at the end.
void twistBottom(Tangle& t, bool overDiagonalTLBR) {
  const int tl = t.sw, tr = t.se;
  const int bl = t.fresh(), br = t.fresh();
  if (overDiagonalTLBR) {
    t.crossings.push_back({{tr, tl, bl, br}, 3});  // under pair {TR, BL}
  } else {
    t.crossings.push_back({{tl, bl, br, tr}, 3});  // under pair {TL, BR}
  }
  t.sw = bl;
  t.se = br;
}

// One crossing right of the tangle's right endpoints.
void twistRight(Tangle& t, bool overDiagonalLTRB) {
  const int lt = t.ne, lb = t.se;
  const int rt = t.fresh(), rb = t.fresh();
  if (overDiagonalLTRB) {
    t.crossings.push_back({{rt, lt, lb, rb}, 3});  // under pair {RT, LB}
  } else {
    t.crossings.push_back({{lt, lb, rb, rt}, 3});  // under pair {LT, RB}
  }
  t.ne = rt;
  t.se = rb;
}

Diagram closeTangle(Tangle t, std::pair<int, int> joinA, std::pair<int, int> joinB) {
  std::map<int, int> rep;
  auto find = [&](int x) {
    while (rep.count(x)) x = rep[x];
    return x;
  };
  long loops = 0;
  for (const auto& [a, b] : {joinA, joinB}) {
    const int ra = find(a), rb = find(b);
    if (ra == rb) {
      ++loops;
    } else {
      rep[std::max(ra, rb)] = std::min(ra, rb);
    }
  }
  for (auto& c : t.crossings)
    for (int p = 0; p < 4; ++p) c.arcs[p] = find(c.arcs[p]);
  return Diagram::make(std::move(t.crossings), loops, false);
}

// Rational tangle for the positive continued fraction [a1, a2, ...]:
// regions alternate bottom twists and right twists, numerator closure.
Diagram rationalDiagram(const std::vector<int>& cf, bool hBottom, bool hRight) {
  Tangle t = zeroTangle();
  for (std::size_t i = 0; i < cf.size(); ++i) {
    for (int k = 0; k < cf[i]; ++k) {
      if (i % 2 == 0)
        twistBottom(t, hBottom);
      else
        twistRight(t, hRight);
    }
  }
  return closeTangle(std::move(t), {t.nw, t.ne}, {t.sw, t.se});
}

// Pretzel: vertical twist columns joined top and bottom nearest-neighbor,
// outer arcs wrapping around.
Diagram pretzelDiagram(const std::vector<int>& twists) {
  Tangle t;  // reuse the arc allocator
  t.next = 1;
  std::vector<std::pair<int, int>> tops, bottoms;
  for (int k : twists) {
    const int count = std::abs(k);
    const bool over = k > 0;
    int lt = t.fresh(), rt = t.fresh();
    tops.emplace_back(lt, rt);
    for (int i = 0; i < count; ++i) {
      const int lb = t.fresh(), rb = t.fresh();
      if (over) {
        t.crossings.push_back({{rt, lt, lb, rb}, 3});  // under pair {RT, LB}... top pair is (lt, rt)
      } else {
        t.crossings.push_back({{lt, lb, rb, rt}, 3});
      }
      lt = lb;
      rt = rb;
    }
    bottoms.emplace_back(lt, rt);
  }

  std::map<int, int> rep;
  auto find = [&](int x) {
    while (rep.count(x)) x = rep[x];
    return x;
  };
  long loops = 0;
  auto join = [&](int a, int b) {
    const int ra = find(a), rb = find(b);
    if (ra == rb)
      ++loops;
    else
      rep[std::max(ra, rb)] = std::min(ra, rb);
  };
  const std::size_t m = twists.size();
  for (std::size_t j = 0; j + 1 < m; ++j) {
    join(tops[j].second, tops[j + 1].first);
    join(bottoms[j].second, bottoms[j + 1].first);
  }
  join(tops[0].first, tops[m - 1].second);
  join(bottoms[0].first, bottoms[m - 1].second);

  auto cs = t.crossings;
  for (auto& c : cs)
    for (int p = 0; p < 4; ++p) c.arcs[p] = find(c.arcs[p]);
  return Diagram::make(std::move(cs), loops, false);
}

// continued fraction value a1 + 1/(a2 + 1/(...)) as p/q in lowest terms
std::pair<long, long> cfValue(const std::vector<int>& cf) {
  long p = cf.back(), q = 1;
  for (auto it = cf.rbegin() + 1; it != cf.rend(); ++it) {
    const long np = *it * p + q;
    q = p;
    p = np;
  }
  return {p, q};
}

long modInverse(long a, long m) {
  long t = 0, newT = 1, r = m, newR = ((a % m) + m) % m;
  while (newR != 0) {
    const long quo = r / newR;
    std::swap(t = t - quo * newT, newT);
    std::swap(r = r - quo * newR, newR);
  }
  return ((t % m) + m) % m;
}

// Schubert class representative: min of {q, q^-1, p-q, (p-q)^-1} mod p
long schubertCanonical(long p, long q) {
  q = ((q % p) + p) % p;
  std::set<long> cls{q, p - q};
  if (std::gcd(q, p) == 1) {
    cls.insert(modInverse(q, p));
    cls.insert(p - modInverse(q, p));
  }
  return *cls.begin();
}

// |V(-1)| via q = i (t = -1): sum c_k i^k as a Gaussian integer
long determinantOf(const LaurentPoly& v) {
  Rational re(0), im(0);
  for (const auto& [k, c] : v.terms()) {
    const long r = ((k % 4) + 4) % 4;
    if (r == 0) re += c;
    if (r == 1) im += c;
    if (r == 2) re -= c;
    if (r == 3) im -= c;
  }
  const Rational mag2 = re * re + im * im;
  const long m2 = static_cast<long>(mag2.get_num().get_si());
  const long root = static_cast<long>(std::lround(std::sqrt(static_cast<double>(m2))));
  if (root * root != m2) throw std::logic_error("determinant is not an integer");
  return root;
}

struct Candidate {
  std::string name;
  std::string notation;  // PD or braid text, as stored in the census
  Diagram diagram;
  std::optional<bool> unknot;
  std::optional<std::string> pinnedJones;
  int priority = 0;  // lower wins when fingerprints collide
};

struct Generated {
  std::vector<Candidate> kept;
  std::map<std::string, std::string> fingerprintOwner;
};

std::string fingerprint(const Diagram& d, MemoCache* cache) {
  const std::string j = jones(d, 16).toString();
  const std::string h = homfly(d, cache, 16).toString();
  return j + "|" + h;
}

std::string foldedFingerprint(const Diagram& d, MemoCache* cache) {
  const std::string a = fingerprint(d, cache);
  const std::string b = fingerprint(d.mirrored(), cache);
  return std::min(a, b) + "||" + std::to_string(d.stats().linkComponents);
}

}  // namespace

int main(int argc, char** argv) {
  std::string outPath = "data/census.json";
  if (argc > 1) outPath = argv[1];

  MemoCache cache;
  std::vector<Candidate> candidates;

  // -- unknot and kinked presentations ------------------------------------
  auto addNotation = [&](const std::string& name, const std::string& notation,
                         std::optional<bool> unknot, std::optional<std::string> jonesPin,
                         int priority) {
    Candidate c;
    c.name = name;
    c.notation = notation;
    c.diagram = parseNotation(notation);
    c.unknot = unknot;
    c.pinnedJones = std::move(jonesPin);
    c.priority = priority;
    candidates.push_back(std::move(c));
  };

  addNotation("unknot", "O*1", true, std::string("1*q^0"), 0);
  addNotation("unknot_kink_plus", "X[1,1,2,2]", true, std::string("1*q^0"), 0);
  addNotation("unknot_kinks_opposite", "X[1,1,2,3];X[2,4,4,3]", true, std::string("1*q^0"), 0);
  addNotation("unknot_braid_r2", "braid:2|1 1 -1", true, std::string("1*q^0"), 0);
  addNotation("unknot_braid_plait", "braid:3|1 -2", true, std::string("1*q^0"), 0);
  addNotation("unlink_2", "O*2", std::nullopt, std::string("-1*q^1 + -1*q^-1"), 0);

  // the spec's standard minimal trefoil PD (left-handed)
  addNotation("3_1", "X[1,4,2,5];X[3,6,4,1];X[5,2,6,3]", false,
              std::string("1*q^-2 + 1*q^-6 + -1*q^-8"), 0);
  addNotation("3_1_braid_mirror", "braid:2|1 1 1", false,
              std::string("1*q^2 + 1*q^6 + -1*q^8"), 1);
  addNotation("hopf_plus", "braid:2|1 1", std::nullopt, std::string("-1*q^1 + -1*q^5"), 0);
  addNotation("hopf_minus", "braid:2|-1 -1", std::nullopt, std::string("-1*q^-1 + -1*q^-5"), 1);

  // -- 2-bridge enumeration ------------------------------------------------
  std::map<std::pair<long, long>, std::vector<int>> classes;  // (p, canonical q) -> first cf
  for (int c = 2; c <= 9; ++c) {
    // compositions of c with last part >= 2
    std::vector<std::vector<int>> stack{{}};
    while (!stack.empty()) {
      std::vector<int> head = stack.back();
      stack.pop_back();
      const int used = std::accumulate(head.begin(), head.end(), 0);
      if (used == c) {
        if (!head.empty() && head.back() >= 2) {
          const auto [p, q] = cfValue(head);
          const auto key = std::make_pair(p, schubertCanonical(p, q));
          if (!classes.count(key)) classes[key] = head;
        }
        continue;
      }
      for (int part = 1; part <= c - used; ++part) {
        auto next = head;
        next.push_back(part);
        stack.push_back(std::move(next));
      }
    }
  }

  const std::map<std::pair<long, long>, std::string> aliases{
      {{3, 1}, "3_1"},   {{5, 2}, "4_1"},   {{5, 1}, "5_1"},   {{7, 2}, "5_2"},
      {{9, 2}, "6_1"},   {{11, 3}, "6_2"},  {{13, 5}, "6_3"},  {{7, 1}, "7_1"},
      {{2, 1}, "L2a1"},  {{4, 1}, "L4a1"},  {{8, 3}, "L5a1"}};

  int rationalKnots = 0, rationalLinks = 0;
  std::map<int, int> knotCountByCrossing;
  for (const auto& [key, cf] : classes) {
    const auto [p, qc] = key;
    const int crossings = std::accumulate(cf.begin(), cf.end(), 0);
    const bool isKnot = p % 2 == 1;
    if (p < 2) continue;             // [1,...] degenerate unknots
    if (isKnot && crossings < 3) continue;
    if (!isKnot && crossings > 7) continue;  // links only up to 7 crossings

    const Diagram d = rationalDiagram(cf, true, true);
    const DiagramStats st = d.stats();
    if (st.c != crossings) throw std::logic_error("rational builder lost crossings");
    if (!d.isAlternating()) throw std::logic_error("rational diagram not alternating");
    if (d.simplify().diagram.crossingCount() != st.c)
      throw std::logic_error("rational diagram not reduced");
    const long det = determinantOf(jones(d, 16));
    if (det != p)
      throw std::logic_error("determinant " + std::to_string(det) + " != p " + std::to_string(p) +
                             " for b(" + std::to_string(p) + "," + std::to_string(qc) + ")");

    std::string name = "b(" + std::to_string(p) + "," + std::to_string(qc) + ")";
    if (auto it = aliases.find(key); it != aliases.end()) name = it->second;
    if (name == "3_1") continue;  // already pinned from the spec's PD

    Candidate cand;
    cand.name = name;
    cand.notation = serializeDiagram(d);
    cand.diagram = d;
    if (isKnot) cand.unknot = false;
    cand.priority = 2;
    candidates.push_back(std::move(cand));
    isKnot ? ++rationalKnots : ++rationalLinks;
    if (isKnot) ++knotCountByCrossing[crossings];
  }

  std::cerr << "2-bridge: " << rationalKnots << " knots, " << rationalLinks << " links\n";
  for (const auto& [c, n] : knotCountByCrossing)
    std::cerr << "  c=" << c << ": " << n << " knots\n";

  // -- torus braids ---------------------------------------------------------
  auto torusBraid3 = [](int copies) {
    std::string s = "braid:3|";
    for (int i = 0; i < copies; ++i) s += (i ? " 1 2" : "1 2");
    return s;
  };
  addNotation("8_19", torusBraid3(4), false, std::nullopt, 1);       // T(3,4)
  addNotation("L6n1", torusBraid3(3), std::nullopt, std::nullopt, 1);  // T(3,3)
  addNotation("10_124", torusBraid3(5), false, std::nullopt, 1);     // T(3,5), performance entry

  // -- Borromean rings and figure-eight as braid closures -------------------
  addNotation("L6a4", "braid:3|1 -2 1 -2 1 -2", std::nullopt, std::nullopt, 1);
  addNotation("4_1_braid", "braid:3|1 -2 1 -2", false,
              std::string("1*q^4 + -1*q^2 + 1*q^0 + -1*q^-2 + 1*q^-4"), 3);

  // -- pretzels --------------------------------------------------------------
  const std::vector<std::vector<int>> pretzels{
      {2, 2, 2}, {3, 2, 2}, {3, 3, 2}, {3, 3, 3}, {4, 3, 2}, {5, 2, 2},
      {3, 3, -2}, {3, -3, 2}, {5, 3, -2}};
  for (const auto& tw : pretzels) {
    std::string name = "P(";
    for (std::size_t i = 0; i < tw.size(); ++i)
      name += (i ? "," : "") + std::to_string(tw[i]);
    name += ")";
    Candidate cand;
    cand.name = name;
    cand.diagram = pretzelDiagram(tw);
    cand.notation = serializeDiagram(cand.diagram);
    if (cand.diagram.stats().linkComponents == 1) cand.unknot = false;
    cand.priority = 4;
    candidates.push_back(std::move(cand));
  }

  // -- invariance companions (same knots, different diagrams) ---------------
  addNotation("3_1_kinked", "braid:3|-1 -1 -1 -2", false, std::nullopt, 5);
  addNotation("4_1_stabilized", "braid:4|1 -2 1 -2 3", false, std::nullopt, 5);

  // -- fingerprint dedupe ----------------------------------------------------
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const Candidate& a, const Candidate& b) { return a.priority < b.priority; });
  std::map<std::string, std::string> owner;
  std::vector<Candidate> kept;
  for (auto& cand : candidates) {
    if (cand.diagram.crossingCount() > 10) {  // performance entry: jones-only fingerprint
      kept.push_back(std::move(cand));
      continue;
    }
    const std::string fp = foldedFingerprint(cand.diagram, &cache);
    const auto it = owner.find(fp);
    if (it != owner.end()) {
      if (cand.priority >= 5) {  // deliberate duplicates live alongside
        kept.push_back(std::move(cand));
      } else {
        std::cerr << "dedupe: " << cand.name << " == " << it->second << "\n";
      }
      continue;
    }
    owner[fp] = cand.name;
    kept.push_back(std::move(cand));
  }

  ordered_json arr = ordered_json::array();
  for (const auto& cand : kept) {
    ordered_json row;
    row["name"] = cand.name;
    row["notation"] = cand.notation;
    if (cand.pinnedJones) row["jones"] = *cand.pinnedJones;
    if (cand.unknot) row["unknot"] = *cand.unknot;
    arr.push_back(std::move(row));
  }

  std::ofstream out(outPath);
  if (!out) {
    std::cerr << "cannot write " << outPath << "\n";
    return 1;
  }
  out << arr.dump(2) << "\n";
  std::cerr << "census: " << kept.size() << " entries -> " << outPath << "\n";
  return 0;
}
