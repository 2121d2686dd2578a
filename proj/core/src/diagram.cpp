#include "skeinlab/diagram.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <set>
#include <sstream>

#include "skeinlab/errors.hpp"

namespace skeinlab {

namespace {

struct Slot {
  int ci = -1;
  int pos = -1;
  bool operator==(const Slot&) const = default;
  bool operator<(const Slot& o) const { return ci != o.ci ? ci < o.ci : pos < o.pos; }
};

using Occurrences = std::map<int, std::array<Slot, 2>>;

Occurrences occurrencesOf(const std::vector<PDCrossing>& cs) {
  std::map<int, std::vector<Slot>> raw;
  for (int i = 0; i < static_cast<int>(cs.size()); ++i) {
    for (int p = 0; p < 4; ++p) {
      if (cs[i].arcs[p] < 1) throw ArcCountError("arc labels must be positive integers");
      raw[cs[i].arcs[p]].push_back({i, p});
    }
  }
  Occurrences occ;
  for (auto& [label, slots] : raw) {
    if (slots.size() != 2)
      throw ArcCountError("arc label " + std::to_string(label) + " appears " +
                          std::to_string(slots.size()) + " times, want exactly 2");
    occ[label] = {slots[0], slots[1]};
  }
  return occ;
}

Slot otherSlot(const Occurrences& occ, int label, const Slot& s) {
  const auto& pair = occ.at(label);
  return pair[0] == s ? pair[1] : pair[0];
}

bool slotIsIn(const PDCrossing& c, int pos) {
  if (pos == 0) return true;
  if (pos == 2) return false;
  return pos == c.overIn;
}

// Solves strand directions. Per crossing there is an under bit u (tuple is
// rotated by two when set) and an over bit o (over-strand enters at stored
// position 3 when set); a slot's in/out status is its bit XOR a positional
// base, and every arc must be in at exactly one of its two ends. The
// resulting XOR constraints are solved by propagation; free components are
// seeded from the stored values, so an already-consistent diagram is
// reproduced unchanged.
void solveOrientations(std::vector<PDCrossing>& cs, bool underAnchored) {
  const int n = static_cast<int>(cs.size());
  const Occurrences occ = occurrencesOf(cs);

  auto nodeOf = [](const Slot& s) { return 2 * s.ci + (s.pos % 2 ? 1 : 0); };
  auto baseOf = [](int pos) { return (pos == 0 || pos == 1) ? 1 : 0; };

  std::vector<std::vector<std::pair<int, int>>> adj(2 * n);
  for (const auto& [label, slots] : occ) {
    const int a = nodeOf(slots[0]);
    const int b = nodeOf(slots[1]);
    const int parity = 1 ^ baseOf(slots[0].pos) ^ baseOf(slots[1].pos);
    adj[a].push_back({b, parity});
    adj[b].push_back({a, parity});
  }

  std::vector<int> val(2 * n, -1);
  auto propagate = [&](int start) {
    std::queue<int> q;
    q.push(start);
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      for (const auto& [v, parity] : adj[u]) {
        const int want = val[u] ^ parity;
        if (val[v] == -1) {
          val[v] = want;
          q.push(v);
        } else if (val[v] != want) {
          throw OrientationError("inconsistent strand trace");
        }
      }
    }
  };

  if (underAnchored) {
    for (int i = 0; i < n; ++i) {
      if (val[2 * i] == -1) {
        val[2 * i] = 0;
        propagate(2 * i);
      } else if (val[2 * i] != 0) {
        throw OrientationError("under-strand direction contradicts the written PD order");
      }
    }
  }
  for (int node = 0; node < 2 * n; ++node) {
    if (val[node] != -1) continue;
    val[node] = (node % 2) ? (cs[node / 2].overIn == 3 ? 1 : 0) : 0;
    propagate(node);
  }

  for (int i = 0; i < n; ++i) {
    const bool u = val[2 * i] == 1;
    const bool o = val[2 * i + 1] == 1;
    if (u) {
      auto& a = cs[i].arcs;
      a = {a[2], a[3], a[0], a[1]};
      cs[i].overIn = o ? 1 : 3;
    } else {
      cs[i].overIn = o ? 3 : 1;
    }
  }
}

// Union-find over arc labels by minimum representative.
struct LabelDsu {
  std::map<int, int> parent;
  int find(int x) {
    auto it = parent.find(x);
    if (it == parent.end()) return x;
    int root = find(it->second);
    parent[x] = root;
    return root;
  }
  // returns true when the two ends already belonged to one class
  bool join(int x, int y) {
    int rx = find(x), ry = find(y);
    if (rx == ry) return true;
    if (rx > ry) std::swap(rx, ry);
    parent[ry] = rx;
    return false;
  }
};

using PosPairs = std::array<std::pair<int, int>, 2>;

PosPairs orientedPairs(const PDCrossing& c) {
  return c.sign() > 0 ? PosPairs{{{0, 1}, {2, 3}}} : PosPairs{{{0, 3}, {1, 2}}};
}

PosPairs disorientedPairs(const PDCrossing& c) {
  return c.sign() > 0 ? PosPairs{{{0, 3}, {1, 2}}} : PosPairs{{{0, 1}, {2, 3}}};
}

long circlesByPairing(const std::vector<PDCrossing>& cs,
                      const std::function<PosPairs(const PDCrossing&)>& pairsOf) {
  LabelDsu dsu;
  std::set<int> labels;
  for (const auto& c : cs)
    for (int p = 0; p < 4; ++p) labels.insert(c.arcs[p]);
  for (const auto& c : cs)
    for (const auto& [p1, p2] : pairsOf(c)) dsu.join(c.arcs[p1], c.arcs[p2]);
  std::set<int> roots;
  for (int l : labels) roots.insert(dsu.find(l));
  return static_cast<long>(roots.size());
}

// Removes the listed crossings and splices arcs per the join pairs. A join
// whose two ends already lie in one arc class closes a circle, which becomes
// a free loop.
Diagram spliceRemove(const Diagram& d, std::vector<int> removeIdx,
                     const std::vector<std::pair<int, int>>& joins, bool reorient) {
  LabelDsu dsu;
  long closed = 0;
  for (const auto& [x, y] : joins)
    if (dsu.join(x, y)) ++closed;
  std::sort(removeIdx.begin(), removeIdx.end());
  std::vector<PDCrossing> rest;
  rest.reserve(d.crossings().size() - removeIdx.size());
  for (int i = 0; i < static_cast<int>(d.crossings().size()); ++i) {
    if (std::binary_search(removeIdx.begin(), removeIdx.end(), i)) continue;
    PDCrossing c = d.crossings()[i];
    for (int p = 0; p < 4; ++p) c.arcs[p] = dsu.find(c.arcs[p]);
    rest.push_back(c);
  }
  (void)reorient;
  return Diagram::make(std::move(rest), d.freeLoops() + closed, false);
}

struct ComponentTrace {
  // per link component: its in-slots in traversal order, starting at the
  // in-slot of the component's lowest arc label; components sorted by their
  // lowest label
  std::vector<std::vector<Slot>> orbits;
  std::map<int, int> labelComp;
};

ComponentTrace traceComponents(const std::vector<PDCrossing>& cs) {
  const Occurrences occ = occurrencesOf(cs);
  ComponentTrace t;

  std::set<Slot> pending;
  for (int i = 0; i < static_cast<int>(cs.size()); ++i)
    for (int p = 0; p < 4; ++p)
      if (slotIsIn(cs[i], p)) pending.insert({i, p});

  auto nextInSlot = [&](const Slot& s) {
    const Slot outSlot{s.ci, s.pos ^ 2};
    const int outLabel = cs[outSlot.ci].arcs[outSlot.pos];
    return otherSlot(occ, outLabel, outSlot);
  };

  std::vector<std::pair<int, std::vector<Slot>>> raw;  // (lowest label, orbit)
  while (!pending.empty()) {
    const Slot start = *pending.begin();
    std::vector<Slot> orbit;
    Slot s = start;
    do {
      orbit.push_back(s);
      pending.erase(s);
      s = nextInSlot(s);
    } while (!(s == start));

    int low = cs[orbit[0].ci].arcs[orbit[0].pos];
    std::size_t lowAt = 0;
    for (std::size_t k = 1; k < orbit.size(); ++k) {
      const int lbl = cs[orbit[k].ci].arcs[orbit[k].pos];
      if (lbl < low) {
        low = lbl;
        lowAt = k;
      }
    }
    std::rotate(orbit.begin(), orbit.begin() + lowAt, orbit.end());
    raw.emplace_back(low, std::move(orbit));
  }
  std::sort(raw.begin(), raw.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t k = 0; k < raw.size(); ++k) {
    for (const Slot& s : raw[k].second)
      t.labelComp[cs[s.ci].arcs[s.pos]] = static_cast<int>(k);
    t.orbits.push_back(std::move(raw[k].second));
  }
  return t;
}

}  // namespace

Diagram Diagram::make(std::vector<PDCrossing> crossings, long freeLoops, bool underAnchored) {
  if (freeLoops < 0) throw ArcCountError("negative free-loop count");
  solveOrientations(crossings, underAnchored);
  Diagram d;
  d.crossings_ = std::move(crossings);
  d.freeLoops_ = freeLoops;
  return d;
}

DiagramStats Diagram::stats() const {
  DiagramStats s;
  s.c = crossingCount();
  for (const auto& c : crossings_) (c.sign() > 0 ? s.cPlus : s.cMinus)++;
  s.writhe = s.cPlus - s.cMinus;

  // projection pieces: crossings connected through shared arcs
  if (!crossings_.empty()) {
    std::vector<int> parent(crossings_.size());
    for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
    std::function<int(int)> find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& [label, slots] : occurrencesOf(crossings_)) {
      const int a = find(slots[0].ci), b = find(slots[1].ci);
      if (a != b) parent[a] = b;
    }
    std::set<int> roots;
    for (std::size_t i = 0; i < parent.size(); ++i) roots.insert(find(static_cast<int>(i)));
    s.g = static_cast<long>(roots.size());
  }
  s.g += freeLoops_;

  s.linkComponents = static_cast<long>(traceComponents(crossings_).orbits.size()) + freeLoops_;
  s.seifertCircles = circlesByPairing(crossings_, orientedPairs) + freeLoops_;
  return s;
}

long Diagram::murasugiStateComponents() const {
  auto mixed = [](const PDCrossing& c) {
    return c.sign() > 0 ? orientedPairs(c) : disorientedPairs(c);
  };
  return circlesByPairing(crossings_, mixed) + freeLoops_;
}

Diagram Diagram::switchCrossing(std::size_t i) const {
  if (i >= crossings_.size()) throw IndexOutOfRange("crossing index out of range");
  std::vector<PDCrossing> cs = crossings_;
  PDCrossing& c = cs[i];
  const auto& a = c.arcs;
  if (c.overIn == 1) {
    c.arcs = {a[1], a[2], a[3], a[0]};
    c.overIn = 3;
  } else {
    c.arcs = {a[3], a[0], a[1], a[2]};
    c.overIn = 1;
  }
  return make(std::move(cs), freeLoops_, false);
}

Diagram Diagram::smoothCrossing(std::size_t i, SmoothMode mode) const {
  if (i >= crossings_.size()) throw IndexOutOfRange("crossing index out of range");
  const PDCrossing& c = crossings_[i];
  const PosPairs pp = mode == SmoothMode::Oriented ? orientedPairs(c) : disorientedPairs(c);
  std::vector<std::pair<int, int>> joins;
  for (const auto& [p1, p2] : pp) joins.emplace_back(c.arcs[p1], c.arcs[p2]);
  return spliceRemove(*this, {static_cast<int>(i)}, joins, mode == SmoothMode::Disoriented);
}

Diagram Diagram::mirrored() const {
  std::vector<PDCrossing> cs = crossings_;
  for (auto& c : cs) {
    const auto a = c.arcs;
    if (c.overIn == 1) {
      c.arcs = {a[1], a[2], a[3], a[0]};
      c.overIn = 3;
    } else {
      c.arcs = {a[3], a[0], a[1], a[2]};
      c.overIn = 1;
    }
  }
  return make(std::move(cs), freeLoops_, false);
}

Diagram Diagram::withKink(int sign) const {
  if (crossings_.empty()) {
    if (freeLoops_ == 0) throw IndexOutOfRange("cannot kink an empty diagram");
    std::vector<PDCrossing> cs;
    cs.push_back(sign > 0 ? PDCrossing{{1, 1, 2, 2}, 3} : PDCrossing{{1, 2, 2, 1}, 1});
    return make(std::move(cs), freeLoops_ - 1, false);
  }
  const Occurrences occ = occurrencesOf(crossings_);
  const int low = occ.begin()->first;
  int maxLabel = occ.rbegin()->first;
  const int loop = ++maxLabel;
  const int cont = ++maxLabel;

  std::vector<PDCrossing> cs = crossings_;
  // reroute the head end of the lowest arc through the new curl
  for (const Slot& s : occ.at(low)) {
    if (slotIsIn(cs[s.ci], s.pos)) {
      cs[s.ci].arcs[s.pos] = cont;
      break;
    }
  }
  cs.push_back(sign > 0 ? PDCrossing{{loop, loop, cont, low}, 3}
                        : PDCrossing{{low, loop, loop, cont}, 1});
  return make(std::move(cs), freeLoops_, false);
}

SimplifyResult Diagram::simplify() const {
  SimplifyResult res{*this, 0, 0};
  for (;;) {
    Diagram& cur = res.diagram;
    const auto& cs = cur.crossings();
    bool moved = false;

    // R1: a crossing carrying one arc at two adjacent positions
    for (int i = 0; i < static_cast<int>(cs.size()) && !moved; ++i) {
      for (int p = 0; p < 4 && !moved; ++p) {
        if (cs[i].arcs[p] != cs[i].arcs[(p + 1) % 4]) continue;
        (cs[i].sign() > 0 ? res.kinkPlus : res.kinkMinus)++;
        const int m = cs[i].arcs[(p + 2) % 4];
        const int n = cs[i].arcs[(p + 3) % 4];
        res.diagram = spliceRemove(cur, {i}, {{m, n}}, false);
        moved = true;
      }
    }
    if (moved) continue;

    // R2: a two-sided face whose arcs run over-over and under-under.
    // Faces are traced with the rotation system: leave a slot along its arc,
    // arrive, turn one position counterclockwise.
    if (!cs.empty()) {
      const Occurrences occ = occurrencesOf(cs);
      std::set<Slot> pending;
      for (int i = 0; i < static_cast<int>(cs.size()); ++i)
        for (int p = 0; p < 4; ++p) pending.insert({i, p});
      while (!pending.empty() && !moved) {
        const Slot start = *pending.begin();
        std::vector<Slot> face;
        Slot s = start;
        do {
          face.push_back(s);
          pending.erase(s);
          const Slot across = otherSlot(occ, cs[s.ci].arcs[s.pos], s);
          s = Slot{across.ci, (across.pos + 1) % 4};
        } while (!(s == start));

        if (face.size() != 2) continue;
        const auto [X, p] = face[0];
        const auto [Y, q] = face[1];
        if (X == Y || (p + q) % 2 == 0) continue;

        // bigon arcs: arcs[X][p] between (X,p)-(Y,q+3), arcs[Y][q] between
        // (Y,q)-(X,p+3); splice the four outer ends pairwise
        const int mA = cs[X].arcs[p ^ 2];
        const int nA = cs[Y].arcs[((q + 3) % 4) ^ 2];
        const int mB = cs[Y].arcs[q ^ 2];
        const int nB = cs[X].arcs[((p + 3) % 4) ^ 2];
        res.diagram = spliceRemove(cur, {X, Y}, {{mA, nA}, {mB, nB}}, false);
        moved = true;
      }
    }
    if (!moved) return res;
  }
}

std::optional<std::size_t> Diagram::firstNonDescending() const {
  const ComponentTrace t = traceComponents(crossings_);
  std::vector<bool> seen(crossings_.size(), false);
  for (const auto& orbit : t.orbits) {
    for (const Slot& s : orbit) {
      if (seen[s.ci]) continue;
      seen[s.ci] = true;
      const bool under = (s.pos == 0 || s.pos == 2);
      if (under) return static_cast<std::size_t>(s.ci);
    }
  }
  return std::nullopt;
}

long Diagram::selfWritheSum() const {
  long sum = 0;
  const auto pcs = passComponents();
  for (std::size_t i = 0; i < pcs.size(); ++i)
    if (pcs[i].first == pcs[i].second) sum += crossings_[i].sign();
  return sum;
}

std::vector<std::pair<int, int>> Diagram::passComponents() const {
  const ComponentTrace t = traceComponents(crossings_);
  std::vector<std::pair<int, int>> out;
  out.reserve(crossings_.size());
  for (const auto& c : crossings_)
    out.emplace_back(t.labelComp.at(c.arcs[0]), t.labelComp.at(c.arcs[c.overIn]));
  return out;
}

bool Diagram::isAlternating() const {
  const ComponentTrace t = traceComponents(crossings_);
  for (const auto& orbit : t.orbits) {
    if (orbit.size() < 2) continue;
    for (std::size_t k = 0; k < orbit.size(); ++k) {
      const Slot& a = orbit[k];
      const Slot& b = orbit[(k + 1) % orbit.size()];
      const bool underA = (a.pos == 0 || a.pos == 2);
      const bool underB = (b.pos == 0 || b.pos == 2);
      if (underA == underB) return false;
    }
  }
  return true;
}

std::string Diagram::canonicalKey() const {
  // Pieces are canonicalized independently (minimum serialization over all
  // traversal seeds), then sorted; relabeling and crossing order cannot
  // affect the result. Census-scale diagrams keep this cheap.
  const int n = static_cast<int>(crossings_.size());
  std::vector<std::string> pieceKeys;
  if (n > 0) {
    const Occurrences occ = occurrencesOf(crossings_);
    std::vector<int> parent(n);
    for (int i = 0; i < n; ++i) parent[i] = i;
    std::function<int(int)> find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& [label, slots] : occ) {
      const int a = find(slots[0].ci), b = find(slots[1].ci);
      if (a != b) parent[a] = b;
    }
    std::map<int, std::vector<int>> pieces;
    for (int i = 0; i < n; ++i) pieces[find(i)].push_back(i);

    auto serializeFrom = [&](const std::vector<int>& piece, Slot seed) {
      std::map<int, int> arcNum;
      std::vector<int> crossNum(n, -1);
      std::vector<int> crossOrder;
      std::set<Slot> visited;
      int nextArc = 1;

      auto visitOrbit = [&](Slot start) {
        Slot s = start;
        do {
          visited.insert(s);
          const int entering = crossings_[s.ci].arcs[s.pos];
          if (!arcNum.count(entering)) arcNum[entering] = nextArc++;
          if (crossNum[s.ci] == -1) {
            crossNum[s.ci] = static_cast<int>(crossOrder.size());
            crossOrder.push_back(s.ci);
          }
          const Slot outSlot{s.ci, s.pos ^ 2};
          const int outLabel = crossings_[s.ci].arcs[outSlot.pos];
          if (!arcNum.count(outLabel)) arcNum[outLabel] = nextArc++;
          s = otherSlot(occ, outLabel, outSlot);
        } while (!(s == start));
      };

      visitOrbit(seed);
      for (;;) {
        // next start: unvisited in-slot at the earliest-visited crossing
        Slot best{-1, -1};
        int bestRank = -1;
        for (int ci : piece) {
          if (crossNum[ci] == -1) continue;
          for (int p = 0; p < 4; ++p) {
            if (!slotIsIn(crossings_[ci], p)) continue;
            const Slot cand{ci, p};
            if (visited.count(cand)) continue;
            const int rank = crossNum[ci];
            if (best.ci == -1 || rank < bestRank ||
                (rank == bestRank && cand < best)) {
              best = cand;
              bestRank = rank;
            }
          }
        }
        if (best.ci == -1) break;
        visitOrbit(best);
      }

      std::ostringstream os;
      for (int ci : crossOrder) {
        const auto& c = crossings_[ci];
        os << "X[" << arcNum.at(c.arcs[0]) << "," << arcNum.at(c.arcs[1]) << ","
           << arcNum.at(c.arcs[2]) << "," << arcNum.at(c.arcs[3]) << "]/" << c.overIn << ";";
      }
      return os.str();
    };

    for (const auto& [root, piece] : pieces) {
      std::string best;
      for (int ci : piece) {
        for (int p = 0; p < 4; ++p) {
          if (!slotIsIn(crossings_[ci], p)) continue;
          std::string s = serializeFrom(piece, {ci, p});
          if (best.empty() || s < best) best = std::move(s);
        }
      }
      pieceKeys.push_back(std::move(best));
    }
    std::sort(pieceKeys.begin(), pieceKeys.end());
  }

  std::ostringstream os;
  for (const auto& k : pieceKeys) os << k << "#";
  os << "O*" << freeLoops_;
  return os.str();
}

}  // namespace skeinlab
