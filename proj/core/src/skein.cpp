#include "skeinlab/skein.hpp"

#include <cstdlib>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <vector>

#include "skeinlab/errors.hpp"

namespace skeinlab {

EngineConfig EngineConfig::fromEnv() {
  EngineConfig cfg;
  if (const char* env = std::getenv("SKEINLAB_CAP")) {
    try {
      const long cap = std::stol(env);
      if (cap > 0) cfg.bracketCap = cfg.homflyCap = cfg.dubrovnikCap = cap;
    } catch (const std::exception&) {
      // ignore unparsable overrides
    }
  }
  return cfg;
}

std::optional<TwoVarLaurent> MemoCache::get(const std::string& key) const {
  std::shared_lock lock(mx_);
  auto it = map_.find(key);
  if (it == map_.end()) return std::nullopt;
  return it->second;
}

void MemoCache::put(const std::string& key, TwoVarLaurent value) {
  std::unique_lock lock(mx_);
  map_[key] = std::move(value);
}

std::size_t MemoCache::size() const {
  std::shared_lock lock(mx_);
  return map_.size();
}

namespace {

// Loops of one bracket state. stateBits bit i set = B-smoothing at crossing
// i; A pairs positions (0,1)(2,3), B pairs (0,3)(1,2).
long stateLoops(const std::vector<PDCrossing>& cs, const std::vector<int>& labelIndex,
                const std::map<int, int>& indexOf, unsigned long stateBits) {
  std::vector<int> parent(labelIndex.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto join = [&](int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[a] = b;
  };
  for (std::size_t i = 0; i < cs.size(); ++i) {
    const auto& a = cs[i].arcs;
    if (stateBits >> i & 1) {
      join(indexOf.at(a[0]), indexOf.at(a[3]));
      join(indexOf.at(a[1]), indexOf.at(a[2]));
    } else {
      join(indexOf.at(a[0]), indexOf.at(a[1]));
      join(indexOf.at(a[2]), indexOf.at(a[3]));
    }
  }
  long loops = 0;
  for (std::size_t k = 0; k < parent.size(); ++k)
    if (find(static_cast<int>(k)) == static_cast<int>(k)) ++loops;
  return loops;
}

struct LabelIndexing {
  std::vector<int> labels;
  std::map<int, int> indexOf;
};

LabelIndexing indexLabels(const std::vector<PDCrossing>& cs) {
  LabelIndexing li;
  std::set<int> seen;
  for (const auto& c : cs)
    for (int p = 0; p < 4; ++p) seen.insert(c.arcs[p]);
  for (int l : seen) {
    li.indexOf[l] = static_cast<int>(li.labels.size());
    li.labels.push_back(l);
  }
  return li;
}

}  // namespace

std::pair<long, long> bracketStateLoops(const Diagram& d) {
  const auto& cs = d.crossings();
  if (cs.empty()) return {d.freeLoops(), d.freeLoops()};
  const LabelIndexing li = indexLabels(cs);
  const long allA = stateLoops(cs, li.labels, li.indexOf, 0) + d.freeLoops();
  const unsigned long full = (cs.size() >= 64) ? ~0ul : ((1ul << cs.size()) - 1);
  const long allB = stateLoops(cs, li.labels, li.indexOf, full) + d.freeLoops();
  return {allA, allB};
}

LaurentPoly kauffmanBracket(const Diagram& d, long cap) {
  const long c = d.crossingCount();
  if (c > cap) throw DiagramTooLarge("bracket cap exceeded: " + std::to_string(c) + " > " +
                                     std::to_string(cap));
  if (d.empty()) return LaurentPoly::constant(Var::A, 1);

  const LaurentPoly delta =
      LaurentPoly::monomial(Var::A, -1, 2) + LaurentPoly::monomial(Var::A, -1, -2);
  const auto& cs = d.crossings();
  if (cs.empty()) return delta.pow(d.freeLoops() - 1);

  const LabelIndexing li = indexLabels(cs);
  const long maxLoops = static_cast<long>(li.labels.size()) + d.freeLoops();
  std::vector<LaurentPoly> deltaPow;
  deltaPow.reserve(maxLoops);
  deltaPow.push_back(LaurentPoly::constant(Var::A, 1));
  for (long k = 1; k < maxLoops; ++k) deltaPow.push_back(deltaPow.back() * delta);

  LaurentPoly sum(Var::A);
  for (unsigned long state = 0; state < (1ul << c); ++state) {
    const long bCount = static_cast<long>(__builtin_popcountl(state));
    const long aExp = (c - bCount) - bCount;
    const long loops = stateLoops(cs, li.labels, li.indexOf, state) + d.freeLoops();
    sum += deltaPow[loops - 1].shifted(aExp);
  }
  return sum;
}

LaurentPoly jones(const Diagram& d, long cap) {
  const LaurentPoly bracket = kauffmanBracket(d, cap);
  const long w = d.stats().writhe;
  // (-A^3)^(-w) <d>, then q = A^(-2)
  LaurentPoly out(Var::Q);
  const Rational signFactor = (w % 2 == 0) ? Rational(1) : Rational(-1);
  for (const auto& [m, coef] : bracket.terms()) {
    const Exp shifted = m - 3 * w;
    if (shifted % 2 != 0) throw std::logic_error("odd bracket exponent after writhe normalization");
    out.addTerm(-shifted / 2, coef * signFactor);
  }
  return out;
}

TwoVarLaurent homflyLoopValue() {
  TwoVarLaurent delta;
  delta.addTerm(-1, -1, 1);
  delta.addTerm(1, -1, -1);
  return delta;
}

TwoVarLaurent dubrovnikLoopValue() {
  TwoVarLaurent mu;
  mu.addTerm(1, -1, 1);
  mu.addTerm(-1, -1, -1);
  mu.addTerm(0, 0, 1);
  return mu;
}

namespace {

TwoVarLaurent homflyRec(const Diagram& d, MemoCache* cache) {
  const Diagram sd = d.simplify().diagram;  // R1 factors are silent here
  const std::string key = "H:" + sd.canonicalKey();
  if (cache) {
    if (auto hit = cache->get(key)) return *hit;
  }

  TwoVarLaurent val;
  const auto bad = sd.firstNonDescending();
  if (!bad) {
    const long ell = sd.stats().linkComponents;
    val = homflyLoopValue().pow(ell - 1);
  } else {
    const std::size_t i = *bad;
    const TwoVarLaurent pSwitch = homflyRec(sd.switchCrossing(i), cache);
    const TwoVarLaurent pSmooth = homflyRec(sd.smoothCrossing(i, SmoothMode::Oriented), cache);
    if (sd.crossings()[i].sign() > 0) {
      val = TwoVarLaurent::alphaPow(2) * pSwitch + TwoVarLaurent::monomial(1, 1, 1) * pSmooth;
    } else {
      val = TwoVarLaurent::alphaPow(-2) * pSwitch - TwoVarLaurent::monomial(1, -1, 1) * pSmooth;
    }
  }
  if (cache) cache->put(key, val);
  return val;
}

TwoVarLaurent dubrovnikRec(const Diagram& d, MemoCache* cache) {
  const SimplifyResult sr = d.simplify();
  const Diagram& sd = sr.diagram;
  const TwoVarLaurent kinkFactor = TwoVarLaurent::alphaPow(sr.kinkSum());
  const bool trivialFactor = sr.kinkSum() == 0;

  const std::string key = "D:" + sd.canonicalKey();
  if (cache) {
    if (auto hit = cache->get(key)) return trivialFactor ? *hit : kinkFactor * *hit;
  }

  TwoVarLaurent val;
  const auto bad = sd.firstNonDescending();
  if (!bad) {
    const long ell = sd.stats().linkComponents;
    val = dubrovnikLoopValue().pow(ell - 1) * TwoVarLaurent::alphaPow(sd.selfWritheSum());
  } else {
    const std::size_t i = *bad;
    const TwoVarLaurent dSwitch = dubrovnikRec(sd.switchCrossing(i), cache);
    const TwoVarLaurent dOriented = dubrovnikRec(sd.smoothCrossing(i, SmoothMode::Oriented), cache);
    const TwoVarLaurent dCross = dubrovnikRec(sd.smoothCrossing(i, SmoothMode::Disoriented), cache);
    const TwoVarLaurent z = TwoVarLaurent::zPow(1);
    if (sd.crossings()[i].sign() > 0) {
      val = dSwitch + z * (dOriented - dCross);
    } else {
      val = dSwitch - z * (dOriented - dCross);
    }
  }
  if (cache) cache->put(key, val);
  return trivialFactor ? val : kinkFactor * val;
}

}  // namespace

TwoVarLaurent homfly(const Diagram& d, MemoCache* cache, long cap) {
  if (d.crossingCount() > cap)
    throw DiagramTooLarge("homfly cap exceeded: " + std::to_string(d.crossingCount()) + " > " +
                          std::to_string(cap));
  if (d.empty()) return TwoVarLaurent::constant(1);
  return homflyRec(d, cache);
}

DubrovnikPair dubrovnik(const Diagram& d, MemoCache* cache, long cap) {
  if (d.crossingCount() > cap)
    throw DiagramTooLarge("dubrovnik cap exceeded: " + std::to_string(d.crossingCount()) + " > " +
                          std::to_string(cap));
  if (d.empty()) return {TwoVarLaurent::constant(1), TwoVarLaurent::constant(1)};
  const long w = d.stats().writhe;
  DubrovnikPair out;
  out.dPoly = dubrovnikRec(d, cache);
  out.yPoly = TwoVarLaurent::alphaPow(-w) * out.dPoly;
  return out;
}

}  // namespace skeinlab
