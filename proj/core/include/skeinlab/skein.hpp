#pragma once

#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <utility>

#include "skeinlab/diagram.hpp"
#include "skeinlab/laurent.hpp"
#include "skeinlab/twovar.hpp"

namespace skeinlab {

/// Crossing caps for the engines. The SKEINLAB_CAP environment variable
/// overrides all three at once.
struct EngineConfig {
  long bracketCap = 16;
  long homflyCap = 14;
  long dubrovnikCap = 12;

  static EngineConfig fromEnv();
};

/// Shared memo for the skein recursions, keyed on canonical diagram keys.
/// Concurrent read/insert with last-writer-wins; cached values are
/// recomputation-identical, so races are benign.
class MemoCache {
 public:
  std::optional<TwoVarLaurent> get(const std::string& key) const;
  void put(const std::string& key, TwoVarLaurent value);
  std::size_t size() const;

 private:
  mutable std::shared_mutex mx_;
  std::unordered_map<std::string, TwoVarLaurent> map_;
};

/// Loop counts of the all-A and all-B bracket states (free loops included).
std::pair<long, long> bracketStateLoops(const Diagram& d);

/// State sum over all 2^c A/B smoothings, normalized so the unknot maps
/// to 1. Throws DiagramTooLarge above the cap.
LaurentPoly kauffmanBracket(const Diagram& d, long cap = 16);

/// V = (-A^3)^(-w) <d> rewritten in q via q = A^(-2).
LaurentPoly jones(const Diagram& d, long cap = 16);

/// Skein relation alpha^(-1) P(K+) - alpha P(K-) = z P(K0); the two-unlink
/// evaluates to the loop value delta = (alpha^(-1) - alpha)/z, and the a = 1
/// specialization is the Jones polynomial.
TwoVarLaurent homfly(const Diagram& d, MemoCache* cache = nullptr, long cap = 14);

struct DubrovnikPair {
  TwoVarLaurent dPoly;  // regular-isotopy polynomial D
  TwoVarLaurent yPoly;  // Y = alpha^(-w) D
};

/// Four-term skein D+ - D- = z(D= - D)(), kink relations D<+> = alpha D,
/// loop value mu = z^(-1)(alpha - alpha^(-1)) + 1.
DubrovnikPair dubrovnik(const Diagram& d, MemoCache* cache = nullptr, long cap = 12);

TwoVarLaurent homflyLoopValue();
TwoVarLaurent dubrovnikLoopValue();

}  // namespace skeinlab
