#include "skeinlab/twovar.hpp"

#include <sstream>
#include <stdexcept>

#include "skeinlab/errors.hpp"

namespace skeinlab {

TwoVarLaurent TwoVarLaurent::monomial(const Rational& c, Exp alphaExp, Exp zExp) {
  TwoVarLaurent p;
  if (c != 0) p.terms_[{alphaExp, zExp}] = c;
  return p;
}

Rational TwoVarLaurent::coeff(Exp alphaExp, Exp zExp) const {
  auto it = terms_.find({alphaExp, zExp});
  return it == terms_.end() ? Rational(0) : it->second;
}

void TwoVarLaurent::addTerm(Exp alphaExp, Exp zExp, const Rational& c) {
  if (c == 0) return;
  Key k{alphaExp, zExp};
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_.emplace(k, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

TwoVarLaurent TwoVarLaurent::operator-() const {
  TwoVarLaurent r;
  for (const auto& [k, c] : terms_) r.terms_[k] = -c;
  return r;
}

TwoVarLaurent& TwoVarLaurent::operator+=(const TwoVarLaurent& o) {
  for (const auto& [k, c] : o.terms_) addTerm(k.first, k.second, c);
  return *this;
}

TwoVarLaurent& TwoVarLaurent::operator-=(const TwoVarLaurent& o) {
  for (const auto& [k, c] : o.terms_) addTerm(k.first, k.second, -c);
  return *this;
}

TwoVarLaurent operator*(const TwoVarLaurent& a, const TwoVarLaurent& b) {
  TwoVarLaurent r;
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_)
      r.addTerm(ka.first + kb.first, ka.second + kb.second, ca * cb);
  return r;
}

TwoVarLaurent TwoVarLaurent::scaled(const Rational& c) const {
  TwoVarLaurent r;
  if (c == 0) return r;
  for (const auto& [k, k2] : terms_) r.terms_[k] = k2 * c;
  return r;
}

TwoVarLaurent TwoVarLaurent::pow(long n) const {
  if (n < 0) throw std::domain_error("TwoVarLaurent::pow: negative power");
  TwoVarLaurent acc = constant(1);
  TwoVarLaurent base = *this;
  while (n > 0) {
    if (n & 1) acc *= base;
    if (n >>= 1) base *= base;
  }
  return acc;
}

std::string TwoVarLaurent::toString() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    os << ratToString(it->second) << "*a^" << it->first.first << "*z^" << it->first.second;
  }
  return os.str();
}

LaurentPoly tvSpecialize(const TwoVarLaurent& p, long twiceA) {
  if (twiceA < 0) throw std::domain_error("tvSpecialize: 2a must be nonnegative");
  if (p.isZero()) return LaurentPoly(Var::Q);

  // Group by z-exponent: p = sum_j z^j A_j(alpha). With alpha -> q^(2a) and
  // z -> q - q^(-1), negative j is cleared by one exact division at the end.
  std::map<Exp, LaurentPoly> byZ;
  for (const auto& [k, c] : p.terms()) {
    auto [ae, ze] = k;
    auto it = byZ.find(ze);
    if (it == byZ.end()) it = byZ.emplace(ze, LaurentPoly(Var::Q)).first;
    it->second.addTerm(twiceA * ae, c);
  }
  const LaurentPoly zq = LaurentPoly::monomial(Var::Q, 1, 1) + LaurentPoly::monomial(Var::Q, -1, -1);
  const Exp jMin = byZ.begin()->first;
  const Exp lift = jMin < 0 ? -jMin : 0;
  LaurentPoly num(Var::Q);
  for (const auto& [j, aj] : byZ) num += aj * zq.pow(j + lift);
  if (lift == 0) return num;
  try {
    return num.divideExact(zq.pow(lift));
  } catch (const NotDivisible&) {
    throw NotLaurent("negative z-powers do not clear under specialization");
  }
}

}  // namespace skeinlab
