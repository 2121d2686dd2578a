#include "skeinlab/laurent.hpp"

#include <sstream>

#include "skeinlab/errors.hpp"

namespace skeinlab {

const char* varName(Var v) { return v == Var::Q ? "q" : "A"; }

LaurentPoly LaurentPoly::constant(Var v, const Rational& c) {
  return monomial(v, c, 0);
}

LaurentPoly LaurentPoly::monomial(Var v, const Rational& c, Exp e) {
  LaurentPoly p(v);
  if (c != 0) p.terms_[e] = c;
  return p;
}

Rational LaurentPoly::coeff(Exp e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void LaurentPoly::addTerm(Exp e, const Rational& c) {
  if (c == 0) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void requireSameVar(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.var() != b.var())
    throw VariableMismatch("laurent arithmetic across different variables");
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r(var_);
  for (const auto& [e, c] : terms_) r.terms_[e] = -c;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  requireSameVar(*this, o);
  for (const auto& [e, c] : o.terms_) addTerm(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  requireSameVar(*this, o);
  for (const auto& [e, c] : o.terms_) addTerm(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  requireSameVar(a, b);
  LaurentPoly r(a.var());
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.addTerm(ea + eb, ca * cb);
  return r;
}

LaurentPoly LaurentPoly::scaled(const Rational& c) const {
  LaurentPoly r(var_);
  if (c == 0) return r;
  for (const auto& [e, k] : terms_) r.terms_[e] = k * c;
  return r;
}

LaurentPoly LaurentPoly::shifted(Exp e) const {
  LaurentPoly r(var_);
  for (const auto& [k, c] : terms_) r.terms_[k + e] = c;
  return r;
}

LaurentPoly LaurentPoly::pow(long n) const {
  if (n < 0) throw std::domain_error("LaurentPoly::pow: negative power");
  LaurentPoly acc = constant(var_, 1);
  LaurentPoly base = *this;
  while (n > 0) {
    if (n & 1) acc *= base;
    if (n >>= 1) base *= base;
  }
  return acc;
}

LaurentPoly::Support LaurentPoly::support() const {
  if (terms_.empty()) throw ZeroPolynomial("support of the zero polynomial");
  Support s;
  s.min = terms_.begin()->first;
  s.max = terms_.rbegin()->first;
  for (const auto& [e, c] : terms_) s.exponents.insert(e);
  return s;
}

LaurentPoly LaurentPoly::divideExact(const LaurentPoly& divisor) const {
  requireSameVar(*this, divisor);
  if (divisor.isZero()) throw NotDivisible("division by the zero polynomial");
  if (isZero()) return LaurentPoly(var_);

  // Eliminate from the top. An exact quotient has all exponents in
  // [aBot - dBot, aTop - dTop]; falling below that floor means a nonzero
  // remainder, which also bounds the number of iterations.
  const Exp dTop = divisor.terms_.rbegin()->first;
  const Exp dBot = divisor.terms_.begin()->first;
  const Exp quotFloor = terms_.begin()->first - dBot;
  const Rational& dLead = divisor.terms_.rbegin()->second;

  LaurentPoly rem = *this;
  LaurentPoly quot(var_);
  while (!rem.isZero()) {
    const Exp shift = rem.terms_.rbegin()->first - dTop;
    if (shift < quotFloor) throw NotDivisible("nonzero remainder");
    const Rational c = rem.terms_.rbegin()->second / dLead;
    quot.addTerm(shift, c);
    rem -= divisor.shifted(shift).scaled(c);
  }
  return quot;
}

std::string LaurentPoly::toString() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    os << ratToString(it->second) << "*" << varName(var_) << "^" << it->first;
  }
  return os.str();
}

}  // namespace skeinlab
