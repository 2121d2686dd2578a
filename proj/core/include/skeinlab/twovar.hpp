#pragma once

#include <map>
#include <string>
#include <utility>

#include "skeinlab/laurent.hpp"
#include "skeinlab/rational.hpp"

namespace skeinlab {

/// Exact Laurent polynomial in (alpha, z). z-exponents may be negative
/// (loop-value contributions); those are cleared at specialization time.
class TwoVarLaurent {
 public:
  using Key = std::pair<Exp, Exp>;  // (alpha exponent, z exponent)

  TwoVarLaurent() = default;

  static TwoVarLaurent zero() { return {}; }
  static TwoVarLaurent constant(const Rational& c) { return monomial(c, 0, 0); }
  static TwoVarLaurent monomial(const Rational& c, Exp alphaExp, Exp zExp);
  static TwoVarLaurent alphaPow(Exp e) { return monomial(1, e, 0); }
  static TwoVarLaurent zPow(Exp e) { return monomial(1, 0, e); }

  bool isZero() const { return terms_.empty(); }
  const std::map<Key, Rational>& terms() const { return terms_; }
  Rational coeff(Exp alphaExp, Exp zExp) const;

  void addTerm(Exp alphaExp, Exp zExp, const Rational& c);

  TwoVarLaurent operator-() const;
  TwoVarLaurent& operator+=(const TwoVarLaurent& o);
  TwoVarLaurent& operator-=(const TwoVarLaurent& o);
  friend TwoVarLaurent operator+(TwoVarLaurent a, const TwoVarLaurent& b) { return a += b; }
  friend TwoVarLaurent operator-(TwoVarLaurent a, const TwoVarLaurent& b) { return a -= b; }
  friend TwoVarLaurent operator*(const TwoVarLaurent& a, const TwoVarLaurent& b);
  TwoVarLaurent& operator*=(const TwoVarLaurent& o) { return *this = *this * o; }
  TwoVarLaurent scaled(const Rational& c) const;
  TwoVarLaurent pow(long n) const;

  bool operator==(const TwoVarLaurent& o) const = default;

  /// Rendering: "<coef>*a^<i>*z^<j>" joined by " + ", terms in decreasing
  /// (alpha, z) exponent order; zero renders as "0".
  std::string toString() const;

 private:
  std::map<Key, Rational> terms_;
};

/// Substitutes alpha -> q^(2a), z -> q - q^(-1) for a half-integer a with
/// 2a = twiceA >= 0, clearing negative z-powers by exact division by
/// (q - q^(-1))^k. Throws NotLaurent when a negative z-power fails to clear.
LaurentPoly tvSpecialize(const TwoVarLaurent& p, long twiceA);

}  // namespace skeinlab
