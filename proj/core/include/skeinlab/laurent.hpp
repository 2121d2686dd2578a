#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "skeinlab/rational.hpp"

namespace skeinlab {

/// Variable tag for one-variable Laurent polynomials. Exponent units:
/// a Q-exponent k stands for t^(k/2) (q = t^(1/2)); an A-exponent m is the
/// bracket variable, related by q = A^(-2), t = A^(-4).
enum class Var { Q, A };

const char* varName(Var v);

/// Exact Laurent polynomial in one variable on the integer exponent lattice,
/// with arbitrary-precision rational coefficients. No zero terms are stored.
class LaurentPoly {
 public:
  explicit LaurentPoly(Var v = Var::Q) : var_(v) {}

  static LaurentPoly zero(Var v) { return LaurentPoly(v); }
  static LaurentPoly constant(Var v, const Rational& c);
  static LaurentPoly monomial(Var v, const Rational& c, Exp e);

  Var var() const { return var_; }
  bool isZero() const { return terms_.empty(); }
  const std::map<Exp, Rational>& terms() const { return terms_; }
  Rational coeff(Exp e) const;

  void addTerm(Exp e, const Rational& c);

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  LaurentPoly scaled(const Rational& c) const;
  LaurentPoly shifted(Exp e) const;  // multiply by var^e
  LaurentPoly pow(long n) const;     // n >= 0

  bool operator==(const LaurentPoly& o) const = default;

  /// Exact support. Throws ZeroPolynomial on the zero polynomial.
  struct Support {
    Exp min = 0;
    Exp max = 0;
    std::set<Exp> exponents;
    Exp span() const { return max - min; }
  };
  Support support() const;

  /// Quotient of an exact division; throws NotDivisible when a nonzero
  /// remainder appears.
  LaurentPoly divideExact(const LaurentPoly& divisor) const;

  /// Bit-exact rendering: terms in decreasing exponent order,
  /// "<coef>*q^<exp>" joined by " + "; zero renders as "0".
  std::string toString() const;

 private:
  Var var_;
  std::map<Exp, Rational> terms_;
};

void requireSameVar(const LaurentPoly& a, const LaurentPoly& b);

}  // namespace skeinlab
