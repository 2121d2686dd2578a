#include "skeinlab/determine.hpp"

#include <algorithm>
#include <stdexcept>

#include "skeinlab/errors.hpp"
#include "skeinlab/twovar.hpp"

namespace skeinlab {

namespace {

std::vector<Rational> tExponents(const std::vector<Exp>& qExps) {
  std::vector<Rational> e;
  e.reserve(qExps.size());
  for (Exp q : qExps) {
    Rational r(q, 2);
    r.canonicalize();
    e.push_back(r);
  }
  return e;
}

// Exact Gaussian elimination, partial (first nonzero) pivoting.
std::vector<Rational> solveLinear(std::vector<std::vector<Rational>> m,
                                  std::vector<Rational> rhs) {
  const std::size_t n = m.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) throw std::logic_error("singular system (duplicate window exponents?)");
    std::swap(m[col], m[pivot]);
    std::swap(rhs[col], rhs[pivot]);
    const Rational inv = Rational(1) / m[col][col];
    for (std::size_t k = col; k < n; ++k) m[col][k] *= inv;
    rhs[col] *= inv;
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || m[row][col] == 0) continue;
      const Rational f = m[row][col];
      for (std::size_t k = col; k < n; ++k) m[row][k] -= f * m[col][k];
      rhs[row] -= f * rhs[col];
    }
  }
  return rhs;
}

std::vector<std::vector<Rational>> vandermondeMatrix(const std::vector<Rational>& e) {
  const std::size_t n = e.size();
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) m[0][i] = 1;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) m[j][i] = m[j - 1][i] * e[i];
  return m;
}

}  // namespace

std::vector<Rational> vandermondeSolve(const std::vector<Exp>& qExps,
                                       const std::vector<Rational>& data) {
  if (qExps.size() != data.size())
    throw SizeMismatch("vandermondeSolve: " + std::to_string(data.size()) + " data for " +
                       std::to_string(qExps.size()) + " exponents");
  if (qExps.empty()) throw SizeMismatch("vandermondeSolve: empty window");
  const auto e = tExponents(qExps);
  return solveLinear(vandermondeMatrix(e), data);
}

Rational LinearFunctional::apply(const std::vector<Rational>& data) const {
  if (data.size() != coefficients.size())
    throw SizeMismatch("functional applied to data of the wrong length");
  Rational acc(0);
  for (std::size_t i = 0; i < data.size(); ++i) acc += coefficients[i] * data[i];
  return acc;
}

LinearFunctional linearFunctional(const std::vector<Exp>& qExps, long j) {
  if (j < 0) throw SizeMismatch("linearFunctional: negative order");
  if (qExps.empty()) throw SizeMismatch("linearFunctional: empty window");
  const auto e = tExponents(qExps);
  const std::size_t n = e.size();

  // d_j = (e^j row) V^{-1} d, so the coefficient vector solves V^T f = e^j
  auto vt = vandermondeMatrix(e);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = r + 1; c < n; ++c) std::swap(vt[r][c], vt[c][r]);
  std::vector<Rational> powers(n);
  for (std::size_t i = 0; i < n; ++i) powers[i] = ratPow(e[i], j);

  LinearFunctional f;
  f.qExponents = qExps;
  f.order = j;
  f.coefficients = solveLinear(std::move(vt), std::move(powers));
  return f;
}

Rational extrapolate(const std::vector<Exp>& qExps, const std::vector<Rational>& data, long j) {
  const auto amp = vandermondeSolve(qExps, data);
  const auto e = tExponents(qExps);
  Rational acc(0);
  for (std::size_t i = 0; i < amp.size(); ++i) acc += amp[i] * ratPow(e[i], j);
  return acc;
}

LaurentPoly reconstructPolynomial(const std::vector<Exp>& qExps,
                                  const std::vector<Rational>& data) {
  const auto amp = vandermondeSolve(qExps, data);
  LaurentPoly p(Var::Q);
  for (std::size_t i = 0; i < amp.size(); ++i) p.addTerm(qExps[i], amp[i]);
  return p;
}

const char* latticeName(LatticeUsed l) {
  switch (l) {
    case LatticeUsed::None: return "none";
    case LatticeUsed::Coarse: return "coarse";
    case LatticeUsed::Fine: return "fine";
  }
  return "?";
}

DeterminationReport verifyDetermination(const Diagram& d, Family family, long twiceA, long jmax,
                                        MemoCache* cache, const EngineConfig& cfg) {
  Window w;
  LaurentPoly F(Var::Q);
  switch (family) {
    case Family::Jones:
      w = jonesWindow(d);
      F = jones(d, cfg.bracketCap);
      twiceA = -1;
      break;
    case Family::Homfly:
      w = homflyWindow(d, twiceA);
      F = tvSpecialize(homfly(d, cache, cfg.homflyCap), twiceA);
      break;
    case Family::Dubrovnik:
      w = dubrovnikWindow(d, twiceA);
      F = tvSpecialize(dubrovnik(d, cache, cfg.dubrovnikCap).yPoly, twiceA);
      break;
  }
  if (jmax < w.N) throw SizeMismatch("verifyDetermination: jmax below the theorem N");

  DeterminationReport rep;
  rep.family = family;
  rep.twiceA = twiceA;
  rep.windowSource = w.source;
  rep.N = w.N;
  rep.jmax = jmax;

  if (!F.isZero()) {
    const auto sup = F.support();
    rep.supportContained =
        std::includes(w.fineQ.begin(), w.fineQ.end(), sup.exponents.begin(), sup.exponents.end());
  } else {
    rep.supportContained = true;
  }

  const long maxOrder =
      std::max<long>(jmax, static_cast<long>(std::max(w.coarseQ.size(), w.fineQ.size())));
  const auto v = taylorCoeffs(F, maxOrder);
  std::vector<Rational> deriv(v.size());  // the Lemma's data: d_j = j! v_j
  Rational fact(1);
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (j > 0) fact *= static_cast<long>(j);
    deriv[j] = v[j] * fact;
  }

  auto tryLattice = [&](const std::vector<Exp>& qExps, std::vector<long>& failed) {
    failed.clear();
    const long K = static_cast<long>(qExps.size()) - 1;
    const std::vector<Rational> head(deriv.begin(), deriv.begin() + K + 1);
    const auto amp = vandermondeSolve(qExps, head);
    const auto e = tExponents(qExps);
    std::vector<Rational> pw(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) pw[i] = ratPow(e[i], K);
    long checked = 0;
    for (long j = K + 1; j <= jmax; ++j) {
      Rational acc(0);
      for (std::size_t i = 0; i < e.size(); ++i) {
        pw[i] *= e[i];
        acc += amp[i] * pw[i];
      }
      ++checked;
      if (acc != deriv[j]) failed.push_back(j);
    }
    rep.ordersChecked = checked;
    rep.K = K;
    return failed.empty();
  };

  const bool distinctLattices = w.coarseQ != w.fineQ;
  std::vector<long> failed;
  if (!w.coarseQ.empty()) {
    rep.coarseTried = true;
    rep.coarseOk = tryLattice(w.coarseQ, failed);
    if (rep.coarseOk) {
      rep.determined = true;
      rep.lattice = LatticeUsed::Coarse;
      return rep;
    }
  }
  if (distinctLattices && !w.fineQ.empty() && tryLattice(w.fineQ, failed)) {
    rep.determined = true;
    rep.lattice = LatticeUsed::Fine;
    return rep;
  }
  rep.failedOrders = std::move(failed);
  return rep;
}

bool jonesTrivialityCheck(const Diagram& d, long bracketCap) {
  const DiagramStats st = d.stats();
  if (st.linkComponents != 1)
    throw NotAKnot("triviality check needs a one-component diagram, got " +
                   std::to_string(st.linkComponents));
  const LaurentPoly F = jones(d, bracketCap);
  const auto v = taylorCoeffs(F, st.c);
  bool allZero = true;
  for (long j = 1; j <= st.c; ++j)
    if (v[j] != 0) {
      allZero = false;
      break;
    }
  if (allZero && !(F == LaurentPoly::constant(Var::Q, 1)))
    throw std::logic_error("vanishing v_1..v_N with a nontrivial Jones polynomial");
  return allZero;
}

}  // namespace skeinlab
