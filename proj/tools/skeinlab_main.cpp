#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "skeinlab/census.hpp"
#include "skeinlab/determine.hpp"
#include "skeinlab/errors.hpp"
#include "skeinlab/notation.hpp"
#include "skeinlab/skein.hpp"
#include "skeinlab/twovar.hpp"
#include "skeinlab/vassiliev.hpp"
#include "skeinlab/verify.hpp"
#include "skeinlab/windows.hpp"

namespace {

using namespace skeinlab;

Family familyFromName(const std::string& name) {
  if (name == "jones") return Family::Jones;
  if (name == "homfly") return Family::Homfly;
  if (name == "dubrovnik") return Family::Dubrovnik;
  throw ParseError("unknown family '" + name + "' (jones|homfly|dubrovnik)");
}

long requireHalfInt(const std::optional<std::string>& a, Family fam) {
  if (fam == Family::Jones) return -1;
  if (!a) throw ParseError(std::string(familyName(fam)) + " needs --a <half-integer>");
  const long twiceA = parseHalfInt(*a);
  if (twiceA < 0) throw ParseError("--a must be nonnegative");
  return twiceA;
}

int runCompute(const std::string& notation, const std::string& poly,
               const std::optional<std::string>& aText) {
  const EngineConfig cfg = EngineConfig::fromEnv();
  const Diagram d = parseNotation(notation);
  MemoCache cache;
  if (poly == "jones") {
    std::cout << "jones: " << jones(d, cfg.bracketCap).toString() << "\n";
  } else if (poly == "homfly") {
    const TwoVarLaurent p = homfly(d, &cache, cfg.homflyCap);
    std::cout << "homfly: " << p.toString() << "\n";
    if (aText) {
      const long twiceA = parseHalfInt(*aText);
      std::cout << "homfly[a=" << halfIntToString(twiceA)
                << "]: " << tvSpecialize(p, twiceA).toString() << "\n";
    }
  } else if (poly == "dubrovnik") {
    const DubrovnikPair p = dubrovnik(d, &cache, cfg.dubrovnikCap);
    std::cout << "dubrovnik_D: " << p.dPoly.toString() << "\n";
    std::cout << "dubrovnik_Y: " << p.yPoly.toString() << "\n";
    if (aText) {
      const long twiceA = parseHalfInt(*aText);
      std::cout << "dubrovnik_Y[a=" << halfIntToString(twiceA)
                << "]: " << tvSpecialize(p.yPoly, twiceA).toString() << "\n";
    }
  } else {
    throw ParseError("unknown polynomial '" + poly + "' (jones|homfly|dubrovnik)");
  }
  return 0;
}

int runVassiliev(const std::string& notation, const std::string& familyText,
                 const std::optional<std::string>& aText, long n) {
  const EngineConfig cfg = EngineConfig::fromEnv();
  const Family fam = familyFromName(familyText);
  const long twiceA = requireHalfInt(aText, fam);
  const Diagram d = parseNotation(notation);
  MemoCache cache;
  const InvariantSequence seq = invariantFamily(d, fam, twiceA, n, &cache, cfg);
  for (std::size_t j = 0; j < seq.values.size(); ++j)
    std::cout << "v_" << j << " = " << ratToString(seq.values[j]) << "\n";
  return 0;
}

int runReconstruct(const std::string& notation, const std::string& familyText,
                   const std::optional<std::string>& aText) {
  const EngineConfig cfg = EngineConfig::fromEnv();
  const Family fam = familyFromName(familyText);
  const long twiceA = requireHalfInt(aText, fam);
  const Diagram d = parseNotation(notation);
  MemoCache cache;

  Window w;
  LaurentPoly direct(Var::Q);
  switch (fam) {
    case Family::Jones:
      w = jonesWindow(d);
      direct = jones(d, cfg.bracketCap);
      break;
    case Family::Homfly:
      w = homflyWindow(d, twiceA);
      direct = tvSpecialize(homfly(d, &cache, cfg.homflyCap), twiceA);
      break;
    case Family::Dubrovnik:
      w = dubrovnikWindow(d, twiceA);
      direct = tvSpecialize(dubrovnik(d, &cache, cfg.dubrovnikCap).yPoly, twiceA);
      break;
  }

  int exitCode = 1;
  for (const auto* lattice : {&w.coarseQ, &w.fineQ}) {
    if (lattice->empty()) continue;
    const long K = static_cast<long>(lattice->size()) - 1;
    const auto v = taylorCoeffs(direct, K);
    std::vector<Rational> deriv(v.size());
    Rational fact(1);
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (j > 0) fact *= static_cast<long>(j);
      deriv[j] = v[j] * fact;
    }
    const LaurentPoly rebuilt = reconstructPolynomial(*lattice, deriv);
    const bool match = rebuilt == direct;
    std::cout << "window:        " << windowSourceName(w.source) << " N=" << w.N
              << " lattice=" << (lattice == &w.coarseQ ? "coarse" : "fine") << " K=" << K << "\n";
    std::cout << "direct:        " << direct.toString() << "\n";
    std::cout << "reconstructed: " << rebuilt.toString() << "\n";
    std::cout << "match: " << (match ? "yes" : "no") << "\n";
    if (match) {
      exitCode = 0;
      break;
    }
    if (lattice == &w.fineQ || w.coarseQ == w.fineQ) break;
    std::cout << "\n";
  }
  return exitCode;
}

int runVerify(const std::string& tablePath, const std::vector<std::string>& familyNames,
              const std::vector<std::string>& aTexts, std::optional<long> jmax,
              const std::optional<std::string>& outPath, int jobs) {
  VerifyConfig cfg;
  cfg.engines = EngineConfig::fromEnv();
  if (!familyNames.empty()) {
    cfg.families.clear();
    for (const auto& f : familyNames) cfg.families.push_back(familyFromName(f));
  }
  if (!aTexts.empty()) {
    cfg.twiceAValues.clear();
    for (const auto& a : aTexts) cfg.twiceAValues.push_back(parseHalfInt(a));
  }
  cfg.jmax = jmax;
  cfg.jobs = jobs;

  const auto entries = loadTable(tablePath);
  const VerifyOutcome outcome = runVerification(entries, cfg);
  std::cout << outcome.summary;
  if (outPath) {
    std::ofstream out(*outPath);
    if (!out) throw IoError("cannot write report to " + *outPath);
    out << outcome.reportJson;
  }
  return outcome.allPassed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact knot-polynomial and Vassiliev-invariant toolkit"};
  app.require_subcommand(1);

  std::string notation, poly = "jones", family = "jones", table;
  std::optional<std::string> aText, outPath;
  std::vector<std::string> familyNames, aTexts;
  long n = 0;
  std::optional<long> jmax;
  int jobs = 1;

  auto* compute = app.add_subcommand("compute", "compute a polynomial of a diagram");
  compute->add_option("notation", notation, "PD text or braid:<n>|<letters>")->required();
  compute->add_option("--poly", poly, "jones|homfly|dubrovnik");
  compute->add_option("--a", aText, "half-integer specialization exponent");

  auto* vass = app.add_subcommand("vassiliev", "invariant sequence v_0..v_n");
  vass->add_option("notation", notation, "PD text or braid word")->required();
  vass->add_option("--family", family, "jones|homfly|dubrovnik");
  vass->add_option("--a", aText, "half-integer a (homfly/dubrovnik)");
  vass->add_option("--n", n, "highest order")->required();

  auto* verify = app.add_subcommand("verify", "run the determination and bound checks on a census");
  verify->add_option("--table", table, "census JSON path")->required();
  verify->add_option("--families", familyNames, "subset of jones homfly dubrovnik");
  verify->add_option("--a", aTexts, "half-integer a values");
  verify->add_option("--jmax", jmax, "extrapolation depth override");
  verify->add_option("--out", outPath, "write the JSON report here");
  verify->add_option("--jobs", jobs, "worker threads (default 1)");

  auto* rec = app.add_subcommand("reconstruct", "rebuild a polynomial from its leading invariants");
  rec->add_option("notation", notation, "PD text or braid word")->required();
  rec->add_option("--family", family, "jones|homfly|dubrovnik");
  rec->add_option("--a", aText, "half-integer a (homfly/dubrovnik)");

  try {
    app.parse(argc, argv);
    if (compute->parsed()) return runCompute(notation, poly, aText);
    if (vass->parsed()) return runVassiliev(notation, family, aText, n);
    if (verify->parsed()) return runVerify(table, familyNames, aTexts, jmax, outPath, jobs);
    if (rec->parsed()) return runReconstruct(notation, family, aText);
    return 2;
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  } catch (const skeinlab::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
}
