#include "skeinlab/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <ctime>
#include <iomanip>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "skeinlab/determine.hpp"
#include "skeinlab/errors.hpp"
#include "skeinlab/notation.hpp"
#include "skeinlab/twovar.hpp"
#include "skeinlab/windows.hpp"

namespace skeinlab {

using nlohmann::ordered_json;

std::string halfIntToString(long twiceA) {
  if (twiceA < 0) return "-";
  if (twiceA % 2 == 0) return std::to_string(twiceA / 2);
  return std::to_string(twiceA) + "/2";
}

long parseHalfInt(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      std::size_t used = 0;
      const long v = std::stol(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return 2 * v;
    }
    std::size_t usedN = 0, usedD = 0;
    const long num = std::stol(text.substr(0, slash), &usedN);
    const long den = std::stol(text.substr(slash + 1), &usedD);
    if (usedN != slash || usedD != text.size() - slash - 1 || den != 2)
      throw std::invalid_argument(text);
    return num;
  } catch (const std::exception&) {
    throw ParseError("not a half-integer: '" + text + "' (use k or k/2)");
  }
}

namespace {

struct EntryOutcome {
  ordered_json json;
  bool ok = true;
  std::vector<std::string> failures;
};

void recordCheck(EntryOutcome& out, ordered_json& where, const std::string& key, bool pass) {
  where[key] = pass;
  if (!pass) {
    out.ok = false;
    out.failures.push_back(key);
  }
}

std::pair<Exp, Exp> alphaRange(const TwoVarLaurent& p) {
  Exp lo = 0, hi = 0;
  bool first = true;
  for (const auto& [k, c] : p.terms()) {
    if (first || k.first < lo) lo = k.first;
    if (first || k.first > hi) hi = k.first;
    first = false;
  }
  return {lo, hi};
}

Exp zMaxDegree(const TwoVarLaurent& p) {
  Exp hi = 0;
  bool first = true;
  for (const auto& [k, c] : p.terms()) {
    if (first || k.second > hi) hi = k.second;
    first = false;
  }
  return hi;
}

bool supportWithin(const LaurentPoly& f, Exp qLo, Exp qHi) {
  if (f.isZero()) return true;
  const auto sup = f.support();
  return sup.min >= qLo && sup.max <= qHi;
}

ordered_json determinationJson(const DeterminationReport& rep) {
  ordered_json j;
  j["family"] = familyName(rep.family);
  j["a"] = halfIntToString(rep.twiceA);
  j["window"] = windowSourceName(rep.windowSource);
  j["N"] = rep.N;
  j["jmax"] = rep.jmax;
  j["lattice"] = latticeName(rep.lattice);
  j["K"] = rep.K;
  j["orders_checked"] = rep.ordersChecked;
  j["coarse_tried"] = rep.coarseTried;
  j["coarse_ok"] = rep.coarseOk;
  j["support_contained"] = rep.supportContained;
  j["determined"] = rep.determined;
  if (!rep.failedOrders.empty()) j["failed_orders"] = rep.failedOrders;
  return j;
}

long instanceJmax(const VerifyConfig& cfg, const Window& w) {
  if (cfg.jmax) return std::max<long>(*cfg.jmax, w.N);
  const long k = static_cast<long>(std::max(w.coarseQ.size(), w.fineQ.size())) - 1;
  return std::max(w.N, k) + 10;
}

EntryOutcome processEntry(const CensusEntry& entry, const VerifyConfig& cfg, MemoCache* cache) {
  EntryOutcome out;
  out.json["name"] = entry.name;
  out.json["notation"] = entry.notation;
  try {
    const Diagram d = parseNotation(entry.notation);
    const DiagramStats st = d.stats();
    ordered_json stats;
    stats["c"] = st.c;
    stats["c_plus"] = st.cPlus;
    stats["c_minus"] = st.cMinus;
    stats["writhe"] = st.writhe;
    stats["g"] = st.g;
    stats["link_components"] = st.linkComponents;
    stats["seifert_circles"] = st.seifertCircles;
    stats["murasugi_components"] = d.murasugiStateComponents();
    out.json["stats"] = stats;

    const LaurentPoly V = jones(d, cfg.engines.bracketCap);
    ordered_json checks;

    // span and divisibility (Theorem 1 proof structure)
    const auto sup = V.support();
    const bool spanOk = sup.span() <= 2 * (st.c + st.g - 1);
    recordCheck(out, checks, "span_le_c_plus_g_minus_1", spanOk);
    bool divisible = true;
    bool quotientSpanOk = true;
    try {
      const LaurentPoly factor = LaurentPoly::monomial(Var::Q, 1, 1) +
                                 LaurentPoly::monomial(Var::Q, 1, -1);
      const LaurentPoly quot = V.divideExact(factor.pow(st.g - 1));
      quotientSpanOk = quot.isZero() || quot.support().span() <= 2 * st.c;
    } catch (const NotDivisible&) {
      divisible = false;
      quotientSpanOk = false;
    }
    recordCheck(out, checks, "divisible_by_loop_factor", divisible);
    recordCheck(out, checks, "quotient_span_le_c", quotientSpanOk);

    const Window jw = jonesWindow(d);
    recordCheck(out, checks, "jones_window_contains_support",
                std::includes(jw.fineQ.begin(), jw.fineQ.end(), sup.exponents.begin(),
                              sup.exponents.end()));

    if (entry.expectedJones) {
      recordCheck(out, checks, "jones_regression", V.toString() == *entry.expectedJones);
    }

    if (st.linkComponents == 1) {
      const bool trivial = jonesTrivialityCheck(d, cfg.engines.bracketCap);
      checks["jones_trivial"] = trivial;
      if (entry.unknot) {
        recordCheck(out, checks, "triviality_matches_expectation", trivial == *entry.unknot);
      }
    }

    const bool homflyActive =
        std::find(cfg.families.begin(), cfg.families.end(), Family::Homfly) != cfg.families.end();
    const bool homflyFits = st.c <= cfg.engines.homflyCap;
    if (homflyActive && homflyFits) {
      const TwoVarLaurent P = homfly(d, cache, cfg.engines.homflyCap);
      recordCheck(out, checks, "homfly_a1_equals_jones", tvSpecialize(P, 2) == V);
      if (!P.isZero()) {
        const MortonBounds mb = mortonBounds(d);
        const auto [aLo, aHi] = alphaRange(P);
        recordCheck(out, checks, "morton_z", zMaxDegree(P) <= mb.zMax);
        recordCheck(out, checks, "morton_alpha_min", aLo >= mb.alphaMin);
        recordCheck(out, checks, "morton_alpha_max", aHi <= mb.alphaMax);
      }
    }
    out.json["checks"] = checks;

    ordered_json determinations = ordered_json::array();
    for (Family fam : cfg.families) {
      const std::vector<long> as =
          fam == Family::Jones ? std::vector<long>{-1} : cfg.twiceAValues;
      for (long twiceA : as) {
        if (fam == Family::Jones && st.c > cfg.engines.bracketCap) continue;
        if (fam == Family::Homfly && !homflyFits) continue;
        if (fam == Family::Dubrovnik && st.c > cfg.engines.dubrovnikCap) continue;

        Window w;
        switch (fam) {
          case Family::Jones: w = jonesWindow(d); break;
          case Family::Homfly: w = homflyWindow(d, twiceA); break;
          case Family::Dubrovnik: w = dubrovnikWindow(d, twiceA); break;
        }
        const long jmax = instanceJmax(cfg, w);
        const DeterminationReport rep = verifyDetermination(d, fam, twiceA, jmax, cache, cfg.engines);
        ordered_json dj = determinationJson(rep);
        if (!rep.determined) {
          out.ok = false;
          out.failures.push_back(std::string(familyName(fam)) + "[a=" +
                                 halfIntToString(twiceA) + "] not determined");
        }
        if (!rep.supportContained) {
          out.ok = false;
          out.failures.push_back(std::string(familyName(fam)) + "[a=" +
                                 halfIntToString(twiceA) + "] support outside window");
        }
        if (fam == Family::Dubrovnik) {
          const DubrovnikPair dp = dubrovnik(d, cache, cfg.engines.dubrovnikCap);
          const bool dIn = supportWithin(tvSpecialize(dp.dPoly, twiceA), w.dQLo, w.dQHi);
          dj["d_window_contains_support"] = dIn;
          if (!dIn) {
            out.ok = false;
            out.failures.push_back("dubrovnik[a=" + halfIntToString(twiceA) +
                                   "] D support outside window");
          }
        }
        determinations.push_back(std::move(dj));
      }
    }
    out.json["determinations"] = std::move(determinations);
  } catch (const Error& e) {
    out.json["error"] = e.what();
    out.ok = false;
    out.failures.push_back(std::string("error: ") + e.what());
  }
  out.json["passed"] = out.ok;
  return out;
}

std::string isoTimestamp() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

}  // namespace

VerifyOutcome runVerification(const std::vector<CensusEntry>& entries, const VerifyConfig& cfg) {
  MemoCache cache;
  std::vector<EntryOutcome> results(entries.size());

  const int jobs = std::max(1, cfg.jobs);
  if (jobs == 1 || entries.size() < 2) {
    for (std::size_t i = 0; i < entries.size(); ++i)
      results[i] = processEntry(entries[i], cfg, &cache);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    const int n = std::min<std::size_t>(jobs, entries.size());
    pool.reserve(n);
    for (int t = 0; t < n; ++t) {
      pool.emplace_back([&] {
        for (;;) {
          const std::size_t i = next.fetch_add(1);
          if (i >= entries.size()) return;
          results[i] = processEntry(entries[i], cfg, &cache);
        }
      });
    }
    for (auto& th : pool) th.join();
  }

  ordered_json report;
  report["report"] = "skeinlab.verify";
  report["version"] = 1;
  report["timestamp"] = isoTimestamp();
  ordered_json jc;
  {
    ordered_json fams = ordered_json::array();
    for (Family f : cfg.families) fams.push_back(familyName(f));
    jc["families"] = fams;
    ordered_json as = ordered_json::array();
    for (long a : cfg.twiceAValues) as.push_back(halfIntToString(a));
    jc["a_values"] = as;
    if (cfg.jmax) jc["jmax"] = *cfg.jmax;
    jc["caps"] = {{"bracket", cfg.engines.bracketCap},
                  {"homfly", cfg.engines.homflyCap},
                  {"dubrovnik", cfg.engines.dubrovnikCap}};
  }
  report["config"] = jc;

  ordered_json body = ordered_json::array();
  long coarseOkCount = 0, coarseTotal = 0;
  bool all = true;
  std::vector<std::string> failedNames;
  for (std::size_t i = 0; i < results.size(); ++i) {
    if (!results[i].ok) {
      all = false;
      failedNames.push_back(entries[i].name);
    }
    if (results[i].json.contains("determinations")) {
      for (const auto& dj : results[i].json["determinations"]) {
        if (dj["family"] != "jones") {
          ++coarseTotal;
          if (dj["coarse_ok"].get<bool>()) ++coarseOkCount;
        }
      }
    }
    body.push_back(results[i].json);
  }
  report["entries"] = std::move(body);
  report["summary"] = {{"entries", entries.size()},
                       {"failed", failedNames},
                       {"coarse_lattice_success",
                        std::to_string(coarseOkCount) + "/" + std::to_string(coarseTotal)},
                       {"passed", all}};

  // fixed-width human table
  std::ostringstream hs;
  hs << std::left << std::setw(22) << "name" << std::setw(11) << "family" << std::setw(5) << "a"
     << std::right << std::setw(4) << "N" << std::setw(5) << "K" << std::left << "  "
     << std::setw(8) << "lattice" << std::setw(11) << "determined" << "notes\n";
  hs << std::string(78, '-') << "\n";
  for (std::size_t i = 0; i < results.size(); ++i) {
    const auto& r = results[i];
    if (r.json.contains("error")) {
      hs << std::left << std::setw(22) << entries[i].name << "ERROR: "
         << r.json["error"].get<std::string>() << "\n";
      continue;
    }
    for (const auto& dj : r.json["determinations"]) {
      hs << std::left << std::setw(22) << entries[i].name << std::setw(11)
         << dj["family"].get<std::string>() << std::setw(5) << dj["a"].get<std::string>()
         << std::right << std::setw(4) << dj["N"].get<long>() << std::setw(5)
         << dj["K"].get<long>() << std::left << "  " << std::setw(8)
         << dj["lattice"].get<std::string>() << std::setw(11)
         << (dj["determined"].get<bool>() ? "yes" : "NO") << "";
      if (!r.ok) hs << " [entry failing]";
      hs << "\n";
    }
  }
  hs << std::string(78, '-') << "\n";
  hs << "entries: " << entries.size() << "  coarse-lattice successes: " << coarseOkCount << "/"
     << coarseTotal << "  overall: " << (all ? "PASS" : "FAIL") << "\n";
  if (!failedNames.empty()) {
    hs << "failing entries:";
    for (const auto& n : failedNames) hs << " " << n;
    hs << "\n";
  }

  VerifyOutcome out;
  out.reportJson = report.dump(2) + "\n";
  out.summary = hs.str();
  out.allPassed = all;
  return out;
}

}  // namespace skeinlab
