// Acceptance suite: one pass/fail line per criterion.

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "tradekit/catalog.hpp"
#include "tradekit/constructions.hpp"
#include "tradekit/core.hpp"
#include "tradekit/gridblock.hpp"
#include "tradekit/io.hpp"
#include "tradekit/oracle.hpp"
#include "tradekit/spectrum.hpp"
#include "tradekit/tradeops.hpp"

using namespace tradekit;

namespace {

struct Criterion {
  int number;
  std::string name;
  double budget_seconds;
  std::function<void(std::ostringstream&)> run;  // throws on failure
};

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw Failure(what);
}

// --- criterion 1 -----------------------------------------------------------

void criterion_fixtures(std::ostringstream& detail) {
  auto listing = catalog_list();
  require(listing.size() == 7, "expected 7 catalog entries");
  for (const auto& item : listing) {
    const CatalogEntry& entry = catalog_get(item.name);
    if (entry.trade) {
      require(verify_trade(*entry.trade).passed, item.name + ": trade check");
      if (entry.kind == EntryKind::solely_balanced_set) {
        require(verify_solely_balanced(*entry.trade).passed,
                item.name + ": solely-balanced check");
      }
      if (entry.kind == EntryKind::resolvable_design) {
        require(verify_resolvable_design(as_resolvable(entry)).passed,
                item.name + ": resolvable-design check");
      }
    } else {
      require(verify_packing(*entry.grid).passed, item.name + ": packing");
    }
  }
  detail << listing.size() << " fixtures verified";
}

// --- criterion 2 -----------------------------------------------------------

void criterion_equalities(std::ostringstream& detail) {
  // rows+columns of P_3x3(K_18) == the 6-way table.
  require(serialize_trade(canonical_form(
              rows_cols_to_sbs(*catalog_get("p3x3-k18").grid, true))) ==
              serialize_trade(canonical_form(
                  *catalog_get("sbs-k18-6way").trade)),
          "rows_cols(p3x3-k18) != sbs-k18-6way");
  // expansion of the K_4 one-factorization == P_2x2(K_8).
  require(serialize_grid(normalize_points(
              expand_sbs(*catalog_get("onefact-k4").trade, 2))) ==
              serialize_grid(normalize_points(*catalog_get("p2x2-k8").grid)),
          "expand(onefact-k4,2) != p2x2-k8");
  // first class of the expansion to 54 points == the printed class.
  GridPacking k54 = expand_sbs(*catalog_get("sbs-k18-6way").trade, 3);
  GridPacking r1 = GridPacking::make(
      3, 3, {k54.arrays.begin(), k54.arrays.begin() + 6}, {{0, 1, 2, 3, 4, 5}});
  require(serialize_grid(r1) == serialize_grid(*catalog_get("p3x3-k54-r1").grid),
          "expand(sbs-k18-6way,3) class 1 != p3x3-k54-r1");
  detail << "3 byte-level equalities";
}

// --- criterion 3 -----------------------------------------------------------

void criterion_lift_sweep(std::ostringstream& detail) {
  std::vector<TradeSystem> sources = {
      *catalog_get("onefact-k4").trade,
      *catalog_get("sbs-k18-6way").trade,
      *catalog_get("sbs-k8-6way").trade,
      rb_to_sbs(affine_plane_rb(2)),
      rb_to_sbs(affine_plane_rb(3)),
      rb_to_sbs(affine_plane_rb(4)),
      rb_to_sbs(affine_plane_rb(5)),
      rb_to_sbs(affine_plane_rb(7)),
      transversal_design_sbs(5, 4),
      transversal_design_sbs(7, 6),
      transversal_design_sbs(8, 6),
      transversal_design_sbs(9, 5),
      grid_partition_sbs(6, 3),
      grid_partition_sbs(7, 3),
      rb_to_sbs(as_resolvable(catalog_get("rb-9-3-1"))),
      rows_cols_to_sbs(*catalog_get("p3x3-k18").grid, true),
  };
  for (int n = 4; n <= 30; n += 2) sources.push_back(one_factorization(n));

  int lifts = 0;
  for (const auto& source : sources) {
    const size_t v = foundation(source).size();
    require(v <= 60, "sweep source exceeds v=60");
    require(verify_solely_balanced(source).passed, "sweep source not solely");
    for (int mu_prime = 2; mu_prime <= source.mu(); ++mu_prime) {
      TradeSystem lifted = lift(source, mu_prime);
      require(verify_steiner(lifted).passed, "lift not Steiner at t+1");
      require(lifted.block_size == source.block_size + 1, "lift block size");
      require(lifted.strength == source.strength + 1, "lift strength");
      require(lifted.volume == mu_prime * source.volume, "lift volume");
      require(foundation(lifted).size() == v + mu_prime, "lift foundation");
      for (const auto& col : lifted.collections) {
        require(col.size() == lifted.volume, "collection volume");
      }
      ++lifts;
    }
  }
  detail << lifts << " lifts over " << sources.size() << " sources";
}

// --- criterion 4 -----------------------------------------------------------

void criterion_rgdd(std::ostringstream& detail) {
  RgddParams a = rgdd_solve(5, 4, 4);
  require(a.parallel_classes == 5 && a.block_count == 25,
          "rgdd_solve(5,4,4) != (5,25)");
  RgddParams b = rgdd_solve(3, 3, 3);
  require(b.parallel_classes == 3 && b.block_count == 9,
          "rgdd_solve(3,3,3) != (3,9)");
  detail << "r*=5,b=25 and r*=3,b=9";
}

// --- criteria 5 and 6 ------------------------------------------------------

// Discrepancies frozen from the engine run and re-verified there: volumes
// the closure achieves although the published list calls them exceptions,
// and volumes the closure cannot reach although the published list omits
// them.
const std::map<int, std::set<long>>& expected_achieved_diffs() {
  static const std::map<int, std::set<long>> diffs = {
      {8, {30}},
      {9, {32, 42, 56, 59, 62, 74, 77, 83, 86}},
      {14, {131}},
  };
  return diffs;
}

const std::map<int, std::set<long>>& expected_unreached_diffs() {
  static const std::map<int, std::set<long>> diffs = {
      {8, {32}},
      {12, {65, 79, 82}},
      {13, {52, 65, 88, 91, 94, 109, 110, 113, 115, 118, 119, 121, 122, 125,
            127, 130, 131}},
  };
  return diffs;
}

void criterion_spectrum(std::ostringstream& detail) {
  int clean = 0;
  int diff_items = 0;
  for (int k = 5; k <= 14; ++k) {
    SpectrumRuleSet rules = rules_for(k);
    SpectrumReport report = achievable_closure(rules, 400);  // dual-method
    auto diffs = diff_against_reference(rules, report);

    std::set<long> achieved;
    std::set<long> unreached;
    for (const auto& d : diffs) {
      if (d.engine_achieves) {
        require(!d.witness_chain.empty(), "diff item lacks a witness");
        // Re-validate the witness against the table.
        require(report.achievable[d.volume], "witnessed volume not achieved");
        achieved.insert(d.volume);
      } else {
        unreached.insert(d.volume);
      }
      ++diff_items;
    }
    auto want_achieved = expected_achieved_diffs().count(k)
                             ? expected_achieved_diffs().at(k)
                             : std::set<long>{};
    auto want_unreached = expected_unreached_diffs().count(k)
                              ? expected_unreached_diffs().at(k)
                              : std::set<long>{};
    if (achieved != want_achieved || unreached != want_unreached) {
      std::ostringstream os;
      os << "k=" << k << " diff mismatch; achieved:";
      for (long v : achieved) os << " " << v;
      os << "; unreached:";
      for (long v : unreached) os << " " << v;
      throw Failure(os.str());
    }
    if (diffs.empty()) {
      std::set<long> computed(report.exceptions.begin(),
                              report.exceptions.end());
      std::set<long> reference(rules.reference_exceptions.begin(),
                               rules.reference_exceptions.end());
      require(computed == reference, "clean diff but lists differ");
      ++clean;
    }
    // The two irregularities flagged for investigation surface as notes.
    if (k == 9 || k == 10) {
      bool noted = false;
      for (const auto& note : rules.notes) {
        if ((k == 9 && note.tag == "m<=38") ||
            (k == 10 && note.tag == "17mu-start")) {
          noted = true;
        }
      }
      require(noted, "missing audit note for k=" + std::to_string(k));
      if (k == 10) {
        // The tabulated 17mu family starts at 68, yet its mu=3 member is
        // covered by the 3l rule; the closure must agree.
        require(report.achievable[51], "k=10: volume 51 unachieved");
      }
    }
  }
  detail << clean << " of 10 lists reproduced exactly, " << diff_items
         << " audited discrepancies";
}

void criterion_thresholds(std::ostringstream& detail) {
  std::ostringstream even_report;
  for (int k = 5; k <= 14; ++k) {
    SpectrumReport report = achievable_closure(rules_for(k), 400);
    ThresholdCheck check = threshold_check(report);
    for (long m = check.bound_12; m <= report.horizon; ++m) {
      require(report.achievable[m],
              "k=" + std::to_string(k) + ": m=" + std::to_string(m) +
                  " >= 12(k-1) unachieved");
    }
    require(check.within_12, "threshold above 12(k-1)");
    if (k % 2 == 0) {
      even_report << " k" << k << ":"
                  << (*check.within_11_even ? "pass" : "FAIL");
      require(*check.within_11_even,
              "k=" + std::to_string(k) + ": 11(k-1) improvement fails");
    }
  }
  detail << "12(k-1) holds for k=5..14; 11(k-1) for even k:" +
                even_report.str();
}

// --- criterion 7 -----------------------------------------------------------

void criterion_oracle(std::ostringstream& detail) {
  SweepReport sweep = nonexistence_sweep(3, 5, 9);
  for (const auto& entry : sweep.entries) {
    require(entry.verdict == SweepVerdict::none_up_to_v_max,
            "m=" + std::to_string(entry.m) + " sweep not exhausted-empty");
  }

  SearchSpec spec;
  spec.v_max = 7;
  spec.k = 3;
  spec.t = 2;
  spec.m = 6;
  spec.mu = 3;
  auto outcome = search(spec);
  require(outcome.exhausted, "volume-6 search not exhausted");
  require(!outcome.solutions.empty(), "volume-6 search found nothing");
  std::string lifted =
      serialize_trade(canonicalize(lift(one_factorization(4), 3)));
  bool matched = false;
  for (const auto& sol : outcome.solutions) {
    if (serialize_trade(sol) == lifted) matched = true;
  }
  require(matched, "no solution isomorphic to the lift of the K_4 system");
  detail << "m<=5 empty for v<=9; volume 6 found (" << outcome.solutions.size()
         << " classes at v<=7, lift matched)";
}

// --- criterion 8 -----------------------------------------------------------

void criterion_optimality(std::ostringstream& detail) {
  for (int m = 1; m <= 10; ++m) {
    GridPacking p = two_by_two_optimal(m);
    require(verify_packing(p).passed, "P_2x2(K_" + std::to_string(4 * m) +
                                          ") invalid");
    OptimalityReport opt = optimality(p);
    require(opt.class_count == 2 * m - 1, "class count != 2m-1");
    require(opt.bound == (4L * m - 1) / 2, "bound != floor((4m-1)/2)");
    require(opt.is_optimal, "not optimal at m=" + std::to_string(m));
  }
  detail << "m=1..10 all optimal";
}

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {1, "fixture fidelity", 1.0, criterion_fixtures},
      {2, "construction equalities", 1.0, criterion_equalities},
      {3, "lift verification sweep", 30.0, criterion_lift_sweep},
      {4, "RGDD arithmetic", 1.0, criterion_rgdd},
      {5, "spectrum reproduction", 10.0, criterion_spectrum},
      {6, "threshold claims", 10.0, criterion_thresholds},
      {7, "oracle nonexistence and rediscovery", 300.0, criterion_oracle},
      {8, "2x2 packing optimality", 5.0, criterion_optimality},
  };

  int failures = 0;
  for (const auto& criterion : criteria) {
    auto start = std::chrono::steady_clock::now();
    std::ostringstream detail;
    std::string error;
    try {
      criterion.run(detail);
    } catch (const std::exception& e) {
      error = e.what();
    }
    double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    bool ok = error.empty();
    if (ok && seconds > criterion.budget_seconds) {
      ok = false;
      error = "exceeded time budget";
    }
    if (!ok) ++failures;
    std::ostringstream line;
    line << (ok ? "[PASS]" : "[FAIL]") << " criterion " << criterion.number
         << ": " << criterion.name << " (" << seconds << "s";
    if (ok) {
      line << "; " << detail.str();
    } else {
      line << "; " << error;
    }
    line << ")";
    std::cout << line.str() << std::endl;
  }
  if (failures) {
    std::cout << failures << " criterion(s) failed" << std::endl;
    return 1;
  }
  std::cout << "all criteria passed" << std::endl;
  return 0;
}
