#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace tradekit {

/// How a base volume is backed by the toolkit.
///   constructed      -- an actual trade is built and verified in the tests
///   calculator       -- parameters only; the ingredient design is beyond
///                       desk scale
///   ingredient_defect -- the cited ingredient design does not exist (or its
///                       existence is open); encoded as tabulated
enum class WitnessStatus { constructed, calculator, ingredient_defect };

struct VolumeRule {
  std::string name;      // short tag used in witnesses
  std::string citation;  // self-contained provenance statement
  std::function<bool(long)> matches;
};

struct BaseVolume {
  long volume = 0;
  std::string citation;
  WitnessStatus status = WitnessStatus::calculator;
};

struct AuditNote {
  std::string tag;
  std::string text;
};

/// Volume rules for one block size: the forbidden window, the arithmetic
/// families, the tabulated per-k base volumes and the published exception
/// list they should reproduce.
struct SpectrumRuleSet {
  int k = 0;
  long forbidden_max = 0;  // 3k-4
  std::vector<VolumeRule> arithmetic_rules;
  std::vector<BaseVolume> base_volumes;
  std::vector<long> reference_exceptions;  // set-normalized published list
  std::vector<AuditNote> notes;
};

struct VolumeWitness {
  std::string rule;  // seed tag; empty when the witness is a sum
  long sum_a = 0;
  long sum_b = 0;
  std::string str() const;
};

struct SpectrumReport {
  int k = 0;
  long horizon = 0;
  std::vector<bool> achievable;          // indexed 0..horizon
  std::vector<VolumeWitness> witnesses;  // parallel to achievable
  std::vector<long> exceptions;          // unachieved in (3k-4, horizon]
  long threshold = 0;  // least N with [N, horizon] fully achievable
};

struct SpectrumDiscrepancy {
  long volume = 0;
  bool reference_lists_exception = false;
  bool engine_achieves = false;
  std::string witness_chain;  // decomposition down to seeds, when achieved
};

struct ThresholdCheck {
  long threshold = 0;
  long bound_12 = 0;
  bool within_12 = false;
  std::optional<long> bound_11_even;   // even k only
  std::optional<bool> within_11_even;  // even k only
};

/// Fully populated rule set for 5 <= k <= 14. Everything is cited data; the
/// closure never re-derives a family from prose.
SpectrumRuleSet rules_for(int k);

/// Least fixed point of the seed set under m1+m2, computed independently by
/// a breadth-first sumset pass and a coin-style boolean table; the two must
/// agree. Requires horizon >= 12(k-1)+3k.
SpectrumReport achievable_closure(const SpectrumRuleSet& rules, long horizon);

/// Expands the witness of an achievable volume down to seeds,
/// e.g. "83 = 32+51; 32 <- 4(k-1); 51 <- 3l".
std::string witness_chain(const SpectrumReport& report, long m);

/// Symmetric difference between the computed exceptions and the published
/// list, with a closure witness whenever the engine achieves a published
/// exception.
std::vector<SpectrumDiscrepancy> diff_against_reference(
    const SpectrumRuleSet& rules, const SpectrumReport& report);

/// threshold <= 12(k-1) for every k; additionally threshold <= 11(k-1) for
/// even k.
ThresholdCheck threshold_check(const SpectrumReport& report);

// Report emission: an aligned table and one machine-readable record per
// volume ("k m achievable witness").
std::string report_table(const SpectrumReport& report);
std::string report_records(const SpectrumReport& report);

}  // namespace tradekit
