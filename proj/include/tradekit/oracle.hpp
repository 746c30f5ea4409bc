#pragma once

#include <ostream>
#include <vector>

#include "tradekit/core.hpp"

namespace tradekit {

struct SearchSpec {
  int v_max = 0;  // foundation drawn from 0..v_max-1
  int k = 0;
  int t = 0;
  int m = 0;
  int mu = 0;
  bool steiner = true;
  int limit = 1 << 20;             // max solutions retained
  long long budget = 100000000;    // node-count cap
  bool census_pruning = true;      // see nonexistence tests; off = check late
};

struct SearchOutcome {
  std::vector<TradeSystem> solutions;  // canonical forms, isomorph-reduced
  bool exhausted = false;  // true iff the space was fully searched
  long long nodes = 0;
};

/// Exhaustive backtracking over lexicographically ordered blocks with
/// first-occurrence labeling, census-difference pruning and first-block
/// symmetry breaking. Budget exhaustion is reported, never silently treated
/// as nonexistence.
SearchOutcome search(const SearchSpec& spec);

enum class SweepVerdict { none_up_to_v_max, found, inconclusive };

struct SweepEntry {
  int m = 0;
  SweepVerdict verdict = SweepVerdict::inconclusive;
  long long nodes = 0;
};

struct SweepReport {
  int k = 0;
  int mu = 0;
  int t = 0;
  int v_max = 0;
  std::vector<SweepEntry> entries;
};

/// Runs search for every volume up to m_max with exhaustion required;
/// verdicts are always scoped to the searched region.
SweepReport nonexistence_sweep(int k, int m_max, int v_max, int mu = 3,
                               int t = 2);

/// Recomputes all three verification verdicts with an independent census
/// implementation (reversed iteration, map accumulation) and compares.
/// On mismatch the first differing t-subset is written to diag.
bool cross_check(const TradeSystem& system, std::ostream* diag = nullptr);

/// Canonical representative under element relabeling and collection
/// permutation: degree-profile refinement, then exhaustive search on ties.
TradeSystem canonicalize(const TradeSystem& system);

}  // namespace tradekit
