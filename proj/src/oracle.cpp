#include "tradekit/oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "tradekit/io.hpp"

namespace tradekit {

namespace {

std::vector<std::vector<int>> all_subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k > n || k < 1) return out;
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    out.push_back(idx);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

struct Searcher {
  SearchSpec spec;
  std::vector<std::vector<int>> blocks;     // lex-ordered k-subsets
  std::vector<std::vector<int>> block_subs; // block -> t-subset ids
  std::vector<std::vector<int>> sub_blocks; // t-subset id -> covering blocks
  int n_subsets = 0;

  long long nodes = 0;
  bool stopped = false;  // budget or solution limit hit

  std::vector<int> used;                 // per block, placements anywhere
  std::vector<int> target;               // census of collection 0
  std::vector<std::vector<int>> chosen;  // block ids per collection
  std::vector<int> census0;

  std::set<std::string> seen;
  std::vector<TradeSystem> solutions;

  explicit Searcher(const SearchSpec& s) : spec(s) {
    auto raw = all_subsets(spec.v_max, spec.k);
    blocks.assign(raw.begin(), raw.end());
    auto subs = all_subsets(spec.v_max, spec.t);
    std::map<std::vector<int>, int> sub_id;
    for (const auto& s2 : subs) {
      sub_id[s2] = n_subsets++;
    }
    block_subs.resize(blocks.size());
    sub_blocks.resize(n_subsets);
    for (size_t bi = 0; bi < blocks.size(); ++bi) {
      std::vector<int> idx(spec.t);
      std::iota(idx.begin(), idx.end(), 0);
      while (true) {
        std::vector<int> s2(spec.t);
        for (int i = 0; i < spec.t; ++i) s2[i] = blocks[bi][idx[i]];
        int id = sub_id.at(s2);
        block_subs[bi].push_back(id);
        sub_blocks[id].push_back(static_cast<int>(bi));
        int i = spec.t - 1;
        while (i >= 0 && idx[i] == spec.k - spec.t + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < spec.t; ++j) idx[j] = idx[j - 1] + 1;
      }
    }
    used.assign(blocks.size(), 0);
    census0.assign(n_subsets, 0);
    chosen.resize(spec.mu);
  }

  bool tick() {
    if (++nodes >= spec.budget) stopped = true;
    return !stopped;
  }

  // First-occurrence rule: elements at or beyond next_fresh must appear as a
  // contiguous run starting exactly at next_fresh.
  static bool fresh_ok(const std::vector<int>& elems, int next_fresh) {
    int expected = next_fresh;
    for (int e : elems) {
      if (e < next_fresh) continue;
      if (e != expected) return false;
      ++expected;
    }
    return true;
  }

  void record_solution() {
    std::vector<BlockCollection> cols(spec.mu);
    for (int j = 0; j < spec.mu; ++j) {
      std::vector<int> ids = chosen[j];
      std::sort(ids.begin(), ids.end());
      for (int bi : ids) {
        cols[j].blocks.push_back(
            Block(std::vector<Element>(blocks[bi].begin(), blocks[bi].end())));
      }
    }
    TradeSystem ts =
        TradeSystem::make(std::move(cols), spec.k, spec.t, spec.m);
    TradeSystem canon = canonicalize(ts);
    std::string key = serialize_trade(canon);
    if (seen.insert(key).second) {
      solutions.push_back(std::move(canon));
      if (static_cast<int>(solutions.size()) >= spec.limit) stopped = true;
    }
  }

  // ---- collection 0: lexicographic with first-occurrence labeling ----

  void enumerate_t0(int pos, int min_block, int next_fresh) {
    if (stopped) return;
    if (pos == spec.m) {
      target = census0;
      solve_collection(1);
      return;
    }
    for (size_t bi = min_block; bi < blocks.size(); ++bi) {
      if (stopped) return;
      const auto& elems = blocks[bi];
      if (!fresh_ok(elems, next_fresh)) continue;
      if (spec.steiner) {
        bool clash = false;
        for (int s : block_subs[bi]) {
          if (census0[s] >= 1) {
            clash = true;
            break;
          }
        }
        if (clash) continue;
      }
      if (!tick()) return;
      for (int s : block_subs[bi]) ++census0[s];
      ++used[bi];
      chosen[0].push_back(static_cast<int>(bi));
      int fresh = next_fresh;
      for (int e : elems) {
        if (e >= fresh) fresh = e + 1;
      }
      enumerate_t0(pos + 1, spec.steiner ? bi + 1 : bi, fresh);
      chosen[0].pop_back();
      --used[bi];
      for (int s : block_subs[bi]) --census0[s];
    }
  }

  // ---- collections 1..mu-1 ----

  int min_chosen(int j) const {
    return *std::min_element(chosen[j].begin(), chosen[j].end());
  }

  void solve_collection(int j) {
    if (stopped) return;
    if (j == spec.mu) {
      record_solution();
      return;
    }
    std::vector<int> census(n_subsets, 0);
    if (spec.steiner && spec.census_pruning) {
      cover_step(j, census, 0);
    } else {
      lex_step(j, census, 0, 0);
    }
  }

  bool ordering_ok(int j) const {
    // Collections 1..mu-1 are interchangeable; require increasing minimum
    // block. Collection 0 holds the global lexicographic minimum already.
    return j < 2 || min_chosen(j) > min_chosen(j - 1);
  }

  // Exact-cover step: pick the first deficit subset with the fewest
  // available candidates and branch on its covering block.
  void cover_step(int j, std::vector<int>& census, int placed) {
    if (stopped) return;
    if (placed == spec.m) {
      if (ordering_ok(j)) solve_collection(j + 1);
      return;
    }
    int best = -1;
    size_t best_count = static_cast<size_t>(-1);
    for (int s = 0; s < n_subsets; ++s) {
      if (target[s] - census[s] <= 0) continue;
      size_t count = 0;
      for (int bi : sub_blocks[s]) {
        if (!used[bi] && available(bi, census)) ++count;
      }
      if (count < best_count) {
        best_count = count;
        best = s;
        if (count == 0) break;
      }
    }
    if (best < 0 || best_count == 0) return;
    for (int bi : sub_blocks[best]) {
      if (stopped) return;
      if (used[bi] || !available(bi, census)) continue;
      if (!tick()) return;
      for (int s : block_subs[bi]) ++census[s];
      ++used[bi];
      chosen[j].push_back(bi);
      cover_step(j, census, placed + 1);
      chosen[j].pop_back();
      --used[bi];
      for (int s : block_subs[bi]) --census[s];
    }
  }

  bool available(int bi, const std::vector<int>& census) const {
    for (int s : block_subs[bi]) {
      if (census[s] >= target[s]) return false;
    }
    return true;
  }

  // Plain lexicographic enumeration; correctness checks happen late. Used
  // for non-Steiner searches and when census pruning is disabled.
  void lex_step(int j, std::vector<int>& census, int placed, int min_block) {
    if (stopped) return;
    if (placed == spec.m) {
      if (census == target && ordering_ok(j)) solve_collection(j + 1);
      return;
    }
    for (size_t bi = min_block; bi < blocks.size(); ++bi) {
      if (stopped) return;
      bool local_dup = !spec.steiner && !chosen[j].empty() &&
                       chosen[j].back() == static_cast<int>(bi);
      if (used[bi] && !local_dup) continue;
      if (spec.steiner) {
        bool clash = false;
        for (int s : block_subs[bi]) {
          if (census[s] >= 1) {
            clash = true;
            break;
          }
        }
        if (clash) continue;
      }
      if (spec.census_pruning && !available(bi, census)) continue;
      if (!tick()) return;
      for (int s : block_subs[bi]) ++census[s];
      ++used[bi];
      chosen[j].push_back(static_cast<int>(bi));
      lex_step(j, census, placed + 1,
               spec.steiner ? static_cast<int>(bi) + 1 : static_cast<int>(bi));
      chosen[j].pop_back();
      --used[bi];
      for (int s : block_subs[bi]) --census[s];
    }
  }
};

}  // namespace

SearchOutcome search(const SearchSpec& spec) {
  if (spec.k < 2 || spec.t < 1 || spec.t >= spec.k || spec.m < 1 ||
      spec.mu < 2 || spec.v_max < spec.k) {
    throw std::invalid_argument("search needs k>=2, 1<=t<k, m>=1, mu>=2 and "
                                "v_max>=k");
  }
  if (spec.v_max > 16 || binomial(spec.v_max, spec.k) > 200000) {
    throw std::invalid_argument("search parameters exceed desk scale");
  }
  Searcher searcher(spec);
  searcher.enumerate_t0(0, 0, 0);
  SearchOutcome out;
  out.solutions = std::move(searcher.solutions);
  out.exhausted = !searcher.stopped;
  out.nodes = searcher.nodes;
  return out;
}

SweepReport nonexistence_sweep(int k, int m_max, int v_max, int mu, int t) {
  SweepReport report;
  report.k = k;
  report.mu = mu;
  report.t = t;
  report.v_max = v_max;
  for (int m = 1; m <= m_max; ++m) {
    SearchSpec spec;
    spec.v_max = v_max;
    spec.k = k;
    spec.t = t;
    spec.m = m;
    spec.mu = mu;
    spec.steiner = true;
    spec.limit = 1;  // existence is enough
    auto outcome = search(spec);
    SweepEntry entry;
    entry.m = m;
    entry.nodes = outcome.nodes;
    if (!outcome.solutions.empty()) {
      entry.verdict = SweepVerdict::found;
    } else if (outcome.exhausted) {
      entry.verdict = SweepVerdict::none_up_to_v_max;
    } else {
      entry.verdict = SweepVerdict::inconclusive;
    }
    report.entries.push_back(entry);
  }
  return report;
}

// ---------------------------------------------------------------------------
// Independent verification (cross-check)

namespace {

// Reverse-order census: iterates blocks back to front and picks each
// block's t-subsets by a descending bitmask walk, accumulating into a map.
std::map<TSubset, int> census_reversed(const BlockCollection& col, int t) {
  std::map<TSubset, int> counts;
  for (auto it = col.blocks.rbegin(); it != col.blocks.rend(); ++it) {
    const auto& e = it->elems;
    const int k = static_cast<int>(e.size());
    for (unsigned mask = (1u << k) - 1; mask > 0; --mask) {
      if (__builtin_popcount(mask) != t) continue;
      TSubset s;
      s.reserve(t);
      for (int i = 0; i < k; ++i) {
        if (mask & (1u << i)) s.push_back(e[i]);
      }
      ++counts[s];
    }
  }
  return counts;
}

}  // namespace

bool cross_check(const TradeSystem& system, std::ostream* diag) {
  // Verdicts from the primary implementation.
  bool trade1 = verify_trade(system).passed;
  bool steiner1 = verify_steiner(system).passed;
  bool solely1 = verify_solely_balanced(system).passed;

  // Independent recomputation.
  const int mu = system.mu();
  bool trade2 = true;
  for (int i = mu - 1; i >= 0; --i) {
    if (system.collections[i].size() != system.volume) trade2 = false;
  }
  for (int i = mu - 1; i >= 0 && trade2; --i) {
    std::set<Block> a(system.collections[i].blocks.begin(),
                      system.collections[i].blocks.end());
    for (int j = i - 1; j >= 0 && trade2; --j) {
      for (const auto& b : system.collections[j].blocks) {
        if (a.count(b)) trade2 = false;
      }
    }
  }
  std::vector<std::map<TSubset, int>> censuses;
  for (int i = 0; i < mu; ++i) {
    censuses.push_back(census_reversed(system.collections[i], system.strength));
  }
  TSubset differing;
  for (int i = 1; i < mu && trade2; ++i) {
    if (censuses[i] != censuses[0]) {
      trade2 = false;
      for (const auto& [s, c] : censuses[0]) {
        auto it = censuses[i].find(s);
        if (it == censuses[i].end() || it->second != c) {
          differing = s;
          break;
        }
      }
      if (differing.empty()) {
        for (const auto& [s, c] : censuses[i]) {
          if (!censuses[0].count(s)) {
            differing = s;
            break;
          }
        }
      }
    }
  }
  bool steiner2 = true;
  for (const auto& census : censuses) {
    for (const auto& [s, c] : census) {
      if (c > 1) steiner2 = false;
    }
  }
  bool solely2 = steiner2;
  for (int i = mu - 1; i >= 0 && solely2; --i) {
    for (int j = i - 1; j >= 0 && solely2; --j) {
      for (const auto& a : system.collections[i].blocks) {
        for (const auto& b : system.collections[j].blocks) {
          std::vector<Element> common;
          std::set_intersection(a.elems.begin(), a.elems.end(),
                                b.elems.begin(), b.elems.end(),
                                std::back_inserter(common));
          if (static_cast<int>(common.size()) > system.strength) {
            solely2 = false;
          }
        }
      }
    }
  }

  bool same = (trade1 == trade2) && (steiner1 == steiner2) &&
              (solely1 == solely2);
  if (!same && diag) {
    *diag << "cross-check mismatch: trade " << trade1 << "/" << trade2
          << " steiner " << steiner1 << "/" << steiner2 << " solely "
          << solely1 << "/" << solely2;
    if (!differing.empty()) {
      *diag << "; first differing subset {";
      for (size_t i = 0; i < differing.size(); ++i) {
        if (i) *diag << ",";
        *diag << differing[i];
      }
      *diag << "}";
    }
    *diag << "\n";
  }
  return same;
}

// ---------------------------------------------------------------------------
// Canonicalization

namespace {

using Partition = std::vector<std::vector<Element>>;  // ordered classes

// Splits element classes by degree profile, then iterates a co-element
// class-signature refinement until stable.
Partition refine_classes(const TradeSystem& ts,
                         const std::vector<int>& col_order,
                         const std::vector<Element>& elems) {
  std::map<Element, std::vector<int>> signature;
  for (Element e : elems) {
    std::vector<int>& sig = signature[e];
    for (int ci : col_order) {
      int degree = 0;
      for (const auto& b : ts.collections[ci].blocks) {
        if (b.contains(e)) ++degree;
      }
      sig.push_back(degree);
    }
  }
  std::map<Element, int> cls;
  {
    std::map<std::vector<int>, std::vector<Element>> grouped;
    for (Element e : elems) grouped[signature[e]].push_back(e);
    int id = 0;
    for (auto& [_, members] : grouped) {
      for (Element e : members) cls[e] = id;
      ++id;
    }
  }
  while (true) {
    std::map<Element, std::vector<int>> next_sig;
    for (Element e : elems) {
      std::vector<int> sig{cls[e]};
      for (int ci : col_order) {
        std::vector<int> co;
        for (const auto& b : ts.collections[ci].blocks) {
          if (!b.contains(e)) continue;
          for (Element x : b.elems) {
            if (x != e) co.push_back(cls[x]);
          }
        }
        std::sort(co.begin(), co.end());
        sig.push_back(static_cast<int>(co.size()));
        sig.insert(sig.end(), co.begin(), co.end());
      }
      next_sig[e] = std::move(sig);
    }
    std::map<std::vector<int>, std::vector<Element>> grouped;
    for (Element e : elems) grouped[next_sig[e]].push_back(e);
    std::map<Element, int> next_cls;
    int id = 0;
    for (auto& [_, members] : grouped) {
      for (Element e : members) next_cls[e] = id;
      ++id;
    }
    if (next_cls == cls) break;
    cls = std::move(next_cls);
  }
  std::map<int, std::vector<Element>> by_class;
  for (Element e : elems) by_class[cls[e]].push_back(e);
  Partition out;
  for (auto& [_, members] : by_class) out.push_back(std::move(members));
  return out;
}

constexpr long kAssignmentCap = 2000000;

void assignments(const Partition& classes, size_t cls, std::vector<Element>& order,
                 long& budget, const std::function<void()>& emit) {
  if (budget <= 0) return;
  if (cls == classes.size()) {
    emit();
    --budget;
    return;
  }
  std::vector<Element> members = classes[cls];
  std::sort(members.begin(), members.end());
  do {
    size_t base = order.size();
    order.insert(order.end(), members.begin(), members.end());
    assignments(classes, cls + 1, order, budget, emit);
    order.resize(base);
    if (budget <= 0) return;
  } while (std::next_permutation(members.begin(), members.end()));
}

}  // namespace

TradeSystem canonicalize(const TradeSystem& system) {
  const int mu = system.mu();
  const std::set<Element> base = foundation(system);
  std::vector<Element> elems(base.begin(), base.end());
  if (elems.empty()) return canonical_form(system);
  if (mu > 8) {
    throw std::invalid_argument("canonicalization supports mu <= 8");
  }

  std::string best_key;
  TradeSystem best;
  std::vector<int> col_order(mu);
  std::iota(col_order.begin(), col_order.end(), 0);
  do {
    Partition classes = refine_classes(system, col_order, elems);
    long budget = kAssignmentCap;
    std::vector<Element> order;
    assignments(classes, 0, order, budget, [&]() {
      std::map<Element, Element> map;
      for (size_t i = 0; i < order.size(); ++i) {
        map[order[i]] = static_cast<Element>(i);
      }
      std::vector<BlockCollection> cols;
      for (int ci : col_order) cols.push_back(system.collections[ci]);
      TradeSystem permuted = TradeSystem::make(std::move(cols),
                                               system.block_size,
                                               system.strength, system.volume);
      TradeSystem candidate = canonical_form(relabel(permuted, map));
      std::string key = serialize_trade(candidate);
      if (best_key.empty() || key < best_key) {
        best_key = std::move(key);
        best = std::move(candidate);
      }
    });
    if (budget <= 0) {
      throw std::runtime_error("canonicalization exceeded the refinement cap");
    }
  } while (std::next_permutation(col_order.begin(), col_order.end()));
  return best;
}

}  // namespace tradekit
