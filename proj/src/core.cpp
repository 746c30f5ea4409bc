#include "tradekit/core.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace tradekit {

Block::Block(std::vector<Element> e) : elems(std::move(e)) {
  std::sort(elems.begin(), elems.end());
  if (std::adjacent_find(elems.begin(), elems.end()) != elems.end()) {
    throw std::invalid_argument("block has a repeated element: " + str());
  }
  for (Element x : elems) {
    if (x < 0) throw std::invalid_argument("negative element label");
  }
}

bool Block::contains(Element e) const {
  return std::binary_search(elems.begin(), elems.end(), e);
}

int Block::intersection_size(const Block& other) const {
  int n = 0;
  auto a = elems.begin();
  auto b = other.elems.begin();
  while (a != elems.end() && b != other.elems.end()) {
    if (*a < *b) {
      ++a;
    } else if (*b < *a) {
      ++b;
    } else {
      ++n;
      ++a;
      ++b;
    }
  }
  return n;
}

std::string Block::str() const {
  std::ostringstream os;
  os << "{";
  for (size_t i = 0; i < elems.size(); ++i) {
    if (i) os << ",";
    os << elems[i];
  }
  os << "}";
  return os.str();
}

TradeSystem TradeSystem::make(std::vector<BlockCollection> cols, int k, int t,
                              int declared_volume) {
  if (t < 1 || t >= k) {
    throw std::invalid_argument("strength must satisfy 1 <= t < k");
  }
  for (const auto& col : cols) {
    for (const auto& b : col.blocks) {
      if (b.size() != k) {
        throw std::invalid_argument("block " + b.str() + " does not have size " +
                                    std::to_string(k));
      }
    }
  }
  TradeSystem ts;
  ts.collections = std::move(cols);
  ts.block_size = k;
  ts.strength = t;
  if (declared_volume >= 0) {
    ts.volume = declared_volume;
  } else {
    ts.volume = ts.collections.empty() ? 0 : ts.collections.front().size();
  }
  return ts;
}

int Census::count(const TSubset& s) const {
  auto it = entries.find(s);
  return it == entries.end() ? 0 : it->second;
}

long Census::total() const {
  long sum = 0;
  for (const auto& [_, c] : entries) sum += c;
  return sum;
}

long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (2 * k > n) k = n - k;
  long r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
  }
  return r;
}

std::vector<TSubset> subsets_of(const Block& b, int t) {
  std::vector<TSubset> out;
  const int k = b.size();
  if (t > k) return out;
  std::vector<int> idx(t);
  for (int i = 0; i < t; ++i) idx[i] = i;
  while (true) {
    TSubset s(t);
    for (int i = 0; i < t; ++i) s[i] = b.elems[idx[i]];
    out.push_back(std::move(s));
    int i = t - 1;
    while (i >= 0 && idx[i] == k - t + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < t; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

namespace {

// Sorted run-length census over all t-subsets of a collection. Used by the
// verifiers; cheaper and just as deterministic as a map.
std::vector<std::pair<TSubset, int>> census_list(const BlockCollection& col,
                                                 int t) {
  std::vector<TSubset> all;
  for (const auto& b : col.blocks) {
    auto subs = subsets_of(b, t);
    all.insert(all.end(), subs.begin(), subs.end());
  }
  std::sort(all.begin(), all.end());
  std::vector<std::pair<TSubset, int>> out;
  for (size_t i = 0; i < all.size();) {
    size_t j = i;
    while (j < all.size() && all[j] == all[i]) ++j;
    out.emplace_back(all[i], static_cast<int>(j - i));
    i = j;
  }
  return out;
}

}  // namespace

Census census(const BlockCollection& collection, int t) {
  if (t < 1) throw std::invalid_argument("census strength must be positive");
  for (const auto& b : collection.blocks) {
    if (t > b.size()) {
      throw std::invalid_argument("census strength exceeds block size");
    }
  }
  Census c;
  if (t == 2 && !collection.blocks.empty()) {
    // Dense pair-indexed accumulation for small foundations; the verifier
    // hot path when strength is 2.
    Element max_label = 0;
    for (const auto& b : collection.blocks) {
      max_label = std::max(max_label, b.elems.back());
    }
    if (max_label < 4096) {
      const size_t n = static_cast<size_t>(max_label) + 1;
      std::vector<int> table(n * (n + 1) / 2, 0);
      auto tri = [n](Element lo, Element hi) {
        return static_cast<size_t>(hi) * (hi + 1) / 2 + lo;
      };
      for (const auto& b : collection.blocks) {
        const auto& e = b.elems;
        for (size_t i = 0; i < e.size(); ++i) {
          for (size_t j = i + 1; j < e.size(); ++j) {
            ++table[tri(e[i], e[j])];
          }
        }
      }
      for (Element hi = 0; hi <= max_label; ++hi) {
        for (Element lo = 0; lo <= hi; ++lo) {
          int cnt = table[tri(lo, hi)];
          if (cnt > 0) c.entries[{lo, hi}] = cnt;
        }
      }
      return c;
    }
  }
  for (const auto& [s, cnt] : census_list(collection, t)) {
    c.entries[s] = cnt;
  }
  return c;
}

void VerificationReport::add(Finding f) {
  passed = false;
  violations.push_back(std::move(f));
}

std::string describe(const Finding& f) {
  std::ostringstream os;
  auto subset_str = [](const TSubset& s) {
    std::string out = "{";
    for (size_t i = 0; i < s.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(s[i]);
    }
    return out + "}";
  };
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, VolumeMismatch>) {
          os << "VolumeMismatch: collection " << v.collection << " has "
             << v.found << " blocks, expected " << v.expected;
        } else if constexpr (std::is_same_v<T, CollectionsShareBlock>) {
          os << "CollectionsShareBlock: collections " << v.first_collection
             << " and " << v.second_collection << " both contain "
             << v.block.str();
        } else if constexpr (std::is_same_v<T, CensusMismatch>) {
          os << "CensusMismatch: subset " << subset_str(v.subset)
             << " has per-collection counts [";
          for (size_t i = 0; i < v.per_collection_counts.size(); ++i) {
            if (i) os << ",";
            os << v.per_collection_counts[i];
          }
          os << "]";
        } else if constexpr (std::is_same_v<T, SteinerViolation>) {
          os << "SteinerViolation: subset " << subset_str(v.subset)
             << " occurs " << v.count << " times in collection "
             << v.collection;
        } else if constexpr (std::is_same_v<T, IntersectionViolation>) {
          os << "IntersectionViolation: " << v.block_a.str() << " (collection "
             << v.collection_a << ") and " << v.block_b.str()
             << " (collection " << v.collection_b << ") share " << v.shared
             << " elements";
        } else if constexpr (std::is_same_v<T, RepeatedElement>) {
          os << "RepeatedElement: array " << v.array_index
             << " repeats element " << v.value;
        } else if constexpr (std::is_same_v<T, PairReuse>) {
          os << "PairReuse: pair {" << v.a << "," << v.b
             << "} shares a row or column " << v.count << " times";
        } else if constexpr (std::is_same_v<T, ClassCoverage>) {
          os << "ClassCoverage: class " << v.class_index << " covers element "
             << v.value << " " << v.count << " times";
        }
      },
      f);
  return os.str();
}

std::string VerificationReport::describe() const {
  if (passed) return "ok";
  std::ostringstream os;
  for (size_t i = 0; i < violations.size(); ++i) {
    if (i) os << "\n";
    os << tradekit::describe(violations[i]);
  }
  return os.str();
}

VerificationReport verify_trade(const TradeSystem& system) {
  VerificationReport report;
  const int mu = system.mu();
  for (int i = 0; i < mu; ++i) {
    int found = system.collections[i].size();
    if (found != system.volume) {
      report.add(VolumeMismatch{i, found, system.volume});
    }
  }
  // Pairwise disjointness at block granularity.
  std::map<Block, int> first_seen;
  for (int i = 0; i < mu; ++i) {
    for (const auto& b : system.collections[i].blocks) {
      auto [it, inserted] = first_seen.emplace(b, i);
      if (!inserted && it->second != i) {
        report.add(CollectionsShareBlock{it->second, i, b});
      }
    }
  }
  // All censuses at the declared strength must be identical mappings.
  if (mu >= 2) {
    std::vector<std::vector<std::pair<TSubset, int>>> lists;
    lists.reserve(mu);
    for (int i = 0; i < mu; ++i) {
      lists.push_back(census_list(system.collections[i], system.strength));
    }
    std::set<TSubset> mismatched;
    for (int i = 1; i < mu; ++i) {
      if (lists[i] == lists[0]) continue;
      // Collect every subset whose count differs somewhere.
      size_t a = 0, b = 0;
      while (a < lists[0].size() || b < lists[i].size()) {
        if (b == lists[i].size() ||
            (a < lists[0].size() && lists[0][a].first < lists[i][b].first)) {
          mismatched.insert(lists[0][a].first);
          ++a;
        } else if (a == lists[0].size() ||
                   lists[i][b].first < lists[0][a].first) {
          mismatched.insert(lists[i][b].first);
          ++b;
        } else {
          if (lists[0][a].second != lists[i][b].second) {
            mismatched.insert(lists[0][a].first);
          }
          ++a;
          ++b;
        }
      }
    }
    for (const auto& s : mismatched) {
      std::vector<int> counts(mu, 0);
      for (int i = 0; i < mu; ++i) {
        auto it = std::lower_bound(
            lists[i].begin(), lists[i].end(), s,
            [](const auto& p, const TSubset& key) { return p.first < key; });
        if (it != lists[i].end() && it->first == s) counts[i] = it->second;
      }
      report.add(CensusMismatch{s, counts});
    }
  }
  return report;
}

VerificationReport verify_steiner(const TradeSystem& system) {
  VerificationReport report;
  for (int i = 0; i < system.mu(); ++i) {
    for (const auto& [s, cnt] :
         census_list(system.collections[i], system.strength)) {
      if (cnt > 1) report.add(SteinerViolation{i, s, cnt});
    }
  }
  return report;
}

VerificationReport verify_solely_balanced(const TradeSystem& system) {
  VerificationReport report = verify_steiner(system);
  const int t = system.strength;
  for (int i = 0; i < system.mu(); ++i) {
    for (int j = i + 1; j < system.mu(); ++j) {
      for (const auto& a : system.collections[i].blocks) {
        for (const auto& b : system.collections[j].blocks) {
          int shared = a.intersection_size(b);
          if (shared > t) {
            report.add(IntersectionViolation{i, a, j, b, shared});
          }
        }
      }
    }
  }
  return report;
}

std::set<Element> foundation(const TradeSystem& system) {
  std::set<Element> out;
  for (const auto& col : system.collections) {
    for (const auto& b : col.blocks) {
      out.insert(b.elems.begin(), b.elems.end());
    }
  }
  return out;
}

TradeSystem relabel(const TradeSystem& system,
                    const std::map<Element, Element>& map) {
  auto base = foundation(system);
  std::set<Element> images;
  for (Element e : base) {
    auto it = map.find(e);
    if (it == map.end()) {
      throw std::invalid_argument("relabel map missing element " +
                                  std::to_string(e));
    }
    if (!images.insert(it->second).second) {
      throw std::invalid_argument("relabel map is not injective at image " +
                                  std::to_string(it->second));
    }
  }
  TradeSystem out = system;
  for (auto& col : out.collections) {
    for (auto& b : col.blocks) {
      std::vector<Element> e = b.elems;
      for (auto& x : e) x = map.at(x);
      b = Block(std::move(e));
    }
  }
  return out;
}

TradeSystem canonical_form(const TradeSystem& system) {
  TradeSystem out = system;
  for (auto& col : out.collections) {
    std::sort(col.blocks.begin(), col.blocks.end());
  }
  return out;
}

TradeSystem normalize_foundation(const TradeSystem& system) {
  std::map<Element, Element> map;
  Element next = 0;
  for (Element e : foundation(system)) map[e] = next++;
  if (map.empty()) return system;
  return relabel(system, map);
}

}  // namespace tradekit
