#pragma once

#include <compare>
#include <map>
#include <set>
#include <string>
#include <variant>
#include <vector>

namespace tradekit {

using Element = int;

/// A block is a k-subset of the point set, stored sorted ascending.
struct Block {
  std::vector<Element> elems;

  Block() = default;
  explicit Block(std::vector<Element> e);
  Block(std::initializer_list<Element> e) : Block(std::vector<Element>(e)) {}

  int size() const { return static_cast<int>(elems.size()); }
  bool contains(Element e) const;
  int intersection_size(const Block& other) const;
  std::string str() const;

  auto operator<=>(const Block&) const = default;
};

/// An ordered list of blocks. Duplicate blocks are representable; trades that
/// are not Steiner may need them.
struct BlockCollection {
  std::vector<Block> blocks;

  int size() const { return static_cast<int>(blocks.size()); }
  auto operator<=>(const BlockCollection&) const = default;
};

/// mu ordered block collections plus the declared parameters (k, t, m).
/// The universal object for trades, Steiner trades and solely balanced sets.
/// The foundation is derived, never stored.
struct TradeSystem {
  std::vector<BlockCollection> collections;
  int block_size = 0;  // k
  int strength = 0;    // t
  int volume = 0;      // m (declared; verify_trade checks each collection)

  // Validates 1 <= t < k and that all blocks have size k. A declared volume
  // of -1 means "infer from the first collection". Collections of unequal
  // size are representable; verify_trade reports them.
  static TradeSystem make(std::vector<BlockCollection> cols, int k, int t,
                          int declared_volume = -1);

  int mu() const { return static_cast<int>(collections.size()); }
  auto operator<=>(const TradeSystem&) const = default;
};

using TSubset = std::vector<Element>;  // sorted ascending, t distinct elements

/// Occurrence counts of t-subsets within one collection. Absent keys mean 0.
struct Census {
  std::map<TSubset, int> entries;

  int count(const TSubset& s) const;
  long total() const;
  bool operator==(const Census&) const = default;
};

// ---------------------------------------------------------------------------
// Verification findings. Each one carries enough data to be re-checked
// directly against the input object.

struct VolumeMismatch {
  int collection;
  int found;
  int expected;
};
struct CollectionsShareBlock {
  int first_collection;
  int second_collection;
  Block block;
};
struct CensusMismatch {
  TSubset subset;
  std::vector<int> per_collection_counts;
};
struct SteinerViolation {
  int collection;
  TSubset subset;
  int count;
};
struct IntersectionViolation {
  int collection_a;
  Block block_a;
  int collection_b;
  Block block_b;
  int shared;
};
// Grid-packing findings (see gridblock module).
struct RepeatedElement {
  int array_index;
  Element value;
};
struct PairReuse {
  Element a;
  Element b;
  int count;
};
struct ClassCoverage {
  int class_index;
  Element value;
  int count;
};

using Finding =
    std::variant<VolumeMismatch, CollectionsShareBlock, CensusMismatch,
                 SteinerViolation, IntersectionViolation, RepeatedElement,
                 PairReuse, ClassCoverage>;

std::string describe(const Finding& f);

struct VerificationReport {
  bool passed = true;
  std::vector<Finding> violations;

  void add(Finding f);
  std::string describe() const;
};

// ---------------------------------------------------------------------------
// Operations

/// Counts, for every t-subset, the number of blocks of the collection that
/// contain it. Throws std::invalid_argument if t exceeds the block size or
/// t < 1.
Census census(const BlockCollection& collection, int t);

/// Passes iff (a) all collections have the declared volume, (b) no block is
/// shared between two distinct collections, and (c) all censuses at the
/// declared strength are identical.
VerificationReport verify_trade(const TradeSystem& system);

/// Passes iff every census count in every collection is at most 1 at the
/// declared strength. Does not re-check the trade conditions; callers compose.
VerificationReport verify_steiner(const TradeSystem& system);

/// Passes iff verify_steiner passes and no two blocks from distinct
/// collections share more than t elements.
VerificationReport verify_solely_balanced(const TradeSystem& system);

/// Union of all elements over all blocks of all collections.
std::set<Element> foundation(const TradeSystem& system);

/// Applies an injective relabeling to every element. The map must be defined
/// on the whole foundation and injective; otherwise std::invalid_argument.
TradeSystem relabel(const TradeSystem& system,
                    const std::map<Element, Element>& map);

/// Blocks sorted ascending internally (already an invariant), blocks within
/// each collection sorted lexicographically. Idempotent.
TradeSystem canonical_form(const TradeSystem& system);

/// Order-preserving relabeling of the foundation onto 0..v-1.
TradeSystem normalize_foundation(const TradeSystem& system);

// Small helpers shared across modules.
long binomial(int n, int k);
std::vector<TSubset> subsets_of(const Block& b, int t);

}  // namespace tradekit
