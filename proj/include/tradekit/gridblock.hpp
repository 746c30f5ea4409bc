#pragma once

#include <optional>
#include <set>
#include <vector>

#include "tradekit/core.hpp"

namespace tradekit {

/// An r x c array of distinct elements, stored row-major.
struct GridBlock {
  int rows = 0;
  int cols = 0;
  std::vector<Element> cells;

  static GridBlock make(int r, int c, std::vector<Element> cells);
  Element at(int i, int j) const { return cells[i * cols + j]; }
  std::vector<Element> row(int i) const;
  std::vector<Element> column(int j) const;

  auto operator<=>(const GridBlock&) const = default;
};

/// A set of r x c arrays over a point set, optionally partitioned into
/// resolution classes (each class given as a list of array indices).
struct GridPacking {
  int rows = 0;
  int cols = 0;
  std::vector<GridBlock> arrays;
  std::vector<std::vector<int>> classes;  // empty means not resolvable

  // Validates dimensions and, when classes are present, that they form a
  // partition of the array indices. Coverage of points is a semantic check
  // left to verify_packing.
  static GridPacking make(int r, int c, std::vector<GridBlock> arrays,
                          std::vector<std::vector<int>> classes = {});

  bool resolvable() const { return !classes.empty(); }
  int class_count() const { return static_cast<int>(classes.size()); }
  std::set<Element> points() const;

  bool operator==(const GridPacking&) const = default;
};

struct OptimalityReport {
  long bound = 0;  // floor((v-1)/(r+c-2))
  int class_count = 0;
  bool is_optimal = false;
};

/// Passes iff all grid-blocks have distinct entries, every pair of points
/// shares a row or a column at most once globally, and (when classes are
/// declared) each class covers every point exactly once.
VerificationReport verify_packing(const GridPacking& p);

/// Requires a resolvable packing. bound = floor((v-1)/(r+c-2)); optimal when
/// the class count attains it.
OptimalityReport optimality(const GridPacking& p);

/// One collection per resolution class taken from the rows of its arrays; if
/// use_columns (requires r == c), additionally one collection per class from
/// the columns, appended after all row classes in the same class order.
/// Output block size c, volume |points|/c, strength 1.
TradeSystem rows_cols_to_sbs(const GridPacking& p, bool use_columns);

/// Cyclic subscripted expansion: each block (e_0..e_{c-1}) of a parallel
/// mu-way 1-solely balanced set becomes an r x c array with
/// cell[i][j] = i*v + e_{(i+j) mod c} after the foundation is normalized to
/// 0..v-1. One resolution class per input collection.
GridPacking expand_sbs(const TradeSystem& s, int r);

/// Optimal resolvable 2x2 packing of K_{4m}: expand_sbs over the
/// one-factorization of K_{2m}; 2m-1 classes attain floor((4m-1)/2).
GridPacking two_by_two_optimal(int m);

/// rows_cols_to_sbs(expand_sbs(s, c), true): doubles the way count, giving a
/// 2mu-way 1-solely balanced set over c*v points of volume v.
TradeSystem sbs_from_packing_doubling(const TradeSystem& s);

/// Order-preserving relabeling of the packing's points onto 0..v-1.
GridPacking normalize_points(const GridPacking& p);

/// Parameter calculator (not a constructor) for composing a mu-way 1-solely
/// balanced set with an s+1 grid-block resolvable packing of K_{rc}: a
/// mu'-way (rv+mu', c+1, 2) Steiner trade of volume (rv/c)*mu' for
/// mu' <= s*mu + 1.
struct CompositionParams {
  long mu_prime_max = 0;
  long foundation_size = 0;  // r*v + mu'
  int block_size = 0;        // c + 1
  long volume = 0;           // (r*v/c) * mu'
  bool constructive = false; // calculator only; no construction is provided
};
CompositionParams steiner_params_from_composition(long v, int c, int r, long s,
                                                  long mu, long mu_prime);

}  // namespace tradekit
