#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "tradekit/core.hpp"

namespace tradekit {

/// A resolvable 2-(v,k,lambda) design: parallel classes that each partition
/// the point set, with every pair of points in exactly lambda blocks overall.
struct ResolvableDesign {
  std::vector<BlockCollection> classes;
  int v = 0;
  int block_size = 0;
  int lambda = 0;

  int class_count() const { return static_cast<int>(classes.size()); }
};

/// Checks both resolvable-design invariants directly.
VerificationReport verify_resolvable_design(const ResolvableDesign& d);

struct RbParams {
  long parallel_classes = 0;  // r = lambda(v-1)/(k-1)
  long block_count = 0;       // b = r*v/k
};

struct RgddParams {
  int group_size = 0;      // g
  int group_count = 0;     // u
  int block_size = 0;      // k
  long parallel_classes = 0;  // r*
  long block_count = 0;       // b
};

enum class Existence { exists, not_exists, possible_exception, unknown };

struct ExistenceVerdict {
  Existence status = Existence::unknown;
  std::string reason;
};

/// Raised when a divisibility requirement fails; names the violated
/// congruence.
struct NecessaryConditionFailure : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// The one-factorization of K_n as an (n-1)-way 1-solely balanced set over
/// points 1..n (k=2, m=n/2). Classes are emitted in lexicographic order, so
/// class j pairs point 1 with point j+1. Requires n even.
TradeSystem one_factorization(int n);

/// The affine plane of order q as an RB(q^2, q, 1): points are pairs over
/// GF(q) labeled x*q+y+1, lines y=ax+b plus the vertical class. The vertical
/// class comes first, then slopes in field order. Supports prime powers
/// q <= 32.
ResolvableDesign affine_plane_rb(int q);

/// r = lambda(v-1)/(k-1) and b = r*v/k; NecessaryConditionFailure when a
/// division is not exact.
RbParams rb_params(long v, int k, int lambda);

/// RB(v,4,1) exists iff v == 4 (mod 12).
ExistenceVerdict rb4_exists(long v);

/// Solves v=(k-1)r*+g and (r*+1)v=kb+gu for a k-RGDD of type g^u;
/// NecessaryConditionFailure names the failing equation. Both equations are
/// re-verified on the output.
RgddParams rgdd_solve(int g, int u, int k);

/// Necessary conditions for a 4-RGDD of type g^u (u>=4, gu==0 mod 4,
/// g(u-1)==0 mod 3) plus the tabulated definite and possible exceptions.
ExistenceVerdict rgdd4_exists(int g, int u);

/// Parallel classes of an RB(v,k,1) as a mu-way 1-solely balanced set with
/// mu=(v-1)/(k-1) and volume v/k. Class order is preserved. lambda must be 1.
TradeSystem rb_to_sbs(const ResolvableDesign& design);

/// Maximum admissible mu for a 1-solely balanced set with k = v/m:
/// floor((v-1)/(k-1)). Throws when k*m != v.
long sbs_mu_bound(long v, int k, long m);

/// A resolvable transversal design with u groups of prime-power size g
/// (u <= g), presented as its g parallel classes: a g-way 1-solely balanced
/// set with block size u and volume g. Realizes a u-RGDD of type g^u.
TradeSystem transversal_design_sbs(int g, int u);

/// Rows, columns and (mu==3) the wrap-around diagonal of an n x n grid as
/// mutually orthogonal partitions: a mu-way 1-solely balanced set with block
/// size n and volume n over n^2 points, for mu in {2,3} and any n >= 2.
TradeSystem grid_partition_sbs(int n, int mu);

/// True when q = p^e for a prime p (q >= 2).
bool is_prime_power(int q);

}  // namespace tradekit
