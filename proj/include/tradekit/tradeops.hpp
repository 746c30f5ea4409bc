#pragma once

#include <vector>

#include "tradekit/core.hpp"

namespace tradekit {

/// Plan for the cyclic lift: adjoin mu_prime new elements x_1..x_{mu'} to the
/// first mu_prime collections of the source, shifted cyclically. When
/// new_elements is empty the source is first normalized to 0..v-1 and the new
/// elements default to v..v+mu'-1.
struct LiftPlan {
  TradeSystem source;
  int mu_prime = 0;
  std::vector<Element> new_elements;
  bool require_steiner = true;  // refuse non-solely-balanced sources
};

/// Output collection j = union over i of x_i prefixed onto source collection
/// (i+j) mod mu' (0-based). Raises a (v,k,t) system to (v+mu', k+1, t+1) with
/// volume mu'*m. With require_steiner the source must pass
/// verify_solely_balanced; the refusal names a violating block pair.
TradeSystem lift(const LiftPlan& plan);
TradeSystem lift(const TradeSystem& source, int mu_prime,
                 bool require_steiner = true);

/// Sub-system on the given collection positions (0-based, at least two,
/// distinct, in range). Declared k, t, m are kept.
TradeSystem restrict_collections(const TradeSystem& system,
                                 const std::vector<int>& indices);

/// Concatenates collections pairwise after shifting b's labels past a's
/// largest label, so the foundations are disjoint. Requires equal mu, k, t.
TradeSystem disjoint_sum(const TradeSystem& a, const TradeSystem& b);

}  // namespace tradekit
