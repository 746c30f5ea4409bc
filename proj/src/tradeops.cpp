#include "tradekit/tradeops.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace tradekit {

TradeSystem lift(const LiftPlan& plan) {
  const TradeSystem& source = plan.source;
  const int mu = source.mu();
  const int mu_prime = plan.mu_prime;
  if (mu_prime < 2 || mu_prime > mu) {
    throw std::invalid_argument("lift needs 2 <= mu' <= mu of the source");
  }
  if (plan.require_steiner) {
    auto report = verify_solely_balanced(source);
    if (!report.passed) {
      throw std::invalid_argument(
          "lift refused: source is not solely balanced at t=" +
          std::to_string(source.strength) + "; " +
          describe(report.violations.front()));
    }
  }

  TradeSystem src = source;
  std::vector<Element> fresh = plan.new_elements;
  if (fresh.empty()) {
    src = normalize_foundation(source);
    const Element v = static_cast<Element>(foundation(src).size());
    for (int i = 0; i < mu_prime; ++i) fresh.push_back(v + i);
  } else {
    if (static_cast<int>(fresh.size()) != mu_prime) {
      throw std::invalid_argument("lift needs exactly mu' new elements");
    }
    auto base = foundation(src);
    std::set<Element> seen;
    for (Element x : fresh) {
      if (base.count(x)) {
        throw std::invalid_argument("new element " + std::to_string(x) +
                                    " collides with the source foundation");
      }
      if (!seen.insert(x).second) {
        throw std::invalid_argument("new elements must be distinct");
      }
    }
  }

  std::vector<BlockCollection> out(mu_prime);
  for (int j = 0; j < mu_prime; ++j) {
    for (int i = 0; i < mu_prime; ++i) {
      const auto& col = src.collections[(i + j) % mu_prime];
      for (const auto& b : col.blocks) {
        std::vector<Element> elems = b.elems;
        elems.push_back(fresh[i]);
        out[j].blocks.push_back(Block(std::move(elems)));
      }
    }
  }
  return TradeSystem::make(std::move(out), source.block_size + 1,
                           source.strength + 1, mu_prime * source.volume);
}

TradeSystem lift(const TradeSystem& source, int mu_prime,
                 bool require_steiner) {
  LiftPlan plan;
  plan.source = source;
  plan.mu_prime = mu_prime;
  plan.require_steiner = require_steiner;
  return lift(plan);
}

TradeSystem restrict_collections(const TradeSystem& system,
                                 const std::vector<int>& indices) {
  if (indices.size() < 2) {
    throw std::invalid_argument("restriction needs at least two collections");
  }
  std::set<int> seen;
  std::vector<BlockCollection> cols;
  for (int idx : indices) {
    if (idx < 0 || idx >= system.mu()) {
      throw std::invalid_argument("collection index " + std::to_string(idx) +
                                  " out of range");
    }
    if (!seen.insert(idx).second) {
      throw std::invalid_argument("collection indices must be distinct");
    }
    cols.push_back(system.collections[idx]);
  }
  return TradeSystem::make(std::move(cols), system.block_size, system.strength,
                           system.volume);
}

TradeSystem disjoint_sum(const TradeSystem& a, const TradeSystem& b) {
  if (a.mu() != b.mu() || a.block_size != b.block_size ||
      a.strength != b.strength) {
    throw std::invalid_argument("disjoint sum needs equal mu, k and t");
  }
  auto base = foundation(a);
  const Element shift = base.empty() ? 0 : *base.rbegin() + 1;
  std::map<Element, Element> map;
  for (Element e : foundation(b)) map[e] = e + shift;
  TradeSystem shifted = relabel(b, map);

  std::vector<BlockCollection> cols;
  cols.reserve(a.mu());
  for (int i = 0; i < a.mu(); ++i) {
    BlockCollection col = a.collections[i];
    const auto& extra = shifted.collections[i].blocks;
    col.blocks.insert(col.blocks.end(), extra.begin(), extra.end());
    cols.push_back(std::move(col));
  }
  return TradeSystem::make(std::move(cols), a.block_size, a.strength,
                           a.volume + b.volume);
}

}  // namespace tradekit
