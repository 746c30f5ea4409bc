#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tradekit/constructions.hpp"
#include "tradekit/core.hpp"
#include "tradekit/gridblock.hpp"

namespace tradekit {

enum class EntryKind { trade, solely_balanced_set, resolvable_design, grid_packing };

std::string kind_name(EntryKind kind);

/// A named fixture: a design transcribed verbatim from a known worked
/// example, stored as a data file and verified on load.
struct CatalogEntry {
  std::string name;
  EntryKind kind = EntryKind::trade;
  std::optional<TradeSystem> trade;
  std::optional<GridPacking> grid;
  std::string provenance;

  std::string summary() const;
};

/// Returns the named entry, loading and verifying it on first access.
/// Unknown names raise std::out_of_range listing the available names.
const CatalogEntry& catalog_get(const std::string& name);

struct CatalogListing {
  std::string name;
  std::string kind;
  std::string summary;
};

/// Deterministic, alphabetically sorted.
std::vector<CatalogListing> catalog_list();

/// Views a resolvable-design entry's classes as a ResolvableDesign.
ResolvableDesign as_resolvable(const CatalogEntry& entry, int lambda = 1);

/// Directory the fixture files are read from. The TRADEKIT_FIXTURES
/// environment variable overrides the compiled-in default.
std::string fixture_dir();

}  // namespace tradekit
