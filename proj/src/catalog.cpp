#include "tradekit/catalog.hpp"

#include <cstdlib>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "tradekit/io.hpp"

#ifndef TRADEKIT_FIXTURE_DIR
#define TRADEKIT_FIXTURE_DIR "fixtures"
#endif

namespace tradekit {

std::string kind_name(EntryKind kind) {
  switch (kind) {
    case EntryKind::trade: return "trade";
    case EntryKind::solely_balanced_set: return "solely-balanced-set";
    case EntryKind::resolvable_design: return "resolvable-design";
    case EntryKind::grid_packing: return "grid-packing";
  }
  return "?";
}

std::string fixture_dir() {
  if (const char* env = std::getenv("TRADEKIT_FIXTURES")) return env;
  return TRADEKIT_FIXTURE_DIR;
}

std::string CatalogEntry::summary() const {
  std::ostringstream os;
  if (trade) {
    os << trade->mu() << "-way, k=" << trade->block_size
       << ", t=" << trade->strength << ", m=" << trade->volume
       << ", v=" << foundation(*trade).size();
  } else if (grid) {
    os << grid->arrays.size() << " arrays " << grid->rows << "x" << grid->cols
       << ", v=" << grid->points().size();
    if (grid->resolvable()) os << ", " << grid->class_count() << " classes";
  }
  return os.str();
}

namespace {

struct EntrySpec {
  EntryKind kind;
  std::string file;
  std::string provenance;
};

const std::map<std::string, EntrySpec>& registry() {
  static const std::map<std::string, EntrySpec> entries = {
      {"onefact-k4",
       {EntryKind::solely_balanced_set, "onefact-k4.trade",
        "worked example: the one-factorization of K_4 as a 3-way 1-solely "
        "balanced set"}},
      {"rb-9-3-1",
       {EntryKind::resolvable_design, "rb-9-3-1.trade",
        "worked example: an RB(9,3,1) in four parallel classes, blocks "
        "printed as columns"}},
      {"p3x3-k18",
       {EntryKind::grid_packing, "p3x3-k18.grid",
        "worked example: resolvable 3x3 grid-block packing of K_18 with "
        "three resolution classes"}},
      {"sbs-k18-6way",
       {EntryKind::solely_balanced_set, "sbs-k18-6way.trade",
        "worked example: rows and columns of the resolvable P_3x3(K_18) as a "
        "6-way 1-solely balanced set of volume 6"}},
      {"p3x3-k54-r1",
       {EntryKind::grid_packing, "p3x3-k54-r1.grid",
        "worked example: first resolution class of the resolvable "
        "P_3x3(K_54) obtained by cyclic expansion of the 6-way set on 18 "
        "points"}},
      {"p2x2-k8",
       {EntryKind::grid_packing, "p2x2-k8.grid",
        "worked example: optimal resolvable P_2x2(K_8) from the "
        "one-factorization of K_4"}},
      {"sbs-k8-6way",
       {EntryKind::solely_balanced_set, "sbs-k8-6way.trade",
        "worked example: 6-way 1-solely balanced set of volume 4 read off "
        "the rows and columns of the optimal P_2x2(K_8)"}},
  };
  return entries;
}

void verify_entry(CatalogEntry& entry) {
  std::string failure;
  switch (entry.kind) {
    case EntryKind::trade: {
      auto report = verify_trade(*entry.trade);
      if (!report.passed) failure = report.describe();
      break;
    }
    case EntryKind::solely_balanced_set: {
      auto report = verify_trade(*entry.trade);
      if (!report.passed) {
        failure = report.describe();
        break;
      }
      report = verify_solely_balanced(*entry.trade);
      if (!report.passed) failure = report.describe();
      break;
    }
    case EntryKind::resolvable_design: {
      auto report = verify_resolvable_design(as_resolvable(entry));
      if (!report.passed) failure = report.describe();
      break;
    }
    case EntryKind::grid_packing: {
      auto report = verify_packing(*entry.grid);
      if (!report.passed) failure = report.describe();
      break;
    }
  }
  if (!failure.empty()) {
    throw std::runtime_error("fixture '" + entry.name +
                             "' failed verification:\n" + failure);
  }
}

CatalogEntry load_entry(const std::string& name, const EntrySpec& spec) {
  CatalogEntry entry;
  entry.name = name;
  entry.kind = spec.kind;
  entry.provenance = spec.provenance;
  const std::string text = read_file(fixture_dir() + "/" + spec.file);
  if (detect_kind(text) == FileKind::trade) {
    entry.trade = parse_trade(text);
  } else {
    entry.grid = parse_grid(text);
  }
  verify_entry(entry);
  return entry;
}

}  // namespace

const CatalogEntry& catalog_get(const std::string& name) {
  static std::map<std::string, CatalogEntry> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(name);
  if (it != cache.end()) return it->second;
  auto spec = registry().find(name);
  if (spec == registry().end()) {
    std::string names;
    for (const auto& [n, _] : registry()) {
      if (!names.empty()) names += ", ";
      names += n;
    }
    throw std::out_of_range("unknown catalog entry '" + name +
                            "'; available: " + names);
  }
  return cache.emplace(name, load_entry(name, spec->second)).first->second;
}

std::vector<CatalogListing> catalog_list() {
  std::vector<CatalogListing> out;
  for (const auto& [name, spec] : registry()) {
    const CatalogEntry& entry = catalog_get(name);
    out.push_back({name, kind_name(spec.kind), entry.summary()});
  }
  return out;  // registry map is already alphabetical
}

ResolvableDesign as_resolvable(const CatalogEntry& entry, int lambda) {
  if (!entry.trade) {
    throw std::invalid_argument("entry '" + entry.name +
                                "' has no class structure to view as a design");
  }
  ResolvableDesign d;
  d.classes = entry.trade->collections;
  d.v = static_cast<int>(foundation(*entry.trade).size());
  d.block_size = entry.trade->block_size;
  d.lambda = lambda;
  return d;
}

}  // namespace tradekit
