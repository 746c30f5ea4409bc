#include <doctest.h>

#include "tradekit/catalog.hpp"
#include "tradekit/gridblock.hpp"
#include "tradekit/io.hpp"
#include "test_util.hpp"

using namespace tradekit;

TEST_CASE("every catalog entry loads and passes its verifier") {
  auto listing = catalog_list();
  CHECK(listing.size() == 7);
  for (const auto& entry : listing) {
    const CatalogEntry& e = catalog_get(entry.name);
    CHECK(e.name == entry.name);
    if (e.trade) {
      CHECK(verify_trade(*e.trade).passed);
    } else {
      REQUIRE(e.grid);
      CHECK(verify_packing(*e.grid).passed);
    }
  }
}

TEST_CASE("catalog_list is sorted and stable") {
  auto a = catalog_list();
  auto b = catalog_list();
  REQUIRE(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].name == b[i].name);
    CHECK(a[i].summary == b[i].summary);
    if (i) CHECK(a[i - 1].name < a[i].name);
  }
  bool has_rb = false;
  bool has_onefact = false;
  for (const auto& e : a) {
    if (e.name == "rb-9-3-1") has_rb = true;
    if (e.name == "onefact-k4") has_onefact = true;
  }
  CHECK(has_rb);
  CHECK(has_onefact);
}

TEST_CASE("unknown catalog names list the available entries") {
  try {
    catalog_get("no-such-design");
    CHECK(false);
  } catch (const std::out_of_range& e) {
    std::string msg = e.what();
    CHECK(msg.find("rb-9-3-1") != std::string::npos);
    CHECK(msg.find("p3x3-k18") != std::string::npos);
  }
}

TEST_CASE("rb-9-3-1 has 12 blocks in 4 parallel classes over 9 points") {
  const CatalogEntry& entry = catalog_get("rb-9-3-1");
  REQUIRE(entry.trade);
  CHECK(entry.trade->mu() == 4);
  CHECK(entry.trade->volume == 3);
  CHECK(foundation(*entry.trade).size() == 9);
  ResolvableDesign d = as_resolvable(entry);
  CHECK(verify_resolvable_design(d).passed);
  // Parallel classes double as a 4-way 1-solely balanced set.
  CHECK(verify_solely_balanced(*entry.trade).passed);
}

TEST_CASE("p3x3-k18 is resolvable with 3 classes of 2 arrays") {
  const CatalogEntry& entry = catalog_get("p3x3-k18");
  REQUIRE(entry.grid);
  CHECK(entry.grid->arrays.size() == 6);
  CHECK(entry.grid->class_count() == 3);
  CHECK(entry.grid->points().size() == 18);
  // Spanning property: the columns of each class cover every point.
  for (const auto& cls : entry.grid->classes) {
    std::set<Element> covered;
    for (int idx : cls) {
      for (int j = 0; j < entry.grid->cols; ++j) {
        auto col = entry.grid->arrays[idx].column(j);
        covered.insert(col.begin(), col.end());
      }
    }
    CHECK(covered == entry.grid->points());
  }
}

TEST_CASE("sbs-k18-6way: S1 census at t=2 covers 18 pairs once") {
  const CatalogEntry& entry = catalog_get("sbs-k18-6way");
  REQUIRE(entry.trade);
  CHECK(entry.trade->mu() == 6);
  Census c = census(entry.trade->collections[0], 2);
  CHECK(c.entries.size() == 18);
  for (const auto& [_, count] : c.entries) CHECK(count == 1);
  CHECK(verify_solely_balanced(*entry.trade).passed);
}

TEST_CASE("perturbing one element of the 6-way table breaks the census") {
  TradeSystem ts = *catalog_get("sbs-k18-6way").trade;
  // Swap element 0 of the first block of S1 for a different point.
  std::vector<Element> elems = ts.collections[0].blocks[0].elems;  // {0,1,2}
  elems[0] = 3;
  ts.collections[0].blocks[0] = Block(elems);
  auto report = verify_trade(ts);
  CHECK(!report.passed);
  bool saw_census = false;
  for (const auto& f : report.violations) {
    if (std::holds_alternative<CensusMismatch>(f)) saw_census = true;
  }
  CHECK(saw_census);
}

TEST_CASE("sbs-k18-6way equals the rows+columns extraction of p3x3-k18") {
  const CatalogEntry& packing = catalog_get("p3x3-k18");
  const CatalogEntry& table = catalog_get("sbs-k18-6way");
  TradeSystem extracted = rows_cols_to_sbs(*packing.grid, true);
  CHECK(serialize_trade(canonical_form(extracted)) ==
        serialize_trade(canonical_form(*table.trade)));
}

TEST_CASE("p2x2-k8 equals the expansion of onefact-k4 up to relabeling") {
  const CatalogEntry& onefact = catalog_get("onefact-k4");
  const CatalogEntry& packing = catalog_get("p2x2-k8");
  GridPacking expanded = expand_sbs(*onefact.trade, 2);
  CHECK(serialize_grid(normalize_points(expanded)) ==
        serialize_grid(normalize_points(*packing.grid)));
}

TEST_CASE("relabeling fixtures preserves every verdict") {
  const CatalogEntry& entry = catalog_get("sbs-k18-6way");
  auto map = testutil::random_injection(*entry.trade, 23);
  TradeSystem image = relabel(*entry.trade, map);
  CHECK(verify_trade(image).passed);
  CHECK(verify_steiner(image).passed);
  CHECK(verify_solely_balanced(image).passed);
}

TEST_CASE("fixture files are canonical for the serializer") {
  for (const auto& listing : catalog_list()) {
    const CatalogEntry& entry = catalog_get(listing.name);
    std::string path = fixture_dir() + "/" + listing.name +
                       (entry.trade ? ".trade" : ".grid");
    std::string text = read_file(path);
    if (entry.trade) {
      CHECK(serialize_trade(parse_trade(text)) == text);
    } else {
      CHECK(serialize_grid(parse_grid(text)) == text);
    }
  }
}
