// tradekit: construct, verify and audit mu-way Steiner trades, grid-block
// packings and volume-spectrum tables.
//
// Exit codes: 0 success/verified, 1 verification failure, 2 usage or
// parameter error, 3 search inconclusive (budget).

#include <filesystem>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tradekit/catalog.hpp"
#include "tradekit/constructions.hpp"
#include "tradekit/core.hpp"
#include "tradekit/gridblock.hpp"
#include "tradekit/io.hpp"
#include "tradekit/oracle.hpp"
#include "tradekit/spectrum.hpp"
#include "tradekit/tradeops.hpp"

namespace {

using namespace tradekit;

constexpr int kExitOk = 0;
constexpr int kExitVerification = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInconclusive = 3;

struct LoadedObject {
  std::optional<TradeSystem> trade;
  std::optional<GridPacking> grid;
};

// Inputs name either a catalog entry or a file path.
LoadedObject load_input(const std::string& name) {
  LoadedObject out;
  bool is_catalog = false;
  for (const auto& listing : catalog_list()) {
    if (listing.name == name) is_catalog = true;
  }
  if (is_catalog) {
    const CatalogEntry& entry = catalog_get(name);
    out.trade = entry.trade;
    out.grid = entry.grid;
    return out;
  }
  const std::string text = read_file(name);
  if (detect_kind(text) == FileKind::trade) {
    out.trade = parse_trade(text);
  } else {
    out.grid = parse_grid(text);
  }
  return out;
}

TradeSystem need_trade(const LoadedObject& obj, const std::string& name) {
  if (!obj.trade) {
    throw std::invalid_argument("'" + name + "' is not a trade input");
  }
  return *obj.trade;
}

GridPacking need_grid(const LoadedObject& obj, const std::string& name) {
  if (!obj.grid) {
    throw std::invalid_argument("'" + name + "' is not a grid input");
  }
  return *obj.grid;
}

int emit_output(const std::string& text, const std::string& out_path,
                const std::string& citation) {
  std::cerr << "construction: " << citation << "\n";
  if (out_path.empty()) {
    std::cout << text;
  } else {
    write_file(out_path, text);
    std::cout << "wrote " << out_path << "\n";
  }
  return kExitOk;
}

int verify_and_emit_trade(const TradeSystem& ts, const std::string& out_path,
                          const std::string& citation, bool check_steiner,
                          bool check_solely) {
  auto report = verify_trade(ts);
  if (report.passed && check_solely) report = verify_solely_balanced(ts);
  if (report.passed && check_steiner) report = verify_steiner(ts);
  if (!report.passed) {
    std::cerr << "constructed object failed verification:\n"
              << report.describe() << "\n";
    return kExitVerification;
  }
  return emit_output(serialize_trade(ts), out_path, citation);
}

int verify_and_emit_grid(const GridPacking& p, const std::string& out_path,
                         const std::string& citation) {
  auto report = verify_packing(p);
  if (!report.passed) {
    std::cerr << "constructed packing failed verification:\n"
              << report.describe() << "\n";
    return kExitVerification;
  }
  return emit_output(serialize_grid(p), out_path, citation);
}

int cmd_verify(const std::string& path, bool steiner, int solely) {
  const std::string text = read_file(path);
  if (detect_kind(text) == FileKind::grid) {
    if (steiner || solely >= 0) {
      throw std::invalid_argument(
          "--steiner/--solely apply to trade files only");
    }
    GridPacking p = parse_grid(text);
    auto report = verify_packing(p);
    if (report.passed) {
      std::cout << "ok: grid packing, " << p.arrays.size() << " arrays, "
                << p.points().size() << " points";
      if (p.resolvable()) std::cout << ", " << p.class_count() << " classes";
      std::cout << "\n";
      return kExitOk;
    }
    std::cout << report.describe() << "\n";
    return kExitVerification;
  }
  TradeSystem ts = parse_trade(text);
  if (solely >= 0 && solely != ts.strength) {
    ts = TradeSystem::make(ts.collections, ts.block_size, solely, ts.volume);
  }
  bool ok = true;
  std::string failures;
  auto fold = [&](const VerificationReport& report) {
    if (report.passed) return;
    if (!failures.empty()) failures += "\n";
    failures += report.describe();
    ok = false;
  };
  fold(verify_trade(ts));
  if (solely >= 0) {
    fold(verify_solely_balanced(ts));
  } else if (steiner) {
    fold(verify_steiner(ts));
  }
  if (ok) {
    std::cout << "ok: " << ts.mu() << "-way (v=" << foundation(ts).size()
              << ", k=" << ts.block_size << ", t=" << ts.strength
              << ") volume " << ts.volume << "\n";
    return kExitOk;
  }
  std::cout << failures << "\n";
  return kExitVerification;
}

int cmd_spectrum(int k, long horizon, bool diff, bool records) {
  SpectrumRuleSet rules = rules_for(k);
  SpectrumReport report = achievable_closure(rules, horizon);
  std::cout << report_table(report);
  auto check = threshold_check(report);
  std::cout << "threshold " << check.threshold << " <= 12(k-1) = "
            << check.bound_12 << ": " << (check.within_12 ? "pass" : "FAIL")
            << "\n";
  if (check.bound_11_even) {
    std::cout << "threshold " << check.threshold << " <= 11(k-1) = "
              << *check.bound_11_even << ": "
              << (*check.within_11_even ? "pass" : "FAIL") << "\n";
  }
  if (diff) {
    auto discrepancies = diff_against_reference(rules, report);
    if (discrepancies.empty()) {
      std::cout << "reference diff: none\n";
    } else {
      std::cout << "reference diff (" << discrepancies.size() << "):\n";
      for (const auto& d : discrepancies) {
        std::cout << "  m=" << d.volume << ": reference "
                  << (d.reference_lists_exception ? "lists it as an exception"
                                                  : "claims it achievable")
                  << ", engine "
                  << (d.engine_achieves ? "achieves it" : "cannot reach it");
        if (!d.witness_chain.empty()) std::cout << " [" << d.witness_chain << "]";
        std::cout << "\n";
      }
    }
    for (const auto& note : rules.notes) {
      std::cout << "audit note [" << note.tag << "]: " << note.text << "\n";
    }
  }
  if (records) std::cout << report_records(report);
  return kExitOk;
}

int cmd_search(const SearchSpec& spec, const std::string& out_dir) {
  auto outcome = search(spec);
  std::cout << outcome.solutions.size() << " solutions, "
            << (outcome.exhausted ? "exhausted" : "inconclusive (budget)")
            << ", nodes=" << outcome.nodes << "\n";
  if (!out_dir.empty()) {
    std::filesystem::create_directories(out_dir);
    for (size_t i = 0; i < outcome.solutions.size(); ++i) {
      const std::string path =
          out_dir + "/solution-" + std::to_string(i + 1) + ".trade";
      write_file(path, serialize_trade(outcome.solutions[i]));
      std::cout << "wrote " << path << "\n";
    }
  }
  return outcome.exhausted || !outcome.solutions.empty() ? kExitOk
                                                         : kExitInconclusive;
}

std::vector<int> parse_index_list(const std::string& csv) {
  std::vector<int> out;
  std::string cur;
  for (char ch : csv + ",") {
    if (ch == ',') {
      if (!cur.empty()) {
        out.push_back(std::stoi(cur) - 1);  // file-level indices are 1-based
        cur.clear();
      }
    } else {
      cur.push_back(ch);
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"mu-way Steiner trade construction and verification toolkit"};
  app.require_subcommand(1);

  // verify
  std::string verify_path;
  bool verify_steiner_flag = false;
  int verify_solely = -1;
  auto* verify_cmd = app.add_subcommand("verify", "verify a trade or grid file");
  verify_cmd->add_option("path", verify_path, "input file")->required();
  verify_cmd->add_flag("--steiner", verify_steiner_flag,
                       "also require the Steiner condition");
  verify_cmd->add_option("--solely", verify_solely,
                         "also require t-solely balanced at the given t");

  // catalog
  auto* catalog_cmd = app.add_subcommand("catalog", "list or show fixtures");
  std::string catalog_show;
  catalog_cmd->add_option("name", catalog_show, "entry to print");

  // construct
  auto* construct = app.add_subcommand("construct", "run a construction");
  construct->require_subcommand(1);
  std::string out_path;
  construct->add_option("--out", out_path, "write result here (default: stdout)");

  int onefact_n = 0;
  auto* c_onefact = construct->add_subcommand("onefact", "one-factorization of K_n");
  c_onefact->add_option("--n", onefact_n, "even point count")->required();

  int affine_q = 0;
  auto* c_affine = construct->add_subcommand("affine", "affine plane RB(q^2,q,1)");
  c_affine->add_option("--q", affine_q, "prime power <= 32")->required();

  std::string rbsbs_in;
  int rbsbs_q = 0;
  auto* c_rbsbs = construct->add_subcommand(
      "rb-to-sbs", "parallel classes of an RB(v,k,1) as a 1-solely balanced set");
  c_rbsbs->add_option("--q", rbsbs_q, "affine plane order");
  c_rbsbs->add_option("--in", rbsbs_in, "catalog name or file of a resolvable design");

  std::string lift_in;
  int lift_mu = 0;
  bool lift_allow = false;
  auto* c_lift = construct->add_subcommand("lift", "cyclic lift to (v+mu',k+1,t+1)");
  c_lift->add_option("--in", lift_in, "source set")->required();
  c_lift->add_option("--mu", lift_mu, "number of new elements")->required();
  c_lift->add_flag("--allow-non-steiner", lift_allow,
                   "lift a plain trade (output verified as a trade only)");

  std::vector<std::string> sum_in;
  auto* c_sum = construct->add_subcommand("sum", "disjoint-foundation sum");
  c_sum->add_option("--in", sum_in, "two trade inputs")->expected(2);

  std::string restrict_in;
  std::string restrict_cols;
  auto* c_restrict = construct->add_subcommand("restrict", "keep selected collections");
  c_restrict->add_option("--in", restrict_in, "source trade")->required();
  c_restrict->add_option("--collections", restrict_cols,
                         "comma-separated 1-based collection list")->required();

  std::string expand_in;
  int expand_rows = 0;
  auto* c_expand = construct->add_subcommand(
      "expand", "cyclic expansion into a resolvable r x c packing");
  c_expand->add_option("--in", expand_in, "parallel 1-solely balanced set")->required();
  c_expand->add_option("--rows", expand_rows, "row count r <= c")->required();

  std::string rowscols_in;
  bool rows_only = false;
  auto* c_rowscols = construct->add_subcommand(
      "rowscols", "rows (and columns) of a resolvable packing as a set");
  c_rowscols->add_option("--in", rowscols_in, "grid input")->required();
  c_rowscols->add_flag("--rows-only", rows_only, "skip the column classes");

  int p2x2_m = 0;
  auto* c_p2x2 = construct->add_subcommand("p2x2", "optimal resolvable P_2x2(K_4m)");
  c_p2x2->add_option("--m", p2x2_m, "matching size")->required();

  // spectrum
  int spectrum_k = 0;
  long spectrum_horizon = 400;
  bool spectrum_diff = false;
  bool spectrum_records = false;
  auto* spectrum_cmd = app.add_subcommand("spectrum", "volume spectrum closure");
  spectrum_cmd->add_option("--k", spectrum_k, "block size 5..14")->required();
  spectrum_cmd->add_option("--horizon", spectrum_horizon, "table horizon");
  spectrum_cmd->add_flag("--diff", spectrum_diff, "diff against the published lists");
  spectrum_cmd->add_flag("--records", spectrum_records, "emit one record per volume");

  // search
  SearchSpec spec;
  std::string search_out;
  bool no_steiner = false;
  bool no_pruning = false;
  auto* search_cmd = app.add_subcommand("search", "exhaustive desk-scale search");
  search_cmd->add_option("--v", spec.v_max, "foundation bound")->required();
  search_cmd->add_option("--k", spec.k, "block size")->required();
  search_cmd->add_option("--t", spec.t, "strength")->required();
  search_cmd->add_option("--m", spec.m, "volume")->required();
  search_cmd->add_option("--mu", spec.mu, "collection count")->required();
  search_cmd->add_flag("--no-steiner", no_steiner, "search plain trades");
  search_cmd->add_flag("--no-pruning", no_pruning, "disable census pruning");
  search_cmd->add_option("--limit", spec.limit, "max solutions");
  search_cmd->add_option("--budget", spec.budget, "node budget");
  search_cmd->add_option("--out", search_out, "directory for solution files");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*verify_cmd) {
      return cmd_verify(verify_path, verify_steiner_flag, verify_solely);
    }
    if (*catalog_cmd) {
      if (catalog_show.empty()) {
        for (const auto& entry : catalog_list()) {
          std::cout << entry.name << "  [" << entry.kind << "]  "
                    << entry.summary << "\n";
        }
      } else {
        const CatalogEntry& entry = catalog_get(catalog_show);
        std::cerr << "provenance: " << entry.provenance << "\n";
        std::cout << (entry.trade ? serialize_trade(*entry.trade)
                                  : serialize_grid(*entry.grid));
      }
      return kExitOk;
    }
    if (*construct) {
      if (*c_onefact) {
        return verify_and_emit_trade(
            one_factorization(onefact_n), out_path,
            "one-factorization of K_" + std::to_string(onefact_n) +
                " via the circle method; an (n-1)-way 1-solely balanced set "
                "with k=2, m=n/2",
            false, true);
      }
      if (*c_affine) {
        ResolvableDesign d = affine_plane_rb(affine_q);
        auto report = verify_resolvable_design(d);
        if (!report.passed) {
          std::cerr << report.describe() << "\n";
          return kExitVerification;
        }
        return verify_and_emit_trade(
            rb_to_sbs(d), out_path,
            "affine plane of order q: RB(q^2,q,1), lines y=ax+b plus the "
            "vertical class, emitted as its q+1 parallel classes",
            false, true);
      }
      if (*c_rbsbs) {
        TradeSystem sbs = [&]() {
          if (rbsbs_q > 0) return rb_to_sbs(affine_plane_rb(rbsbs_q));
          if (rbsbs_in.empty()) {
            throw std::invalid_argument("rb-to-sbs needs --q or --in");
          }
          TradeSystem ts = need_trade(load_input(rbsbs_in), rbsbs_in);
          ResolvableDesign d;
          d.classes = ts.collections;
          d.v = static_cast<int>(foundation(ts).size());
          d.block_size = ts.block_size;
          d.lambda = 1;
          auto report = verify_resolvable_design(d);
          if (!report.passed) {
            throw std::invalid_argument("input is not an RB(v,k,1):\n" +
                                        report.describe());
          }
          return rb_to_sbs(d);
        }();
        return verify_and_emit_trade(
            sbs, out_path,
            "parallel classes of an RB(v,k,1) as a ((v-1)/(k-1))-way "
            "1-solely balanced set of volume v/k",
            false, true);
      }
      if (*c_lift) {
        TradeSystem src = need_trade(load_input(lift_in), lift_in);
        TradeSystem lifted = lift(src, lift_mu, !lift_allow);
        return verify_and_emit_trade(
            lifted, out_path,
            "cyclic lift adjoining mu' new elements: (v,k,t) -> "
            "(v+mu',k+1,t+1), volume mu'*m; Steiner when the source is "
            "t-solely balanced",
            !lift_allow, false);
      }
      if (*c_sum) {
        TradeSystem a = need_trade(load_input(sum_in[0]), sum_in[0]);
        TradeSystem b = need_trade(load_input(sum_in[1]), sum_in[1]);
        return verify_and_emit_trade(
            disjoint_sum(a, b), out_path,
            "disjoint-foundation sum: volumes add and the Steiner property "
            "is preserved",
            false, false);
      }
      if (*c_restrict) {
        TradeSystem src = need_trade(load_input(restrict_in), restrict_in);
        return verify_and_emit_trade(
            restrict_collections(src, parse_index_list(restrict_cols)),
            out_path,
            "sub-system on chosen collections; any two collections of a "
            "mu-way trade form a trade",
            false, false);
      }
      if (*c_expand) {
        TradeSystem src = need_trade(load_input(expand_in), expand_in);
        return verify_and_emit_grid(
            expand_sbs(src, expand_rows), out_path,
            "cyclic subscripted expansion of a parallel 1-solely balanced "
            "set into a resolvable r x c grid-block packing, one resolution "
            "class per collection");
      }
      if (*c_rowscols) {
        GridPacking p = need_grid(load_input(rowscols_in), rowscols_in);
        return verify_and_emit_trade(
            rows_cols_to_sbs(p, !rows_only), out_path,
            "rows (and columns, when square) of a resolvable grid-block "
            "packing as a mu-way 1-solely balanced set",
            false, true);
      }
      if (*c_p2x2) {
        GridPacking p = two_by_two_optimal(p2x2_m);
        auto opt = optimality(p);
        std::cerr << "classes " << opt.class_count << ", bound " << opt.bound
                  << (opt.is_optimal ? " (optimal)" : " (not optimal)")
                  << "\n";
        return verify_and_emit_grid(
            p, out_path,
            "optimal resolvable P_2x2(K_4m) from the one-factorization of "
            "K_2m; 2m-1 classes attain floor((4m-1)/2)");
      }
      return kExitUsage;
    }
    if (*spectrum_cmd) {
      return cmd_spectrum(spectrum_k, spectrum_horizon, spectrum_diff,
                          spectrum_records);
    }
    if (*search_cmd) {
      spec.steiner = !no_steiner;
      spec.census_pruning = !no_pruning;
      return cmd_search(spec, search_out);
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
