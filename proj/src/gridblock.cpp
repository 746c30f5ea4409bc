#include "tradekit/gridblock.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "tradekit/constructions.hpp"

namespace tradekit {

GridBlock GridBlock::make(int r, int c, std::vector<Element> cells) {
  if (r < 1 || c < 1) {
    throw std::invalid_argument("grid-block dimensions must be positive");
  }
  if (cells.size() != static_cast<size_t>(r) * c) {
    throw std::invalid_argument("grid-block needs exactly r*c cells");
  }
  for (Element e : cells) {
    if (e < 0) throw std::invalid_argument("negative element label");
  }
  GridBlock g;
  g.rows = r;
  g.cols = c;
  g.cells = std::move(cells);
  return g;
}

std::vector<Element> GridBlock::row(int i) const {
  std::vector<Element> out(cells.begin() + i * cols,
                           cells.begin() + (i + 1) * cols);
  return out;
}

std::vector<Element> GridBlock::column(int j) const {
  std::vector<Element> out;
  out.reserve(rows);
  for (int i = 0; i < rows; ++i) out.push_back(at(i, j));
  return out;
}

GridPacking GridPacking::make(int r, int c, std::vector<GridBlock> arrays,
                              std::vector<std::vector<int>> classes) {
  for (const auto& g : arrays) {
    if (g.rows != r || g.cols != c) {
      throw std::invalid_argument("array dimensions differ from the packing");
    }
  }
  if (!classes.empty()) {
    std::vector<int> seen(arrays.size(), 0);
    for (const auto& cls : classes) {
      for (int idx : cls) {
        if (idx < 0 || idx >= static_cast<int>(arrays.size())) {
          throw std::invalid_argument("class refers to a missing array");
        }
        if (seen[idx]++) {
          throw std::invalid_argument("classes are not a partition of arrays");
        }
      }
    }
    for (int s : seen) {
      if (!s) throw std::invalid_argument("classes leave an array unassigned");
    }
  }
  GridPacking p;
  p.rows = r;
  p.cols = c;
  p.arrays = std::move(arrays);
  p.classes = std::move(classes);
  return p;
}

std::set<Element> GridPacking::points() const {
  std::set<Element> out;
  for (const auto& g : arrays) out.insert(g.cells.begin(), g.cells.end());
  return out;
}

VerificationReport verify_packing(const GridPacking& p) {
  VerificationReport report;
  for (size_t a = 0; a < p.arrays.size(); ++a) {
    std::vector<Element> sorted = p.arrays[a].cells;
    std::sort(sorted.begin(), sorted.end());
    for (size_t i = 1; i < sorted.size(); ++i) {
      if (sorted[i] == sorted[i - 1]) {
        report.add(RepeatedElement{static_cast<int>(a), sorted[i]});
        while (i + 1 < sorted.size() && sorted[i + 1] == sorted[i]) ++i;
      }
    }
  }
  // Global row-or-column pair census.
  std::map<std::pair<Element, Element>, int> pairs;
  auto count_line = [&pairs](const std::vector<Element>& line) {
    for (size_t i = 0; i < line.size(); ++i) {
      for (size_t j = i + 1; j < line.size(); ++j) {
        Element a = std::min(line[i], line[j]);
        Element b = std::max(line[i], line[j]);
        if (a != b) ++pairs[{a, b}];
      }
    }
  };
  for (const auto& g : p.arrays) {
    for (int i = 0; i < g.rows; ++i) count_line(g.row(i));
    for (int j = 0; j < g.cols; ++j) count_line(g.column(j));
  }
  for (const auto& [key, cnt] : pairs) {
    if (cnt > 1) report.add(PairReuse{key.first, key.second, cnt});
  }
  if (p.resolvable()) {
    auto pts = p.points();
    for (int c = 0; c < p.class_count(); ++c) {
      std::map<Element, int> cover;
      for (int idx : p.classes[c]) {
        for (Element e : p.arrays[idx].cells) ++cover[e];
      }
      for (Element e : pts) {
        int cnt = cover.count(e) ? cover[e] : 0;
        if (cnt != 1) report.add(ClassCoverage{c, e, cnt});
      }
    }
  }
  return report;
}

OptimalityReport optimality(const GridPacking& p) {
  if (!p.resolvable()) {
    throw std::invalid_argument("optimality needs a resolvable packing");
  }
  if (p.rows + p.cols < 3) {
    throw std::invalid_argument("optimality bound needs r+c-2 >= 1");
  }
  OptimalityReport out;
  const long v = static_cast<long>(p.points().size());
  out.bound = (v - 1) / (p.rows + p.cols - 2);
  out.class_count = p.class_count();
  out.is_optimal = (out.class_count == out.bound);
  return out;
}

TradeSystem rows_cols_to_sbs(const GridPacking& p, bool use_columns) {
  if (!p.resolvable()) {
    throw std::invalid_argument("rows_cols_to_sbs needs a resolvable packing");
  }
  if (use_columns && p.rows != p.cols) {
    throw std::invalid_argument("column extraction needs square arrays");
  }
  const long n = static_cast<long>(p.points().size());
  if (n == 0 || n % p.cols != 0) {
    throw std::invalid_argument("point count must be divisible by c");
  }
  std::vector<BlockCollection> collections;
  for (const auto& cls : p.classes) {
    BlockCollection col;
    for (int idx : cls) {
      for (int i = 0; i < p.rows; ++i) {
        col.blocks.push_back(Block(p.arrays[idx].row(i)));
      }
    }
    collections.push_back(std::move(col));
  }
  if (use_columns) {
    // Columns are read top to bottom, one class per row class, appended
    // after all row classes in the same order.
    for (const auto& cls : p.classes) {
      BlockCollection col;
      for (int idx : cls) {
        for (int j = 0; j < p.cols; ++j) {
          col.blocks.push_back(Block(p.arrays[idx].column(j)));
        }
      }
      collections.push_back(std::move(col));
    }
  }
  return TradeSystem::make(std::move(collections), p.cols, 1,
                           static_cast<int>(n / p.cols));
}

GridPacking expand_sbs(const TradeSystem& s, int r) {
  const int c = s.block_size;
  if (r < 1 || r > c) {
    throw std::invalid_argument("expansion needs 1 <= r <= c");
  }
  TradeSystem src = normalize_foundation(s);
  const int v = static_cast<int>(foundation(src).size());
  // Every collection must be a parallel class; the expansion is not
  // resolvable otherwise.
  for (int i = 0; i < src.mu(); ++i) {
    std::vector<int> cover(v, 0);
    for (const auto& b : src.collections[i].blocks) {
      for (Element e : b.elems) ++cover[e];
    }
    for (int e = 0; e < v; ++e) {
      if (cover[e] != 1) {
        throw std::invalid_argument(
            "collection " + std::to_string(i) +
            " is not a parallel class (element " + std::to_string(e) +
            " covered " + std::to_string(cover[e]) + " times)");
      }
    }
  }
  std::vector<GridBlock> arrays;
  std::vector<std::vector<int>> classes;
  for (int ci = 0; ci < src.mu(); ++ci) {
    std::vector<int> cls;
    for (const auto& b : src.collections[ci].blocks) {
      std::vector<Element> cells;
      cells.reserve(static_cast<size_t>(r) * c);
      for (int i = 0; i < r; ++i) {
        for (int j = 0; j < c; ++j) {
          cells.push_back(i * v + b.elems[(i + j) % c]);
        }
      }
      cls.push_back(static_cast<int>(arrays.size()));
      arrays.push_back(GridBlock::make(r, c, std::move(cells)));
    }
    classes.push_back(std::move(cls));
  }
  return GridPacking::make(r, c, std::move(arrays), std::move(classes));
}

GridPacking two_by_two_optimal(int m) {
  if (m < 1) throw std::invalid_argument("two_by_two_optimal needs m >= 1");
  return expand_sbs(one_factorization(2 * m), 2);
}

TradeSystem sbs_from_packing_doubling(const TradeSystem& s) {
  return rows_cols_to_sbs(expand_sbs(s, s.block_size), true);
}

GridPacking normalize_points(const GridPacking& p) {
  std::map<Element, Element> map;
  Element next = 0;
  for (Element e : p.points()) map[e] = next++;
  GridPacking out = p;
  for (auto& g : out.arrays) {
    for (auto& e : g.cells) e = map.at(e);
  }
  return out;
}

CompositionParams steiner_params_from_composition(long v, int c, int r, long s,
                                                  long mu, long mu_prime) {
  if (r > c || r < 1) throw std::invalid_argument("composition needs r <= c");
  if (v < 1 || s < 0 || mu < 1 || mu_prime < 1) {
    throw std::invalid_argument("composition parameters must be positive");
  }
  if ((r * v) % c != 0) {
    throw std::invalid_argument("rv must be divisible by c");
  }
  CompositionParams out;
  out.mu_prime_max = s * mu + 1;
  if (mu_prime > out.mu_prime_max) {
    throw std::invalid_argument("mu' exceeds s*mu+1 = " +
                                std::to_string(out.mu_prime_max));
  }
  out.foundation_size = r * v + mu_prime;
  out.block_size = c + 1;
  out.volume = (r * v / c) * mu_prime;
  out.constructive = false;
  return out;
}

}  // namespace tradekit
