#include "tradekit/io.hpp"

#include <fstream>
#include <sstream>

namespace tradekit {

namespace {

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::string cur;
  for (char ch : text) {
    if (ch == '\n') {
      lines.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  if (!cur.empty()) lines.push_back(cur);
  return lines;
}

// Parses "<name>=<int>" and returns the value.
int parse_kv(const std::string& token, const std::string& name, int line_no) {
  auto eq = token.find('=');
  if (eq == std::string::npos || token.substr(0, eq) != name) {
    throw ParseError(line_no, "expected " + name + "=<int>, got '" + token + "'");
  }
  try {
    size_t pos = 0;
    int value = std::stoi(token.substr(eq + 1), &pos);
    if (pos != token.size() - eq - 1) throw std::invalid_argument("");
    return value;
  } catch (const std::exception&) {
    throw ParseError(line_no, "bad integer in '" + token + "'");
  }
}

std::vector<std::string> tokens_of(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> out;
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

std::vector<Element> parse_labels(const std::string& line, int expected,
                                  int line_no) {
  auto toks = tokens_of(line);
  if (static_cast<int>(toks.size()) != expected) {
    throw ParseError(line_no, "expected " + std::to_string(expected) +
                                  " labels, got " +
                                  std::to_string(toks.size()));
  }
  std::vector<Element> out;
  out.reserve(toks.size());
  for (const auto& tok : toks) {
    try {
      size_t pos = 0;
      int value = std::stoi(tok, &pos);
      if (pos != tok.size() || value < 0) throw std::invalid_argument("");
      out.push_back(value);
    } catch (const std::exception&) {
      throw ParseError(line_no, "bad label '" + tok + "'");
    }
  }
  return out;
}

}  // namespace

std::string serialize_trade(const TradeSystem& system) {
  std::ostringstream os;
  os << "TRADE mu=" << system.mu() << " k=" << system.block_size
     << " t=" << system.strength << " m=" << system.volume << "\n";
  for (int i = 0; i < system.mu(); ++i) {
    os << "COLLECTION " << (i + 1) << "\n";
    for (const auto& b : system.collections[i].blocks) {
      for (size_t j = 0; j < b.elems.size(); ++j) {
        if (j) os << " ";
        os << b.elems[j];
      }
      os << "\n";
    }
  }
  os << "END\n";
  return os.str();
}

TradeSystem parse_trade(const std::string& text) {
  auto lines = split_lines(text);
  if (lines.empty()) throw ParseError(1, "empty file");
  auto header = tokens_of(lines[0]);
  if (header.size() != 5 || header[0] != "TRADE") {
    throw ParseError(1, "expected 'TRADE mu=<int> k=<int> t=<int> m=<int>'");
  }
  int mu = parse_kv(header[1], "mu", 1);
  int k = parse_kv(header[2], "k", 1);
  int t = parse_kv(header[3], "t", 1);
  int m = parse_kv(header[4], "m", 1);
  if (mu < 1 || k < 1 || t < 1 || m < 0) {
    throw ParseError(1, "header values out of range");
  }

  std::vector<BlockCollection> collections;
  size_t i = 1;
  bool terminated = false;
  while (i < lines.size()) {
    int line_no = static_cast<int>(i) + 1;
    auto toks = tokens_of(lines[i]);
    if (toks.empty()) throw ParseError(line_no, "unexpected blank line");
    if (toks[0] == "END") {
      terminated = true;
      ++i;
      break;
    }
    if (toks.size() != 2 || toks[0] != "COLLECTION") {
      throw ParseError(line_no, "expected 'COLLECTION <index>' or 'END'");
    }
    int index = parse_kv("i=" + toks[1], "i", line_no);
    if (index != static_cast<int>(collections.size()) + 1) {
      throw ParseError(line_no, "collections must be numbered 1.." +
                                    std::to_string(mu) + " in order");
    }
    ++i;
    BlockCollection col;
    for (int row = 0; row < m; ++row, ++i) {
      if (i >= lines.size()) {
        throw ParseError(static_cast<int>(lines.size()) + 1,
                         "unexpected end of file inside collection");
      }
      int row_line = static_cast<int>(i) + 1;
      auto labels = parse_labels(lines[i], k, row_line);
      for (int j = 1; j < k; ++j) {
        if (labels[j] <= labels[j - 1]) {
          throw ParseError(row_line, "labels must be strictly ascending");
        }
      }
      col.blocks.push_back(Block(labels));
    }
    collections.push_back(std::move(col));
  }
  if (!terminated) {
    throw ParseError(static_cast<int>(lines.size()) + 1, "missing END");
  }
  if (i != lines.size()) {
    throw ParseError(static_cast<int>(i) + 1, "trailing content after END");
  }
  if (static_cast<int>(collections.size()) != mu) {
    throw ParseError(static_cast<int>(lines.size()),
                     "declared mu=" + std::to_string(mu) + " but found " +
                         std::to_string(collections.size()) + " collections");
  }
  return TradeSystem::make(std::move(collections), k, t, m);
}

std::string serialize_grid(const GridPacking& p) {
  std::ostringstream os;
  os << "GRID r=" << p.rows << " c=" << p.cols << "\n";
  auto emit_array = [&](const GridBlock& g) {
    for (int i = 0; i < g.rows; ++i) {
      for (int j = 0; j < g.cols; ++j) {
        if (j) os << " ";
        os << g.at(i, j);
      }
      os << "\n";
    }
  };
  if (p.resolvable()) {
    for (int c = 0; c < p.class_count(); ++c) {
      os << "CLASS " << (c + 1) << "\n";
      for (int idx : p.classes[c]) emit_array(p.arrays[idx]);
    }
  } else {
    for (const auto& g : p.arrays) emit_array(g);
  }
  os << "END\n";
  return os.str();
}

GridPacking parse_grid(const std::string& text) {
  auto lines = split_lines(text);
  if (lines.empty()) throw ParseError(1, "empty file");
  auto header = tokens_of(lines[0]);
  if (header.size() != 3 || header[0] != "GRID") {
    throw ParseError(1, "expected 'GRID r=<int> c=<int>'");
  }
  int r = parse_kv(header[1], "r", 1);
  int c = parse_kv(header[2], "c", 1);
  if (r < 1 || c < 1) throw ParseError(1, "dimensions must be positive");

  std::vector<GridBlock> arrays;
  std::vector<std::vector<int>> classes;
  bool classed = false;
  size_t i = 1;
  bool terminated = false;
  while (i < lines.size()) {
    int line_no = static_cast<int>(i) + 1;
    auto toks = tokens_of(lines[i]);
    if (toks.empty()) throw ParseError(line_no, "unexpected blank line");
    if (toks[0] == "END") {
      terminated = true;
      ++i;
      break;
    }
    if (toks[0] == "CLASS") {
      if (toks.size() != 2) throw ParseError(line_no, "expected 'CLASS <index>'");
      int index = parse_kv("i=" + toks[1], "i", line_no);
      if (index != static_cast<int>(classes.size()) + 1) {
        throw ParseError(line_no, "classes must be numbered in order");
      }
      classed = true;
      classes.emplace_back();
      ++i;
      continue;
    }
    // An array: r consecutive rows of c labels.
    if (classed && classes.empty()) {
      throw ParseError(line_no, "array before first CLASS");
    }
    std::vector<Element> cells;
    for (int row = 0; row < r; ++row, ++i) {
      if (i >= lines.size()) {
        throw ParseError(static_cast<int>(lines.size()) + 1,
                         "unexpected end of file inside array");
      }
      auto labels = parse_labels(lines[i], c, static_cast<int>(i) + 1);
      cells.insert(cells.end(), labels.begin(), labels.end());
    }
    try {
      arrays.push_back(GridBlock::make(r, c, std::move(cells)));
    } catch (const std::exception& ex) {
      throw ParseError(line_no, ex.what());
    }
    if (classed) classes.back().push_back(static_cast<int>(arrays.size()) - 1);
  }
  if (!terminated) {
    throw ParseError(static_cast<int>(lines.size()) + 1, "missing END");
  }
  if (i != lines.size()) {
    throw ParseError(static_cast<int>(i) + 1, "trailing content after END");
  }
  try {
    return GridPacking::make(r, c, std::move(arrays), std::move(classes));
  } catch (const std::exception& ex) {
    throw ParseError(1, ex.what());
  }
}

FileKind detect_kind(const std::string& text) {
  auto lines = split_lines(text);
  if (!lines.empty()) {
    auto toks = tokens_of(lines[0]);
    if (!toks.empty() && toks[0] == "TRADE") return FileKind::trade;
    if (!toks.empty() && toks[0] == "GRID") return FileKind::grid;
  }
  throw ParseError(1, "unrecognized header; expected TRADE or GRID");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

}  // namespace tradekit
