#pragma once

#include <stdexcept>
#include <string>

#include "tradekit/core.hpp"
#include "tradekit/gridblock.hpp"

namespace tradekit {

struct ParseError : std::runtime_error {
  int line;
  ParseError(int line_, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line_) + ": " + msg),
        line(line_) {}
};

// Trade file format:
//   TRADE mu=<int> k=<int> t=<int> m=<int>
//   COLLECTION 1
//   <k space-separated labels, ascending>   (m lines)
//   COLLECTION 2
//   ...
//   END
std::string serialize_trade(const TradeSystem& system);
TradeSystem parse_trade(const std::string& text);

// Grid file format:
//   GRID r=<int> c=<int>
//   CLASS 1            (optional separators)
//   <c labels>         (r lines per array, arrays back to back)
//   ...
//   END
std::string serialize_grid(const GridPacking& p);
GridPacking parse_grid(const std::string& text);

// File helpers. Detection looks at the header token.
enum class FileKind { trade, grid };
FileKind detect_kind(const std::string& text);
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace tradekit
