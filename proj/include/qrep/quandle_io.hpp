#pragma once

// Plain-text operation tables: first line n, then n lines of n
// space-separated entries, 1-indexed.

#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "qrep/errors.hpp"
#include "qrep/quandle.hpp"

namespace qrep {

/// Reads a table without checking axioms (callers decide how to report
/// failures). Entries are shifted to 0-indexing.
inline OperationTable read_table(std::istream& in) {
  long long n = 0;
  if (!(in >> n) || n <= 0) throw domain_error("table file: first entry must be a positive order");
  OperationTable t(static_cast<std::size_t>(n), std::vector<Element>(static_cast<std::size_t>(n)));
  for (auto& row : t) {
    for (auto& v : row) {
      long long entry = 0;
      if (!(in >> entry)) throw domain_error("table file: expected " + std::to_string(n * n) + " entries");
      if (entry < 1 || entry > n) throw domain_error("table file: entry " + std::to_string(entry) + " out of range 1.." + std::to_string(n));
      v = static_cast<Element>(entry - 1);
    }
  }
  std::string trailing;
  if (in >> trailing) throw domain_error("table file: unexpected trailing content '" + trailing + "'");
  return t;
}

inline OperationTable parse_table(const std::string& text) {
  std::istringstream in(text);
  return read_table(in);
}

inline void write_table(std::ostream& out, const OperationTable& t) {
  out << t.size() << '\n';
  for (const auto& row : t) {
    for (std::size_t j = 0; j < row.size(); ++j) out << (j ? " " : "") << row[j] + 1;
    out << '\n';
  }
}

}  // namespace qrep
