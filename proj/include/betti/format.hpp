#pragma once

// Plain-text Betti table format:
//
//   # comment
//   betti p=3 j0=0
//   1 2 - -
//   - - 2 1
//
// Row r, column i holds beta_{i, j0 + r + i}; `-` is an empty slot.

#include "betti/diagram.hpp"

#include <algorithm>
#include <istream>
#include <iterator>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace betti {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline std::string format_diagram(const BettiDiagram& d) {
  if (d.empty()) return "betti p=0 j0=0\n-\n";
  int p = pdim(d);
  int lo = std::numeric_limits<int>::max();
  int hi = std::numeric_limits<int>::min();
  for (const auto& [k, v] : d.entries()) {
    lo = std::min(lo, k.second - k.first);
    hi = std::max(hi, k.second - k.first);
  }
  std::vector<std::vector<std::string>> cells;
  std::vector<std::size_t> width(static_cast<std::size_t>(p + 1), 1);
  for (int r = lo; r <= hi; ++r) {
    auto& row = cells.emplace_back();
    for (int i = 0; i <= p; ++i) {
      Rational v = d.at(i, r + i);
      row.push_back(v == 0 ? "-" : to_string(v));
      width[static_cast<std::size_t>(i)] = std::max(width[static_cast<std::size_t>(i)], row.back().size());
    }
  }
  std::string out = "betti p=" + std::to_string(p) + " j0=" + std::to_string(lo) + "\n";
  for (const auto& row : cells) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ' ';
      out.append(width[i] - row[i].size(), ' ');
      out += row[i];
    }
    out += '\n';
  }
  return out;
}

/// The table rows on one line, separated by " / ".
inline std::string format_inline(const BettiDiagram& d) {
  std::string body = format_diagram(d);
  std::istringstream in(body);
  std::string line, out;
  std::getline(in, line);
  while (std::getline(in, line)) {
    if (!out.empty()) out += " / ";
    out += line;
  }
  return out;
}

namespace detail {

inline std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream in(line);
  return {std::istream_iterator<std::string>(in), std::istream_iterator<std::string>()};
}

inline int header_field(const std::string& tok, const std::string& key) {
  if (tok.rfind(key + "=", 0) != 0) throw ParseError("expected '" + key + "=<int>' in header, got '" + tok + "'");
  try {
    BigInt v = parse_bigint(tok.substr(key.size() + 1));
    if (v > 1'000'000 || v < -1'000'000) throw ParseError("header value out of range: " + tok);
    return static_cast<int>(v);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

}  // namespace detail

/// Reads one diagram; blank lines and `#` comments are skipped.
inline BettiDiagram parse_diagram(std::istream& in) {
  std::string line;
  std::vector<std::vector<std::string>> rows;
  bool have_header = false;
  int p = 0, j0 = 0;
  while (std::getline(in, line)) {
    auto toks = detail::split_ws(line);
    if (toks.empty() || toks[0][0] == '#') continue;
    if (!have_header) {
      if (toks.size() != 3 || toks[0] != "betti") throw ParseError("expected header 'betti p=<pdim> j0=<degree>'");
      p = detail::header_field(toks[1], "p");
      j0 = detail::header_field(toks[2], "j0");
      if (p < 0) throw ParseError("negative projective dimension in header");
      have_header = true;
      continue;
    }
    if (toks.size() != static_cast<std::size_t>(p + 1))
      throw ParseError("row " + std::to_string(rows.size()) + " has " + std::to_string(toks.size()) +
                       " entries, expected " + std::to_string(p + 1));
    rows.push_back(std::move(toks));
  }
  if (!have_header) throw ParseError("no diagram found");
  if (rows.empty()) throw ParseError("diagram has no rows");
  BettiDiagram d;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t i = 0; i < rows[r].size(); ++i) {
      const auto& tok = rows[r][i];
      if (tok == "-") continue;
      Rational v;
      try {
        v = parse_rational(tok);
      } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
      }
      if (v < 0) throw ParseError("negative entry '" + tok + "'");
      d.set(static_cast<int>(i), j0 + static_cast<int>(r + i), v);
    }
  }
  return d;
}

inline BettiDiagram parse_diagram(const std::string& text) {
  std::istringstream in(text);
  return parse_diagram(in);
}

}  // namespace betti
