#pragma once

#include "betti/pure.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace betti {

/// d <= e iff d is at least as long as e and d_i <= e_i on e's indices.
inline bool degseq_leq(const DegreeSequence& d, const DegreeSequence& e) {
  if (d.size() < e.size()) return false;
  for (std::size_t i = 0; i < e.size(); ++i)
    if (d[i] > e[i]) return false;
  return true;
}

/// A maximal chain of degree sequences in a window. Stored largest first,
/// the way chains are written: (0) > (0,3) > (0,3,4) > ...
struct Chain {
  std::vector<DegreeSequence> sequences;

  std::size_t size() const { return sequences.size(); }
  std::string to_string() const {
    std::string s;
    for (std::size_t k = 0; k < sequences.size(); ++k) {
      if (k) s += '>';
      s += sequences[k].to_string();
    }
    return s;
  }
  friend bool operator==(const Chain&, const Chain&) = default;
  friend auto operator<=>(const Chain&, const Chain&) = default;
};

inline Chain parse_chain(std::string_view text) {
  Chain c;
  std::size_t pos = 0;
  std::string s(text);
  while (pos <= s.size()) {
    auto gt = s.find('>', pos);
    auto tok = s.substr(pos, gt == std::string::npos ? std::string::npos : gt - pos);
    if (tok.find_first_not_of(" \t") == std::string::npos) throw std::invalid_argument("empty chain element");
    c.sequences.push_back(parse_degree_sequence(tok));
    if (gt == std::string::npos) break;
    pos = gt + 1;
  }
  for (std::size_t k = 1; k < c.sequences.size(); ++k)
    if (!degseq_leq(c.sequences[k], c.sequences[k - 1]) || c.sequences[k] == c.sequences[k - 1])
      throw std::invalid_argument("chain is not strictly descending at " + c.sequences[k].to_string());
  return c;
}

/// Every degree sequence of length 1..p+1 whose entries respect the window.
inline std::vector<DegreeSequence> window_sequences(const DegreeWindow& w) {
  std::vector<DegreeSequence> out;
  std::vector<int> cur;
  std::function<void()> rec = [&] {
    if (!cur.empty()) out.emplace_back(cur);
    std::size_t i = cur.size();
    if (i == w.lower.size()) return;
    int lo = w.lower[i];
    if (!cur.empty()) lo = std::max(lo, cur.back() + 1);
    for (int v = lo; v <= w.upper[i]; ++v) {
      cur.push_back(v);
      rec();
      cur.pop_back();
    }
  };
  rec();
  std::sort(out.begin(), out.end());
  return out;
}

/// All maximal chains of the window, sorted.
inline std::vector<Chain> enumerate_chains(const DegreeWindow& w) {
  auto elems = window_sequences(w);
  const std::size_t n = elems.size();
  auto less = [&](std::size_t a, std::size_t b) { return a != b && degseq_leq(elems[a], elems[b]); };
  std::vector<std::vector<std::size_t>> covers(n);
  std::vector<bool> has_lower(n, false), has_upper(n, false);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (!less(a, b)) continue;
      has_upper[a] = true;
      has_lower[b] = true;
      bool cover = true;
      for (std::size_t z = 0; z < n && cover; ++z)
        if (less(a, z) && less(z, b)) cover = false;
      if (cover) covers[a].push_back(b);
    }
  }
  std::vector<Chain> chains;
  std::vector<std::size_t> path;
  std::function<void(std::size_t)> walk = [&](std::size_t x) {
    path.push_back(x);
    if (!has_upper[x]) {
      Chain c;
      for (auto it = path.rbegin(); it != path.rend(); ++it) c.sequences.push_back(elems[*it]);
      chains.push_back(std::move(c));
    }
    for (std::size_t y : covers[x]) walk(y);
    path.pop_back();
  };
  for (std::size_t x = 0; x < n; ++x)
    if (!has_lower[x]) walk(x);
  std::sort(chains.begin(), chains.end());
  return chains;
}

/// s + 1 = sum_i (upper_i - lower_i + 1).
inline std::size_t expected_chain_size(const DegreeWindow& w) {
  std::size_t s = 0;
  for (std::size_t i = 0; i < w.lower.size(); ++i) s += static_cast<std::size_t>(w.upper[i] - w.lower[i] + 1);
  return s;
}

struct PureDecomposition {
  struct Term {
    Rational coefficient;
    DegreeSequence degrees;
    friend bool operator==(const Term&, const Term&) = default;
  };
  std::vector<Term> terms;  // ascending in the degree-sequence order

  BettiDiagram sum() const {
    BettiDiagram d;
    for (const auto& t : terms) d = add(d, scale(pi(t.degrees), t.coefficient));
    return d;
  }
  std::string to_string() const {
    std::string s;
    for (const auto& t : terms) {
      if (!s.empty()) s += " + ";
      s += betti::to_string(t.coefficient) + "*pi" + t.degrees.to_string();
    }
    return s.empty() ? "0" : s;
  }
  friend bool operator==(const PureDecomposition&, const PureDecomposition&) = default;
};

struct NotInCone : std::domain_error {
  using std::domain_error::domain_error;
};

/// Greedy elimination along the minimal degree sequence of what remains.
inline PureDecomposition decompose(const BettiDiagram& d) {
  PureDecomposition out;
  BettiDiagram rest = d;
  while (!rest.empty()) {
    int p = pdim(rest);
    std::vector<int> degs;
    for (int i = 0; i <= p; ++i) {
      if (column_empty(rest, i))
        throw NotInCone("column " + std::to_string(i) + " is empty below a nonzero column");
      degs.push_back(min_degree(rest, i));
      if (i > 0 && degs[static_cast<std::size_t>(i)] <= degs[static_cast<std::size_t>(i - 1)])
        throw NotInCone("minimal degrees are not strictly increasing at column " + std::to_string(i));
    }
    DegreeSequence seq(degs);
    BettiDiagram ray = pi(seq);
    Rational c = -1;
    for (int i = 0; i <= p; ++i) {
      int j = degs[static_cast<std::size_t>(i)];
      Rational ratio = rest.at(i, j) / ray.at(i, j);
      if (c < 0 || ratio < c) c = ratio;
    }
    try {
      rest = subtract(rest, scale(ray, c));
    } catch (const std::domain_error&) {
      throw NotInCone("subtraction produced a negative entry");
    }
    out.terms.push_back({c, seq});
  }
  return out;
}

inline bool in_cone(const BettiDiagram& d) {
  try {
    decompose(d);
    return true;
  } catch (const NotInCone&) {
    return false;
  }
}

inline bool in_lattice(const BettiDiagram& d) { return is_integral(d) && in_cone(d); }

}  // namespace betti
