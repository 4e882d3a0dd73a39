#pragma once

#include "betti/rational.hpp"

#include <algorithm>
#include <compare>
#include <cstdint>
#include <iterator>
#include <limits>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace betti {

/// Strictly increasing, nonempty sequence of integer degrees d_0 < ... < d_t.
class DegreeSequence {
 public:
  DegreeSequence() = default;
  explicit DegreeSequence(std::vector<int> degrees) : degrees_(std::move(degrees)) {
    if (degrees_.empty()) throw std::invalid_argument("degree sequence must be nonempty");
    for (std::size_t i = 1; i < degrees_.size(); ++i) {
      if (degrees_[i - 1] >= degrees_[i])
        throw std::invalid_argument("degree sequence must be strictly increasing: " + str(degrees_));
    }
  }
  DegreeSequence(std::initializer_list<int> degrees) : DegreeSequence(std::vector<int>(degrees)) {}

  const std::vector<int>& degrees() const { return degrees_; }
  std::size_t size() const { return degrees_.size(); }
  /// Homological length t, i.e. size() - 1.
  int length() const { return static_cast<int>(degrees_.size()) - 1; }
  int operator[](std::size_t i) const { return degrees_[i]; }

  friend bool operator==(const DegreeSequence&, const DegreeSequence&) = default;
  /// Lexicographic; only for containers. The Boij-Soderberg order is degseq_leq.
  friend auto operator<=>(const DegreeSequence&, const DegreeSequence&) = default;

  std::string to_string() const { return str(degrees_); }

 private:
  static std::string str(const std::vector<int>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(v[i]);
    }
    return s + ")";
  }
  std::vector<int> degrees_;
};

/// Parses `0,1,3,4` or `(0,1,3,4)`.
inline std::vector<int> parse_int_list(std::string_view text) {
  std::string s;
  for (char c : text)
    if (c != '(' && c != ')' && c != ' ' && c != '\t') s += c;
  std::vector<int> out;
  if (s.empty()) return out;
  std::size_t pos = 0;
  while (true) {
    auto comma = s.find(',', pos);
    auto tok = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    BigInt v = parse_bigint(tok);
    if (v > std::numeric_limits<int>::max() || v < std::numeric_limits<int>::min())
      throw std::invalid_argument("degree out of range: " + tok);
    out.push_back(static_cast<int>(v));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

inline DegreeSequence parse_degree_sequence(std::string_view text) {
  return DegreeSequence(parse_int_list(text));
}

/// Bounds lower_i <= d_i <= upper_i on the degrees allowed in column i.
struct DegreeWindow {
  std::vector<int> lower;
  std::vector<int> upper;

  DegreeWindow() = default;
  DegreeWindow(std::vector<int> lo, std::vector<int> hi) : lower(std::move(lo)), upper(std::move(hi)) {
    if (lower.empty() || lower.size() != upper.size())
      throw std::invalid_argument("degree window bounds must be nonempty and of equal length");
    for (std::size_t i = 0; i < lower.size(); ++i)
      if (lower[i] > upper[i]) throw std::invalid_argument("degree window has lower > upper");
  }

  /// p, the largest admissible homological index.
  int max_index() const { return static_cast<int>(lower.size()) - 1; }
  bool contains(const DegreeSequence& d) const {
    if (d.size() > lower.size()) return false;
    for (std::size_t i = 0; i < d.size(); ++i)
      if (d[i] < lower[i] || d[i] > upper[i]) return false;
    return true;
  }
};

/// Sparse table of graded Betti numbers beta_{i,j}; only strictly positive
/// entries are stored.
class BettiDiagram {
 public:
  using Key = std::pair<int, int>;  // (i, j)
  using Map = std::map<Key, Rational>;

  BettiDiagram() = default;

  /// Rows in the usual display convention: row r, column i holds beta_{i, r + i + j0}.
  /// Zero means an empty slot.
  static BettiDiagram from_table(const std::vector<std::vector<Rational>>& rows, int j0 = 0) {
    BettiDiagram d;
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (std::size_t i = 0; i < rows[r].size(); ++i)
        d.set(static_cast<int>(i), static_cast<int>(r + i) + j0, rows[r][i]);
    return d;
  }

  const Map& entries() const& { return entries_; }
  Map entries() && { return std::move(entries_); }
  bool empty() const { return entries_.empty(); }

  Rational at(int i, int j) const {
    auto it = entries_.find({i, j});
    return it == entries_.end() ? Rational(0) : it->second;
  }

  void set(int i, int j, const Rational& value) {
    if (i < 0) throw std::invalid_argument("homological index must be nonnegative");
    if (value < 0) throw std::invalid_argument("Betti numbers must be nonnegative");
    if (value == 0)
      entries_.erase({i, j});
    else
      entries_[{i, j}] = value;
  }

  friend bool operator==(const BettiDiagram&, const BettiDiagram&) = default;

 private:
  Map entries_;
};

inline BettiDiagram add(const BettiDiagram& a, const BettiDiagram& b) {
  BettiDiagram r = a;
  for (const auto& [k, v] : b.entries()) r.set(k.first, k.second, r.at(k.first, k.second) + v);
  return r;
}

inline BettiDiagram operator+(const BettiDiagram& a, const BettiDiagram& b) { return add(a, b); }

inline BettiDiagram scale(const BettiDiagram& d, const Rational& q) {
  if (q < 0) throw std::invalid_argument("scale factor must be nonnegative");
  BettiDiagram r;
  if (q == 0) return r;
  for (const auto& [k, v] : d.entries()) r.set(k.first, k.second, v * q);
  return r;
}

inline BettiDiagram operator*(const Rational& q, const BettiDiagram& d) { return scale(d, q); }

/// Entrywise a - b. Throws if any entry would become negative.
inline BettiDiagram subtract(const BettiDiagram& a, const BettiDiagram& b) {
  BettiDiagram r = a;
  for (const auto& [k, v] : b.entries()) {
    Rational x = r.at(k.first, k.second) - v;
    if (x < 0) throw std::domain_error("diagram difference has a negative entry");
    r.set(k.first, k.second, x);
  }
  return r;
}

/// Entrywise a <= b.
inline bool leq(const BettiDiagram& a, const BettiDiagram& b) {
  for (const auto& [k, v] : a.entries())
    if (v > b.at(k.first, k.second)) return false;
  return true;
}

inline bool is_integral(const BettiDiagram& d) {
  return std::all_of(d.entries().begin(), d.entries().end(),
                     [](const auto& kv) { return is_integral(kv.second); });
}

/// Largest homological index with a nonzero entry.
inline int pdim(const BettiDiagram& d) {
  if (d.empty()) throw std::domain_error("pdim of the zero diagram");
  int p = 0;
  for (const auto& [k, v] : d.entries()) p = std::max(p, k.first);
  return p;
}

inline bool column_empty(const BettiDiagram& d, int i) {
  auto it = d.entries().lower_bound({i, std::numeric_limits<int>::min()});
  return it == d.entries().end() || it->first.first != i;
}

inline int min_degree(const BettiDiagram& d, int i) {
  auto it = d.entries().lower_bound({i, std::numeric_limits<int>::min()});
  if (it == d.entries().end() || it->first.first != i)
    throw std::out_of_range("column " + std::to_string(i) + " is empty");
  return it->first.second;
}

inline int max_degree(const BettiDiagram& d, int i) {
  auto it = d.entries().upper_bound({i, std::numeric_limits<int>::max()});
  if (it == d.entries().begin() || std::prev(it)->first.first != i)
    throw std::out_of_range("column " + std::to_string(i) + " is empty");
  return std::prev(it)->first.second;
}

inline Rational column_total(const BettiDiagram& d, int i) {
  Rational s = 0;
  for (const auto& [k, v] : d.entries())
    if (k.first == i) s += v;
  return s;
}

inline Rational generator_count(const BettiDiagram& d) { return column_total(d, 0); }
inline Rational syzygy_count(const BettiDiagram& d) { return column_total(d, 1); }

/// Rotation by 180 degrees, beta'_{i,j} = beta_{p-i, J-j}, shifted so the
/// lowest generator degree is 0.
inline BettiDiagram dual(const BettiDiagram& d) {
  if (d.empty()) return d;
  int p = pdim(d);
  int top = std::numeric_limits<int>::min();
  for (const auto& [k, v] : d.entries()) top = std::max(top, k.second);
  BettiDiagram rotated;
  for (const auto& [k, v] : d.entries()) rotated.set(p - k.first, top - k.second, v);
  int shift = std::numeric_limits<int>::max();
  if (!column_empty(rotated, 0))
    shift = min_degree(rotated, 0);
  else
    for (const auto& [k, v] : rotated.entries()) shift = std::min(shift, k.second);
  BettiDiagram out;
  for (const auto& [k, v] : rotated.entries()) out.set(k.first, k.second - shift, v);
  return out;
}

/// Translates every degree by `shift`.
inline BettiDiagram twist(const BettiDiagram& d, int shift) {
  BettiDiagram out;
  for (const auto& [k, v] : d.entries()) out.set(k.first, k.second + shift, v);
  return out;
}

/// Univariate Laurent polynomial with rational coefficients; zero terms are absent.
struct Polynomial {
  std::map<int, Rational> terms;

  bool is_zero() const { return terms.empty(); }
  Rational coefficient(int exponent) const {
    auto it = terms.find(exponent);
    return it == terms.end() ? Rational(0) : it->second;
  }
  void add_term(int exponent, const Rational& c) {
    Rational x = coefficient(exponent) + c;
    if (x == 0)
      terms.erase(exponent);
    else
      terms[exponent] = x;
  }
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  std::string to_string() const {
    if (terms.empty()) return "0";
    std::string s;
    for (const auto& [e, c] : terms) {
      Rational mag = c < 0 ? Rational(-c) : c;
      if (s.empty())
        s += c < 0 ? "-" : "";
      else
        s += c < 0 ? " - " : " + ";
      bool unit = mag == 1 && e != 0;
      if (!unit) s += betti::to_string(mag);
      if (e != 0) {
        s += "t";
        if (e != 1) s += "^" + std::to_string(e);
      }
    }
    return s;
  }
};

/// K-polynomial sum_{i,j} (-1)^i beta_{i,j} t^j.
inline Polynomial hilbert_numerator(const BettiDiagram& d) {
  Polynomial p;
  for (const auto& [k, v] : d.entries()) p.add_term(k.second, k.first % 2 == 0 ? v : Rational(-v));
  return p;
}

/// Multiplicity of t = 1 as a root of the numerator.
inline int codimension(const BettiDiagram& d) {
  Polynomial num = hilbert_numerator(d);
  if (num.is_zero()) throw std::domain_error("codimension of a diagram with zero numerator");
  int lo = num.terms.begin()->first;
  int hi = num.terms.rbegin()->first;
  std::vector<Rational> c(static_cast<std::size_t>(hi - lo + 1));
  for (const auto& [e, v] : num.terms) c[static_cast<std::size_t>(e - lo)] = v;
  int order = 0;
  // synthetic division by (t - 1), highest degree first
  while (c.size() > 1) {
    std::vector<Rational> q(c.size() - 1);
    Rational carry = 0;
    for (std::size_t k = c.size(); k-- > 1;) {
      carry += c[k];
      q[k - 1] = carry;
    }
    if (carry + c[0] != 0) break;
    c = std::move(q);
    ++order;
  }
  return order;
}

/// Values h(t) for t = start, ..., last.
struct HilbertFunction {
  int start = 0;
  std::vector<Rational> values;

  Rational at(int t) const {
    if (t < start) return 0;
    auto idx = static_cast<std::size_t>(t - start);
    if (idx >= values.size()) throw std::out_of_range("Hilbert function not computed that far");
    return values[idx];
  }
  int last() const { return start + static_cast<int>(values.size()) - 1; }
};

/// h(t) = sum (-1)^i beta_{i,j} C(t - j + n - 1, n - 1) over a polynomial ring
/// in n variables, for t from the lowest degree of D (0 for the zero diagram) to t_max.
inline HilbertFunction hilbert_function(const BettiDiagram& d, int n, int t_max) {
  if (n < 1) throw std::invalid_argument("number of variables must be positive");
  HilbertFunction h;
  if (!d.empty()) {
    h.start = std::numeric_limits<int>::max();
    for (const auto& [k, v] : d.entries()) h.start = std::min(h.start, k.second);
  }
  for (int t = h.start; t <= t_max; ++t) {
    Rational s = 0;
    for (const auto& [k, v] : d.entries()) {
      BigInt c = binomial(static_cast<std::int64_t>(t) - k.second + n - 1, n - 1);
      if (c == 0) continue;
      Rational term = v * Rational(c);
      s += k.first % 2 == 0 ? term : Rational(-term);
    }
    h.values.push_back(s);
  }
  return h;
}

/// Alternating moments sum (-1)^i j^k beta_{i,j} for k = 0, ..., e - 1.
inline std::vector<Rational> herzog_kuhl_defects(const BettiDiagram& d, int e) {
  if (e < 0) throw std::invalid_argument("order must be nonnegative");
  std::vector<Rational> out(static_cast<std::size_t>(e), Rational(0));
  for (const auto& [key, v] : d.entries()) {
    BigInt power = 1;
    for (int k = 0; k < e; ++k) {
      Rational term = v * Rational(power);
      out[static_cast<std::size_t>(k)] += key.first % 2 == 0 ? term : Rational(-term);
      power *= key.second;
    }
  }
  return out;
}

/// Codimension equals projective dimension, i.e. all Herzog-Kuhl moments
/// through order pdim - 1 vanish.
inline bool is_cohen_macaulay(const BettiDiagram& d) {
  if (d.empty()) return false;
  int p = pdim(d);
  auto defects = herzog_kuhl_defects(d, p);
  return std::all_of(defects.begin(), defects.end(), [](const Rational& x) { return x == 0; });
}

}  // namespace betti
