#pragma once

// Certificates that a virtual diagram is not the Betti diagram of a module.
//
// Everything here reads the diagram only. Checks that need a presentation
// assume a single generator degree and twist it to 0; anything else is
// reported as NotApplicable.

#include "betti/fan.hpp"
#include "betti/format.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace betti {

struct NotApplicable : std::domain_error {
  using std::domain_error::domain_error;
};

enum class FindingKind { SecondSyzygy, CodimTooFew, CodimEqualityMismatch, Regularity, MaximalMinor, EAlphaFamily };
enum class Side { D, Dual };
enum class Verdict { Obstructed, NoObstructionFound };

inline std::string to_string(FindingKind k) {
  switch (k) {
    case FindingKind::SecondSyzygy: return "SecondSyzygy";
    case FindingKind::CodimTooFew: return "CodimTooFew";
    case FindingKind::CodimEqualityMismatch: return "CodimEqualityMismatch";
    case FindingKind::Regularity: return "Regularity";
    case FindingKind::MaximalMinor: return "MaximalMinor";
    case FindingKind::EAlphaFamily: return "EAlphaFamily";
  }
  return "?";
}

inline std::string to_string(Side s) { return s == Side::D ? "D" : "dual"; }
inline std::string to_string(Verdict v) { return v == Verdict::Obstructed ? "Obstructed" : "NoObstructionFound"; }

/// Witness of one violated inequality.
///   SecondSyzygy, Regularity, MaximalMinor: lhs > rhs where lhs <= rhs is required
///   CodimTooFew: lhs < rhs where lhs >= rhs is required
///   CodimEqualityMismatch: lhs != rhs, the diagram entry and the Buchsbaum-Rim entry at `detail`
///   EAlphaFamily: lhs = alpha, rhs = 0
struct Finding {
  FindingKind kind;
  Side side = Side::D;
  Rational lhs;
  Rational rhs;
  std::string detail;
  friend bool operator==(const Finding&, const Finding&) = default;
};

struct ObstructionReport {
  std::vector<Finding> findings;
  std::vector<std::string> notes;

  Verdict verdict() const { return findings.empty() ? Verdict::NoObstructionFound : Verdict::Obstructed; }
  bool has(FindingKind k) const {
    return std::any_of(findings.begin(), findings.end(), [&](const Finding& f) { return f.kind == k; });
  }
};

// ---------------------------------------------------------------------------
// Presentation data

namespace detail {

inline std::int64_t to_count(const Rational& q, const char* what) {
  if (!is_integral(q)) throw NotApplicable(std::string(what) + " is not an integer");
  BigInt n = numerator_of(q);
  if (n > 1'000'000) throw NotApplicable(std::string(what) + " is too large to expand");
  return static_cast<std::int64_t>(n);
}

/// The diagram twisted so its generators sit in degree 0.
inline BettiDiagram normalize_generators(const BettiDiagram& d) {
  if (d.empty()) throw NotApplicable("zero diagram");
  if (column_empty(d, 0)) throw NotApplicable("no generators");
  if (min_degree(d, 0) != max_degree(d, 0)) throw NotApplicable("generators in more than one degree");
  return twist(d, -min_degree(d, 0));
}

inline int codimension_or_skip(const BettiDiagram& d) {
  try {
    return codimension(d);
  } catch (const std::domain_error&) {
    throw NotApplicable("Hilbert numerator vanishes");
  }
}

}  // namespace detail

/// Degrees j_1 <= ... <= j_b of the first syzygies, with multiplicity, after
/// twisting the generators to degree 0.
inline std::vector<int> syzygy_degrees(const BettiDiagram& d) {
  BettiDiagram n = detail::normalize_generators(d);
  std::vector<int> out;
  for (const auto& [k, v] : n.entries()) {
    if (k.first != 1) continue;
    auto count = detail::to_count(v, "first syzygy count");
    out.insert(out.end(), static_cast<std::size_t>(count), k.second);
  }
  return out;
}

inline std::int64_t generator_count_int(const BettiDiagram& d) {
  return detail::to_count(generator_count(detail::normalize_generators(d)), "generator count");
}

// ---------------------------------------------------------------------------
// Buchsbaum-Rim obstructions

inline std::optional<Finding> second_syzygy_check(const BettiDiagram& d) {
  BettiDiagram n = detail::normalize_generators(d);
  if (pdim(n) <= 1) throw NotApplicable("projective dimension at most 1");
  if (detail::codimension_or_skip(n) < 2) throw NotApplicable("codimension below 2");
  auto a = generator_count_int(n);
  auto j = syzygy_degrees(n);
  if (static_cast<std::int64_t>(j.size()) < a + 1) throw NotApplicable("fewer than a+1 first syzygies");
  if (column_empty(n, 2)) throw NotApplicable("no second syzygies");
  std::int64_t bound = 0;
  for (std::int64_t l = 0; l <= a; ++l) bound += j[static_cast<std::size_t>(l)];
  int d2 = min_degree(n, 2);
  if (d2 <= bound) return std::nullopt;
  return Finding{FindingKind::SecondSyzygy, Side::D, Rational(d2), Rational(bound), ""};
}

/// Betti table of the Buchsbaum-Rim complex of a map from sum S(-j_l) to S^a.
inline BettiDiagram buchsbaum_rim_table(std::int64_t a, std::vector<int> degrees) {
  const auto b = static_cast<std::int64_t>(degrees.size());
  if (a < 1) throw std::invalid_argument("Buchsbaum-Rim table needs a >= 1");
  if (b <= a) throw std::invalid_argument("Buchsbaum-Rim table needs more than a degrees");
  std::sort(degrees.begin(), degrees.end());
  // count[k][s] = number of k-element index subsets with degree sum s
  std::vector<std::map<int, BigInt>> count(static_cast<std::size_t>(b + 1));
  count[0][0] = 1;
  for (std::size_t l = 0; l < degrees.size(); ++l)
    for (std::size_t k = l + 1; k-- > 0;)
      for (const auto& [s, c] : count[k]) count[k + 1][s + degrees[l]] += c;
  BettiDiagram out;
  out.set(0, 0, Rational(a));
  for (int g : degrees) out.set(1, g, out.at(1, g) + 1);
  for (std::int64_t i = 2; i <= b - a + 1; ++i) {
    BigInt mult = binomial(a + i - 3, i - 2);
    for (const auto& [s, c] : count[static_cast<std::size_t>(a + i - 1)])
      out.set(static_cast<int>(i), s, Rational(mult * c));
  }
  return out;
}

inline std::optional<Finding> codimension_check(const BettiDiagram& d) {
  BettiDiagram n = detail::normalize_generators(d);
  int e = detail::codimension_or_skip(n);
  if (e < 2) throw NotApplicable("codimension below 2");
  auto a = generator_count_int(n);
  auto j = syzygy_degrees(n);
  auto b = static_cast<std::int64_t>(j.size());
  if (b < e + a - 1) return Finding{FindingKind::CodimTooFew, Side::D, Rational(b), Rational(e + a - 1), ""};
  if (b > e + a - 1) return std::nullopt;
  BettiDiagram br = buchsbaum_rim_table(a, j);
  if (br == n) return std::nullopt;
  auto keys = n.entries();
  for (const auto& [k, v] : br.entries()) keys[k] = v;
  for (const auto& [k, unused] : keys) {
    if (n.at(k.first, k.second) != br.at(k.first, k.second))
      return Finding{FindingKind::CodimEqualityMismatch, Side::D, n.at(k.first, k.second), br.at(k.first, k.second),
                     "beta_{" + std::to_string(k.first) + "," + std::to_string(k.second) + "}"};
  }
  return std::nullopt;
}

inline std::optional<Finding> regularity_check(const BettiDiagram& d) {
  BettiDiagram n = detail::normalize_generators(d);
  if (!is_cohen_macaulay(n)) throw NotApplicable("not Cohen-Macaulay");
  int e = pdim(n);
  if (e < 2) throw NotApplicable("codimension below 2");
  auto a = generator_count_int(n);
  auto j = syzygy_degrees(n);
  auto b = static_cast<std::int64_t>(j.size());
  if (b < e + a - 1) throw NotApplicable("fewer than e+a-1 first syzygies");
  std::int64_t bound = 0;
  for (std::int64_t l = b - (e + a - 1); l < b; ++l) bound += j[static_cast<std::size_t>(l)];
  int top = max_degree(n, e);
  if (top <= bound) return std::nullopt;
  return Finding{FindingKind::Regularity, Side::D, Rational(top), Rational(bound), ""};
}

// ---------------------------------------------------------------------------
// Codimension three, two rows

/// (a, b, c, d; -, b', c', d') with generators in degree 0.
struct TwoRowShape {
  std::int64_t a = 0, b = 0, c = 0, d = 0;
  std::int64_t b2 = 0, c2 = 0, d2 = 0;
};

inline TwoRowShape two_row_shape(const BettiDiagram& d) {
  BettiDiagram n = detail::normalize_generators(d);
  if (!is_integral(n)) throw NotApplicable("non-integral entries");
  TwoRowShape s;
  for (const auto& [k, v] : n.entries()) {
    auto [i, j] = k;
    auto x = detail::to_count(v, "entry");
    if (j == i) {
      if (i == 0) s.a = x;
      else if (i == 1) s.b = x;
      else if (i == 2) s.c = x;
      else if (i == 3) s.d = x;
      else throw NotApplicable("projective dimension above 3");
    } else if (j == i + 1 && i >= 1 && i <= 3) {
      if (i == 1) s.b2 = x;
      else if (i == 2) s.c2 = x;
      else s.d2 = x;
    } else {
      throw NotApplicable("not a two-row diagram of projective dimension 3");
    }
  }
  if (pdim(n) != 3 || !is_cohen_macaulay(n)) throw NotApplicable("not Cohen-Macaulay of codimension 3");
  return s;
}

struct RankBounds {
  std::int64_t tau_min = 0;  // rank of the linear part of the presentation
  std::int64_t mu_min = 0;   // rank of the linear part of the last map
  bool no_koszul_summand = true;
  bool indecomposable = false;
};

/// Ranks up to this are ruled out by the zero-block argument; nothing beyond.
inline constexpr std::int64_t kMaxEliminatedRank = 3;

namespace detail {

/// An a x b matrix of linear forms in 3 variables of rank rho would have a
/// zero block of size (a - s) x (b - rho + s) for some 0 <= s <= rho.
inline bool compression_shape_infeasible(std::int64_t a, std::int64_t b, std::int64_t rho, std::int64_t s) {
  std::int64_t zero_cols = b - rho + s;
  if (s == 0 && zero_cols > 0) return true;      // a zero column
  if (s == rho && a - rho > 0) return true;      // a zero row
  return zero_cols > 3 * s;                      // too many independent columns on s rows
}

inline std::int64_t rank_lower_bound(std::int64_t a, std::int64_t b, bool indecomposable) {
  if (b == 0 || a == 0) return 0;
  std::int64_t top = std::min(a, b);
  // rank 1 with three columns splits off a Koszul complex, excluded by d = 0
  std::int64_t rho = (a >= 2 && b >= 3) ? 2 : 1;
  rho = std::min(rho, top);
  if (!indecomposable) return rho;
  while (rho < top && rho <= kMaxEliminatedRank) {
    bool all_bad = true;
    for (std::int64_t s = 0; s <= rho && all_bad; ++s)
      if (!compression_shape_infeasible(a, b, rho, s)) all_bad = false;
    if (!all_bad) break;
    ++rho;
  }
  return rho;
}

}  // namespace detail

inline RankBounds infer_rank_bounds(const BettiDiagram& d, bool indecomposable) {
  TwoRowShape s = two_row_shape(d);
  if (s.d != 0) throw NotApplicable("top row reaches column 3 (Koszul summand)");
  RankBounds r;
  r.indecomposable = indecomposable;
  r.tau_min = detail::rank_lower_bound(s.a, s.b, indecomposable);
  // the dual has shape (d', c', b', 0; -, c, b, a)
  r.mu_min = detail::rank_lower_bound(s.d2, s.c2, indecomposable);
  return r;
}

inline std::optional<Finding> maximal_minor_check(const BettiDiagram& d, const RankBounds& bounds) {
  TwoRowShape s = two_row_shape(d);
  if (s.d != 0) throw NotApplicable("top row reaches column 3 (Koszul summand)");
  if (s.c2 + s.c - s.d2 != s.b + s.b2 - s.a) throw NotApplicable("Herzog-Kuhl identity fails");
  std::int64_t lhs = s.b2 - s.a + bounds.tau_min + bounds.mu_min;
  if (lhs <= s.c2) return std::nullopt;
  return Finding{FindingKind::MaximalMinor, Side::D, Rational(lhs), Rational(s.c2),
                 "tau=" + std::to_string(bounds.tau_min) + " mu=" + std::to_string(bounds.mu_min)};
}

/// (2+alpha, 3, 2, -; -, 5+6alpha, 7+8alpha, 3+3alpha)
inline BettiDiagram e_alpha(std::int64_t alpha) {
  if (alpha < 0) throw std::invalid_argument("alpha must be nonnegative");
  BettiDiagram e;
  e.set(0, 0, Rational(2 + alpha));
  e.set(1, 1, 3);
  e.set(2, 2, 2);
  e.set(1, 2, Rational(5 + 6 * alpha));
  e.set(2, 3, Rational(7 + 8 * alpha));
  e.set(3, 4, Rational(3 + 3 * alpha));
  return e;
}

inline std::optional<Finding> e_alpha_check(const BettiDiagram& d) {
  BettiDiagram n;
  try {
    n = detail::normalize_generators(d);
  } catch (const NotApplicable&) {
    return std::nullopt;
  }
  Rational top = n.at(0, 0);
  if (!is_integral(top) || top < 2) return std::nullopt;
  BigInt alpha = numerator_of(top) - 2;
  if (alpha > 1'000'000'000) return std::nullopt;
  if (n != e_alpha(static_cast<std::int64_t>(alpha))) return std::nullopt;
  return Finding{FindingKind::EAlphaFamily, Side::D, Rational(alpha), Rational(0), "alpha=" + alpha.str()};
}

// ---------------------------------------------------------------------------
// Split search

enum class SplitVerdict { AllSplitsObstructed, UnresolvedSplitExists };

inline std::string to_string(SplitVerdict v) {
  return v == SplitVerdict::AllSplitsObstructed ? "AllSplitsObstructed" : "UnresolvedSplitExists";
}

struct Split {
  BettiDiagram first;
  BettiDiagram second;
};

struct SplitResult {
  SplitVerdict verdict = SplitVerdict::UnresolvedSplitExists;
  bool leaf_unobstructed = false;  // the diagram itself passes the leaf test
  bool cap_exceeded = false;
  std::vector<Split> unresolved;   // top-level splits with neither part certified
};

/// True when the diagram cannot come from an indecomposable module.
using LeafTest = std::function<bool(const BettiDiagram&)>;

/// Candidate summands enumerated per diagram before giving up.
inline constexpr std::uint64_t kDefaultSplitCap = 2'000'000;

namespace detail {

class SplitSearch {
 public:
  SplitSearch(const LeafTest& leaf, std::uint64_t cap) : leaf_(leaf), cap_(cap) {}

  bool cap_hit() const { return cap_hit_; }

  /// Nonzero D1 with D1 <= D - D1 (lexicographically on entries) such that
  /// D1 and D - D1 are lattice points. When D is Cohen-Macaulay of codimension
  /// e, so is every summand of a module realizing it; the Herzog-Kuhl
  /// equations then cut the search down to their free coordinates.
  std::optional<std::vector<BettiDiagram>> summands(const BettiDiagram& d) {
    std::vector<std::pair<int, int>> pos;
    std::vector<std::int64_t> top;
    for (const auto& [k, v] : d.entries()) {
      pos.push_back(k);
      top.push_back(static_cast<std::int64_t>(numerator_of(v)));
    }
    const std::size_t n = pos.size();
    int e = is_cohen_macaulay(d) ? pdim(d) : 0;

    // reduced row echelon form of the moment equations
    std::vector<std::vector<Rational>> m(static_cast<std::size_t>(e), std::vector<Rational>(n));
    for (int k = 0; k < e; ++k)
      for (std::size_t c = 0; c < n; ++c) {
        BigInt p = 1;
        for (int t = 0; t < k; ++t) p *= pos[c].second;
        m[static_cast<std::size_t>(k)][c] = Rational(pos[c].first % 2 ? BigInt(-p) : p);
      }
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t c = 0; c < n && row < m.size(); ++c) {
      std::size_t r = row;
      while (r < m.size() && m[r][c] == 0) ++r;
      if (r == m.size()) continue;
      std::swap(m[r], m[row]);
      Rational inv = 1 / m[row][c];
      for (auto& x : m[row]) x *= inv;
      for (std::size_t o = 0; o < m.size(); ++o) {
        if (o == row || m[o][c] == 0) continue;
        Rational f = m[o][c];
        for (std::size_t q = 0; q < n; ++q) m[o][q] -= f * m[row][q];
      }
      pivots.push_back(c);
      ++row;
    }
    std::vector<std::size_t> free;
    for (std::size_t c = 0; c < n; ++c)
      if (std::find(pivots.begin(), pivots.end(), c) == pivots.end()) free.push_back(c);

    std::uint64_t points = 1;
    for (std::size_t c : free) {
      auto width = static_cast<std::uint64_t>(top[c] + 1);
      if (points > cap_ / width) {
        cap_hit_ = true;
        return std::nullopt;
      }
      points *= width;
    }

    std::vector<BettiDiagram> out;
    std::vector<std::int64_t> x(n, 0);
    while (true) {
      bool ok = true;
      for (std::size_t r = 0; r < pivots.size() && ok; ++r) {
        Rational v = 0;
        for (std::size_t c : free) v -= m[r][c] * x[c];
        if (!is_integral(v) || v < 0 || v > top[pivots[r]]) ok = false;
        else x[pivots[r]] = static_cast<std::int64_t>(numerator_of(v));
      }
      if (ok) {
        bool zero = std::all_of(x.begin(), x.end(), [](std::int64_t v) { return v == 0; });
        bool whole = true;
        for (std::size_t c = 0; c < n; ++c) whole = whole && x[c] == top[c];
        std::vector<std::int64_t> rest(n);
        for (std::size_t c = 0; c < n; ++c) rest[c] = top[c] - x[c];
        if (!zero && !whole && x <= rest) {
          BettiDiagram d1, d2;
          for (std::size_t c = 0; c < n; ++c) {
            d1.set(pos[c].first, pos[c].second, Rational(x[c]));
            d2.set(pos[c].first, pos[c].second, Rational(rest[c]));
          }
          if (in_lattice(d1) && in_lattice(d2)) out.push_back(std::move(d1));
        }
      }
      std::size_t k = 0;
      while (k < free.size() && x[free[k]] == top[free[k]]) x[free[k++]] = 0;
      if (k == free.size()) break;
      ++x[free[k]];
    }
    return out;
  }

  /// Certified absent from the module semigroup.
  bool certified(const BettiDiagram& d) {
    auto it = memo_.find(d.entries());
    if (it != memo_.end()) return it->second;
    bool result = leaf_(d);
    if (result) {
      auto parts = summands(d);
      if (!parts) result = false;
      else
        for (const auto& d1 : *parts) {
          BettiDiagram d2 = subtract(d, d1);
          if (!certified(d1) && !certified(d2)) {
            result = false;
            break;
          }
        }
    }
    memo_[d.entries()] = result;
    return result;
  }

 private:
  const LeafTest& leaf_;
  std::uint64_t cap_;
  bool cap_hit_ = false;
  std::map<BettiDiagram::Map, bool> memo_;
};

}  // namespace detail

/// D is certified absent when the leaf test rejects it as the diagram of an
/// indecomposable module and every split D = D1 + D2 into lattice points has
/// a certified part. A search that runs past `cap` never certifies.
inline SplitResult split_search(const BettiDiagram& d, const LeafTest& leaf, std::uint64_t cap = kDefaultSplitCap) {
  SplitResult out;
  if (d.empty() || !in_lattice(d)) return out;
  if (!leaf(d)) {
    out.leaf_unobstructed = true;
    return out;
  }
  detail::SplitSearch search(leaf, cap);
  auto parts = search.summands(d);
  if (!parts) {
    out.cap_exceeded = true;
    return out;
  }
  for (const auto& d1 : *parts) {
    BettiDiagram d2 = subtract(d, d1);
    if (!search.certified(d1) && !search.certified(d2)) out.unresolved.push_back({d1, d2});
  }
  out.cap_exceeded = search.cap_hit();
  if (out.unresolved.empty() && !out.cap_exceeded) out.verdict = SplitVerdict::AllSplitsObstructed;
  return out;
}

// ---------------------------------------------------------------------------
// Battery

struct BatteryOptions {
  bool split_search = true;
  std::uint64_t split_cap = kDefaultSplitCap;
};

namespace detail {

inline void run_section3(const BettiDiagram& d, Side side, std::vector<Finding>& findings,
                         std::vector<std::string>* notes) {
  using Check = std::optional<Finding> (*)(const BettiDiagram&);
  const std::pair<const char*, Check> checks[] = {
      {"second syzygy", &second_syzygy_check},
      {"codimension", &codimension_check},
      {"regularity", &regularity_check},
  };
  for (const auto& [name, check] : checks) {
    try {
      if (auto f = check(d)) {
        f->side = side;
        findings.push_back(*f);
      }
    } catch (const NotApplicable& ex) {
      if (notes) notes->push_back(std::string(name) + " check on " + to_string(side) + " skipped: " + ex.what());
    }
  }
}

inline bool cohen_macaulay(const BettiDiagram& d) { return !d.empty() && is_cohen_macaulay(d); }

inline std::optional<Finding> maximal_minor_if_indecomposable(const BettiDiagram& d) {
  try {
    return maximal_minor_check(d, infer_rank_bounds(d, true));
  } catch (const NotApplicable&) {
    return std::nullopt;
  }
}

}  // namespace detail

/// Leaf test used by the battery: any Buchsbaum-Rim finding on D or its
/// dual, D or its dual in the E_alpha family, or a maximal-minor finding with
/// rank bounds inferred for an indecomposable module.
inline bool obstructed_if_indecomposable(const BettiDiagram& d) {
  std::vector<Finding> f;
  detail::run_section3(d, Side::D, f, nullptr);
  if (!f.empty()) return true;
  if (detail::cohen_macaulay(d)) {
    detail::run_section3(dual(d), Side::Dual, f, nullptr);
    if (!f.empty()) return true;
  }
  if (e_alpha_check(d) || (detail::cohen_macaulay(d) && e_alpha_check(dual(d)))) return true;
  return detail::maximal_minor_if_indecomposable(d).has_value();
}

/// Buchsbaum-Rim checks only, on D and (when Cohen-Macaulay) its dual.
inline std::vector<Finding> buchsbaum_rim_findings(const BettiDiagram& d, std::vector<std::string>* notes = nullptr) {
  std::vector<Finding> f;
  detail::run_section3(d, Side::D, f, notes);
  if (detail::cohen_macaulay(d))
    detail::run_section3(dual(d), Side::Dual, f, notes);
  else if (notes)
    notes->push_back("dual checks skipped: not Cohen-Macaulay");
  return f;
}

inline ObstructionReport battery(const BettiDiagram& d, const BatteryOptions& options = {}) {
  ObstructionReport report;
  if (d.empty()) {
    report.notes.push_back("zero diagram");
    return report;
  }
  report.findings = buchsbaum_rim_findings(d, &report.notes);
  if (auto f = e_alpha_check(d)) report.findings.push_back(*f);
  if (detail::cohen_macaulay(d))
    if (auto f = e_alpha_check(dual(d))) {
      f->side = Side::Dual;
      report.findings.push_back(*f);
    }

  std::optional<Finding> minor;
  try {
    minor = maximal_minor_check(d, infer_rank_bounds(d, true));
  } catch (const NotApplicable& ex) {
    report.notes.push_back(std::string("maximal minor check skipped: ") + ex.what());
  }
  if (minor) {
    if (!options.split_search) {
      report.notes.push_back("maximal minor violated if indecomposable (" + minor->detail +
                             "); not confirmed, split search disabled");
    } else {
      SplitResult r = split_search(d, obstructed_if_indecomposable, options.split_cap);
      if (r.verdict == SplitVerdict::AllSplitsObstructed) {
        report.findings.push_back(*minor);
      } else if (r.cap_exceeded) {
        report.notes.push_back("maximal minor violated if indecomposable; split search gave up at the cap");
      } else {
        report.notes.push_back("maximal minor violated if indecomposable; " + std::to_string(r.unresolved.size()) +
                               " split(s) left unresolved, e.g. [" +
                               format_inline(r.unresolved.front().first) + "] + [" +
                               format_inline(r.unresolved.front().second) + "]");
      }
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Deciders where the virtual and module semigroups agree

struct Pd1Verdict {
  bool member = false;
  PureDecomposition decomposition;
  std::string reason;
};

/// Projective dimension at most 1: match sorted generator degrees alpha_i to
/// sorted syzygy degrees gamma_i with alpha_i + 1 <= gamma_i.
inline Pd1Verdict pd1_decide(const BettiDiagram& d) {
  if (d.empty()) throw NotApplicable("zero diagram");
  if (pdim(d) > 1) throw NotApplicable("projective dimension above 1");
  if (!is_integral(d)) throw NotApplicable("non-integral entries");
  std::vector<int> alpha, gamma;
  for (const auto& [k, v] : d.entries()) {
    auto c = detail::to_count(v, "entry");
    (k.first == 0 ? alpha : gamma).insert((k.first == 0 ? alpha : gamma).end(), static_cast<std::size_t>(c), k.second);
  }
  Pd1Verdict out;
  if (alpha.size() != gamma.size()) {
    out.reason = std::to_string(alpha.size()) + " generators but " + std::to_string(gamma.size()) + " relations";
    return out;
  }
  std::map<DegreeSequence, std::int64_t> counts;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (alpha[i] + 1 > gamma[i]) {
      out.reason = "generator degree " + std::to_string(alpha[i]) + " cannot pair with relation degree " +
                   std::to_string(gamma[i]);
      return out;
    }
    ++counts[DegreeSequence({alpha[i], gamma[i]})];
  }
  out.member = true;
  for (const auto& [seq, c] : counts) out.decomposition.terms.push_back({Rational(c), seq});
  return out;
}

struct LevelVerdict {
  bool member = false;
  std::optional<int> failing_index;
  HilbertFunction hilbert;
};

/// Second differences h(i-1) - 2h(i) + h(i+1) are checked for
/// i = kLevelFirstIndex, ..., socle_degree_bound - kLevelLastOffset.
inline constexpr int kLevelFirstIndex = 1;
inline constexpr int kLevelLastOffset = 2;

inline std::optional<int> first_concavity_violation(const HilbertFunction& h, int first, int last) {
  for (int i = first; i <= last; ++i)
    if (h.at(i - 1) - 2 * h.at(i) + h.at(i + 1) > 0) return i;
  return std::nullopt;
}

/// Projective dimension 2, one generator degree, one top degree.
inline LevelVerdict level_decide(const BettiDiagram& d, int n = 2) {
  BettiDiagram g = detail::normalize_generators(d);
  if (pdim(g) != 2) throw NotApplicable("projective dimension is not 2");
  if (column_empty(g, 2) || min_degree(g, 2) != max_degree(g, 2)) throw NotApplicable("last column in several degrees");
  int d2 = min_degree(g, 2);
  LevelVerdict out;
  out.hilbert = hilbert_function(g, n, std::max(d2, kLevelFirstIndex + 1));
  out.failing_index = first_concavity_violation(out.hilbert, kLevelFirstIndex, d2 - kLevelLastOffset);
  out.member = !out.failing_index.has_value();
  return out;
}

}  // namespace betti
