#pragma once

#include "betti/diagram.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace betti {

/// Pure diagram of type d scaled so that beta_0 = 1.
struct NormalizedPure {
  DegreeSequence degrees;
  std::vector<Rational> entries;  // entries[i] sits at (i, degrees[i])

  BettiDiagram diagram() const {
    BettiDiagram out;
    for (std::size_t i = 0; i < entries.size(); ++i) out.set(static_cast<int>(i), degrees[i], entries[i]);
    return out;
  }
};

/// First lattice point on the ray of type d.
struct PureDiagram {
  DegreeSequence degrees;
  BettiDiagram diagram;
  BigInt multiplier;  // diagram = multiplier * normalized_pure(degrees)
};

/// Herzog-Kuhl magnitudes: beta_i = prod_{k != 0} |d_k - d_0| / prod_{k != i} |d_i - d_k|.
inline NormalizedPure normalized_pure(const DegreeSequence& d) {
  NormalizedPure out{d, {}};
  BigInt top = 1;
  for (std::size_t k = 1; k < d.size(); ++k) top *= d[k] - d[0];
  for (std::size_t i = 0; i < d.size(); ++i) {
    BigInt bottom = 1;
    for (std::size_t k = 0; k < d.size(); ++k) {
      if (k == i) continue;
      bottom *= d[i] > d[k] ? d[i] - d[k] : d[k] - d[i];
    }
    out.entries.emplace_back(top, bottom);
  }
  return out;
}

inline PureDiagram pure_diagram(const DegreeSequence& d) {
  NormalizedPure n = normalized_pure(d);
  BigInt lambda = 1;
  for (const auto& q : n.entries) lambda = lcm(lambda, denominator_of(q));
  PureDiagram out{d, {}, lambda};
  for (std::size_t i = 0; i < n.entries.size(); ++i)
    out.diagram.set(static_cast<int>(i), d[i], n.entries[i] * Rational(lambda));
  return out;
}

/// Shorthand for the integral pure diagram pi_d.
inline BettiDiagram pi(const DegreeSequence& d) { return pure_diagram(d).diagram; }

struct PureMultiple {
  Rational coefficient;
  DegreeSequence degrees;
  friend bool operator==(const PureMultiple&, const PureMultiple&) = default;
};

/// Recognizes D = q * pi_d.
inline std::optional<PureMultiple> is_pure_multiple(const BettiDiagram& d) {
  if (d.empty()) return std::nullopt;
  int p = pdim(d);
  std::vector<int> degs;
  for (int i = 0; i <= p; ++i) {
    if (column_empty(d, i) || min_degree(d, i) != max_degree(d, i)) return std::nullopt;
    degs.push_back(min_degree(d, i));
  }
  for (std::size_t i = 1; i < degs.size(); ++i)
    if (degs[i - 1] >= degs[i]) return std::nullopt;
  DegreeSequence seq(degs);
  BettiDiagram ray = pi(seq);
  Rational q = d.at(0, degs[0]) / ray.at(0, degs[0]);
  if (scale(ray, q) != d) return std::nullopt;
  return PureMultiple{q, seq};
}

inline bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t k = 2; k * k <= n; ++k)
    if (n % k == 0) return false;
  return true;
}

/// Degree sequence (0, 1, P+1, P+2, ..., 2P).
inline DegreeSequence prime_family_degrees(int prime) {
  std::vector<int> d{0, 1};
  for (int k = prime + 1; k <= 2 * prime; ++k) d.push_back(k);
  return DegreeSequence(d);
}

/// c times the beta_0 = 1 pure diagram of type (0, 1, P+1, ..., 2P).
inline BettiDiagram prime_family(int prime, std::int64_t c) {
  if (!is_prime(prime)) throw std::invalid_argument("prime_family needs a prime, got " + std::to_string(prime));
  if (c < 1) throw std::invalid_argument("prime_family multiplier must be positive");
  return scale(normalized_pure(prime_family_degrees(prime)).diagram(), Rational(c));
}

}  // namespace betti
