#pragma once

// Lattice points of one simplex of the fan: the matrix of pure diagrams of a
// chain, its universal denominator, and the minimal semigroup generators.

#include "betti/fan.hpp"
#include "betti/hilbert_basis.hpp"
#include "betti/matrix.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace betti {

/// Coordinates (i, j) with lower_i <= j <= upper_i, ordered by i then j.
inline std::vector<std::pair<int, int>> window_coordinates(const DegreeWindow& w) {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i <= w.max_index(); ++i)
    for (int j = w.lower[static_cast<std::size_t>(i)]; j <= w.upper[static_cast<std::size_t>(i)]; ++j)
      out.emplace_back(i, j);
  return out;
}

/// Column l holds pi_{chain[l]} in window coordinates.
inline IntegerMatrix phi_matrix(const Chain& chain, const DegreeWindow& w) {
  auto coords = window_coordinates(w);
  if (coords.size() != chain.size())
    throw std::invalid_argument("chain of size " + std::to_string(chain.size()) + " is not maximal in a window with " +
                                std::to_string(coords.size()) + " positions");
  std::map<std::pair<int, int>, std::size_t> row_of;
  for (std::size_t r = 0; r < coords.size(); ++r) row_of[coords[r]] = r;
  IntegerMatrix phi(coords.size(), chain.size());
  for (std::size_t l = 0; l < chain.size(); ++l) {
    if (!w.contains(chain.sequences[l]))
      throw std::invalid_argument("chain element " + chain.sequences[l].to_string() + " lies outside the window");
    for (const auto& [k, v] : pi(chain.sequences[l]).entries()) phi(row_of.at(k), l) = numerator_of(v);
  }
  return phi;
}

inline BigInt universal_denominator(const Chain& chain, const DegreeWindow& w) {
  return smith_normal_form(phi_matrix(chain, w)).largest();
}

/// |det phi| + s.
inline BigInt generator_bound(const Chain& chain, const DegreeWindow& w) {
  BigInt det = determinant(phi_matrix(chain, w));
  return abs(det) + BigInt(chain.size() - 1);
}

struct Generator {
  BettiDiagram diagram;
  IntVector witness;  // diagram = (1/m) sum_l witness[l] * pi_{chain[l]}
};

struct GeneratorSet {
  BigInt denominator;  // m
  std::vector<Generator> generators;
};

namespace detail {

inline BettiDiagram combine(const Chain& chain, const IntVector& a, const BigInt& m) {
  BettiDiagram d;
  for (std::size_t l = 0; l < chain.size(); ++l)
    if (a[l] != 0) d = add(d, scale(pi(chain.sequences[l]), Rational(BigInt(a[l]), m)));
  return d;
}

inline GeneratorSet make_generator_set(const Chain& chain, const BigInt& m, std::vector<IntVector> witnesses) {
  witnesses = minimal_elements(std::move(witnesses));
  GeneratorSet out{m, {}};
  for (auto& a : witnesses) out.generators.push_back({combine(chain, a, m), std::move(a)});
  return out;
}

}  // namespace detail

/// Minimal generators of the lattice points of the simplex of `chain`, from
/// the Hilbert basis of [-m I | phi] (x) = 0.
inline GeneratorSet semigroup_generators(const Chain& chain, const DegreeWindow& w) {
  IntegerMatrix phi = phi_matrix(chain, w);
  const std::size_t n = phi.rows();
  BigInt m = smith_normal_form(phi).largest();
  if (m == 0) throw std::domain_error("pure diagrams of the chain are linearly dependent");
  IntegerMatrix system(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    system(r, r) = -m;
    for (std::size_t c = 0; c < n; ++c) system(r, n + c) = phi(r, c);
  }
  std::vector<IntVector> witnesses;
  for (const auto& sol : hilbert_basis(system)) {
    IntVector a(sol.begin() + static_cast<std::ptrdiff_t>(n), sol.end());
    if (std::any_of(a.begin(), a.end(), [](std::int64_t v) { return v != 0; })) witnesses.push_back(std::move(a));
  }
  return detail::make_generator_set(chain, m, std::move(witnesses));
}

/// Enumerates every integral diagram (1/m) sum a_l pi_l with 0 <= a_l <= cap
/// and keeps the minimal ones. The result is complete only when cap is at
/// least m; a smaller cap silently drops generators.
inline GeneratorSet brute_force_generators(const Chain& chain, const DegreeWindow& w, std::int64_t cap) {
  IntegerMatrix phi = phi_matrix(chain, w);
  const std::size_t n = phi.rows();
  BigInt m_big = smith_normal_form(phi).largest();
  BigInt det_big = determinant(phi);
  if (det_big == 0) throw std::domain_error("pure diagrams of the chain are linearly dependent");
  // adj = det * phi^{-1}, via cofactors
  std::vector<std::vector<std::int64_t>> adj(n, std::vector<std::int64_t>(n));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      IntegerMatrix minor(n - 1, n - 1);
      for (std::size_t i = 0, mi = 0; i < n; ++i) {
        if (i == c) continue;
        for (std::size_t j = 0, mj = 0; j < n; ++j) {
          if (j == r) continue;
          minor(mi, mj++) = phi(i, j);
        }
        ++mi;
      }
      BigInt cof = determinant(minor);
      if ((r + c) % 2) cof = -cof;
      adj[r][c] = static_cast<std::int64_t>(cof);
    }
  }
  const auto m = static_cast<std::int64_t>(m_big);
  const auto det = static_cast<std::int64_t>(det_big);
  // x = phi a / m, so 0 <= x_r <= cap * rowsum_r / m
  std::vector<std::int64_t> bound(n);
  for (std::size_t r = 0; r < n; ++r) {
    std::int64_t rowsum = 0;
    for (std::size_t c = 0; c < n; ++c) rowsum += static_cast<std::int64_t>(phi(r, c));
    bound[r] = detail::checked_mul(cap, rowsum) / m;
  }
  std::vector<IntVector> witnesses;
  IntVector x(n, 0);
  while (true) {
    bool nonzero = std::any_of(x.begin(), x.end(), [](std::int64_t v) { return v != 0; });
    if (nonzero) {
      IntVector a(n);
      bool ok = true;
      for (std::size_t l = 0; l < n && ok; ++l) {
        std::int64_t s = 0;
        for (std::size_t r = 0; r < n; ++r) s = detail::checked_add(s, detail::checked_mul(adj[l][r], x[r]));
        s = detail::checked_mul(s, m);
        if (s % det != 0) ok = false;
        else {
          a[l] = s / det;
          if (a[l] < 0 || a[l] > cap) ok = false;
        }
      }
      if (ok) witnesses.push_back(std::move(a));
    }
    std::size_t k = 0;
    while (k < n && x[k] == bound[k]) x[k++] = 0;
    if (k == n) break;
    ++x[k];
  }
  return detail::make_generator_set(chain, m_big, std::move(witnesses));
}

}  // namespace betti
