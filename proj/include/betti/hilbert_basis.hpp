#pragma once

// Hilbert basis of the monoid { x in N^n : A x = 0 }.
//
// Constraints are added one row at a time. Given the Hilbert basis H of the
// monoid cut out by the rows seen so far, the next row's value v(x) = a.x
// splits H by sign, and a critical-pair completion builds the set G of
// elements that are minimal for the sign-compatible order
//
//   z <= y  iff  z <= y entrywise and v(z), v(y - z) do not have opposite signs.
//
// Every pair of opposite-sign elements is summed and reduced to normal form
// against G; nonzero normal forms join G. The zero-valued part of the
// completed G is the Hilbert basis for the extended system.

#include "betti/matrix.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <tuple>
#include <vector>

namespace betti {

using IntVector = std::vector<std::int64_t>;

namespace detail {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("Hilbert basis entry overflow");
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("Hilbert basis entry overflow");
  return r;
}

struct SignedElement {
  IntVector x;
  std::int64_t value = 0;
  std::int64_t norm = 0;
};

/// z reduces y: entrywise below it and the value does not overshoot or flip sign.
inline bool sign_compatible_below(const SignedElement& z, const SignedElement& y) {
  if (z.norm > y.norm) return false;
  if (z.value > 0 && !(y.value >= z.value)) return false;
  if (z.value < 0 && !(y.value <= z.value)) return false;
  for (std::size_t k = 0; k < z.x.size(); ++k)
    if (z.x[k] > y.x[k]) return false;
  return true;
}

inline void reduce(SignedElement& y, const std::vector<SignedElement>& basis) {
  bool changed = true;
  while (changed && y.norm > 0) {
    changed = false;
    for (const auto& z : basis) {
      if (sign_compatible_below(z, y)) {
        for (std::size_t k = 0; k < y.x.size(); ++k) y.x[k] -= z.x[k];
        y.value -= z.value;
        y.norm -= z.norm;
        changed = true;
        break;
      }
    }
  }
}

inline std::vector<IntVector> minimal_elements(std::vector<IntVector> vs) {
  auto norm = [](const IntVector& v) { return std::accumulate(v.begin(), v.end(), std::int64_t{0}); };
  std::sort(vs.begin(), vs.end(), [&](const IntVector& a, const IntVector& b) {
    auto na = norm(a), nb = norm(b);
    return na != nb ? na < nb : a < b;
  });
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  std::vector<IntVector> out;
  for (const auto& v : vs) {
    bool dominated = std::any_of(out.begin(), out.end(), [&](const IntVector& u) {
      for (std::size_t k = 0; k < u.size(); ++k)
        if (u[k] > v[k]) return false;
      return true;
    });
    if (!dominated) out.push_back(v);
  }
  return out;
}

/// One completion step: Hilbert basis of { x in monoid(basis) : row . x = 0 }.
inline std::vector<IntVector> add_constraint(const std::vector<IntVector>& basis, const std::vector<std::int64_t>& row) {
  std::vector<SignedElement> g;
  for (const auto& h : basis) {
    SignedElement e{h, 0, 0};
    for (std::size_t k = 0; k < h.size(); ++k) {
      e.value = checked_add(e.value, checked_mul(row[k], h[k]));
      e.norm = checked_add(e.norm, h[k]);
    }
    g.push_back(std::move(e));
  }
  using Pair = std::tuple<std::int64_t, std::size_t, std::size_t>;
  std::priority_queue<Pair, std::vector<Pair>, std::greater<>> pairs;
  auto enqueue_partners = [&](std::size_t idx) {
    const auto& e = g[idx];
    if (e.value == 0) return;
    for (std::size_t o = 0; o < g.size(); ++o) {
      if (o == idx || g[o].value == 0 || (g[o].value > 0) == (e.value > 0)) continue;
      pairs.emplace(e.norm + g[o].norm, std::min(o, idx), std::max(o, idx));
    }
  };
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j)
      if (g[i].value != 0 && g[j].value != 0 && (g[i].value > 0) != (g[j].value > 0))
        pairs.emplace(g[i].norm + g[j].norm, i, j);

  while (!pairs.empty()) {
    auto [n, i, j] = pairs.top();
    pairs.pop();
    SignedElement s;
    s.x.resize(g[i].x.size());
    for (std::size_t k = 0; k < s.x.size(); ++k) s.x[k] = checked_add(g[i].x[k], g[j].x[k]);
    s.value = checked_add(g[i].value, g[j].value);
    s.norm = checked_add(g[i].norm, g[j].norm);
    reduce(s, g);
    if (s.norm == 0) continue;
    g.push_back(std::move(s));
    enqueue_partners(g.size() - 1);
  }

  std::vector<IntVector> zeros;
  for (auto& e : g)
    if (e.value == 0) zeros.push_back(std::move(e.x));
  return minimal_elements(std::move(zeros));
}

}  // namespace detail

/// Minimal generating set of { x in N^cols : A x = 0 }, sorted by total
/// degree, then lexicographically.
inline std::vector<IntVector> hilbert_basis(const IntegerMatrix& a) {
  const std::size_t n = a.cols();
  std::vector<IntVector> rows;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    IntVector row(n);
    for (std::size_t c = 0; c < n; ++c) {
      if (a(r, c) > std::numeric_limits<std::int64_t>::max() || a(r, c) < std::numeric_limits<std::int64_t>::min())
        throw std::overflow_error("matrix entry does not fit in 64 bits");
      row[c] = static_cast<std::int64_t>(a(r, c));
    }
    if (std::any_of(row.begin(), row.end(), [](std::int64_t v) { return v != 0; })) rows.push_back(std::move(row));
  }
  // sparse rows first keeps the intermediate bases small
  std::stable_sort(rows.begin(), rows.end(), [](const IntVector& x, const IntVector& y) {
    auto nz = [](const IntVector& v) { return std::count_if(v.begin(), v.end(), [](std::int64_t e) { return e != 0; }); };
    return nz(x) < nz(y);
  });
  std::vector<IntVector> basis;
  for (std::size_t k = 0; k < n; ++k) {
    IntVector e(n, 0);
    e[k] = 1;
    basis.push_back(std::move(e));
  }
  for (const auto& row : rows) basis = detail::add_constraint(basis, row);
  return detail::minimal_elements(std::move(basis));
}

}  // namespace betti
