#pragma once

#include "betti/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace betti {

/// Dense row-major matrix of arbitrary-precision integers.
class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntegerMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    for (const auto& r : rows) {
      if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
      for (long long v : r) data_.emplace_back(v);
    }
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const BigInt& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

  std::string to_string() const {
    std::string s;
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c < cols_; ++c) {
        if (c) s += ' ';
        s += (*this)(r, c).str();
      }
      s += '\n';
    }
    return s;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

/// Elementary divisors e_1 | e_2 | ... | e_r, r = min(rows, cols); zeros last.
struct SmithForm {
  std::vector<BigInt> divisors;

  /// Largest nonzero divisor, which annihilates the torsion of the cokernel.
  BigInt largest() const {
    BigInt m = 0;
    for (const auto& e : divisors)
      if (e != 0) m = e;
    return m;
  }
};

inline SmithForm smith_normal_form(IntegerMatrix a) {
  const std::size_t m = a.rows(), n = a.cols();
  const std::size_t r = std::min(m, n);
  auto swap_rows = [&](std::size_t x, std::size_t y) {
    for (std::size_t c = 0; c < n; ++c) std::swap(a(x, c), a(y, c));
  };
  auto swap_cols = [&](std::size_t x, std::size_t y) {
    for (std::size_t q = 0; q < m; ++q) std::swap(a(q, x), a(q, y));
  };
  for (std::size_t k = 0; k < r; ++k) {
    while (true) {
      // smallest nonzero pivot in the trailing block
      std::size_t pr = m, pc = n;
      for (std::size_t i = k; i < m; ++i)
        for (std::size_t j = k; j < n; ++j)
          if (a(i, j) != 0 && (pr == m || abs(a(i, j)) < abs(a(pr, pc)))) {
            pr = i;
            pc = j;
          }
      if (pr == m) goto done;
      swap_rows(k, pr);
      swap_cols(k, pc);
      bool clean = true;
      for (std::size_t i = k + 1; i < m; ++i) {
        if (a(i, k) == 0) continue;
        BigInt q = a(i, k) / a(k, k);
        for (std::size_t j = k; j < n; ++j) a(i, j) -= q * a(k, j);
        if (a(i, k) != 0) clean = false;
      }
      for (std::size_t j = k + 1; j < n; ++j) {
        if (a(k, j) == 0) continue;
        BigInt q = a(k, j) / a(k, k);
        for (std::size_t i = k; i < m; ++i) a(i, j) -= q * a(i, k);
        if (a(k, j) != 0) clean = false;
      }
      if (!clean) continue;
      // divisibility: fold an offending row into row k and retry
      bool divides = true;
      for (std::size_t i = k + 1; i < m && divides; ++i)
        for (std::size_t j = k + 1; j < n; ++j)
          if (a(i, j) % a(k, k) != 0) {
            for (std::size_t c = k; c < n; ++c) a(k, c) += a(i, c);
            divides = false;
            break;
          }
      if (divides) break;
    }
  }
done:
  SmithForm s;
  for (std::size_t k = 0; k < r; ++k) s.divisors.push_back(abs(a(k, k)));
  return s;
}

/// Fraction-free Bareiss elimination.
inline BigInt determinant(IntegerMatrix a) {
  const std::size_t n = a.rows();
  if (n != a.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  if (n == 0) return 1;
  BigInt sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t piv = k + 1;
      while (piv < n && a(piv, k) == 0) ++piv;
      if (piv == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(piv, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

inline std::vector<BigInt> multiply(const IntegerMatrix& a, const std::vector<BigInt>& x) {
  if (x.size() != a.cols()) throw std::invalid_argument("dimension mismatch in matrix-vector product");
  std::vector<BigInt> y(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) y[r] += a(r, c) * x[c];
  return y;
}

}  // namespace betti
