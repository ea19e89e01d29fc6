#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "srlab/complex.hpp"
#include "srlab/field.hpp"

namespace srlab {

/// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::int64_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntMatrix operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch");
    IntMatrix out(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const auto a = (*this)(i, k);
        if (a == 0) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) out(i, j) += a * o(k, j);
      }
    return out;
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](std::int64_t x) { return x == 0; });
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> data_;
};

namespace linalg {

using BigInt = boost::multiprecision::cpp_int;

/// Rank over Q by fraction-free (Bareiss) elimination in arbitrary precision.
inline std::int64_t rank_bareiss(const IntMatrix& a) {
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::vector<std::vector<BigInt>> m(rows, std::vector<BigInt>(cols));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m[i][j] = a(i, j);
  BigInt prev = 1;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rank]);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        m[i][j] = (m[i][j] * m[rank][c] - m[i][c] * m[rank][j]) / prev;
      }
      m[i][c] = 0;
    }
    prev = m[rank][c];
    ++rank;
  }
  return static_cast<std::int64_t>(rank);
}

inline std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) {
  // Fermat: a^(p-2) mod p.
  std::uint64_t result = 1;
  std::uint64_t base = a % p;
  std::uint64_t e = p - 2;
  while (e > 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return result;
}

/// Rank over GF(p) by dense Gaussian elimination.
inline std::int64_t rank_mod_p(const IntMatrix& a, std::uint32_t p) {
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  const auto P = static_cast<std::int64_t>(p);
  std::vector<std::vector<std::uint64_t>> m(rows, std::vector<std::uint64_t>(cols));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m[i][j] = static_cast<std::uint64_t>(((a(i, j) % P) + P) % P);
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rank]);
    const std::uint64_t inv = inverse_mod(m[rank][c], p);
    for (std::size_t j = c; j < cols; ++j) m[rank][j] = m[rank][j] * inv % p;
    for (std::size_t i = rank + 1; i < rows; ++i) {
      const std::uint64_t f = m[i][c];
      if (f == 0) continue;
      for (std::size_t j = c; j < cols; ++j) m[i][j] = (m[i][j] + (p - f) * m[rank][j]) % p;
    }
    ++rank;
  }
  return static_cast<std::int64_t>(rank);
}

inline std::int64_t dense_rank(const IntMatrix& a, const Field& field) {
  return field.is_rational() ? rank_bareiss(a) : rank_mod_p(a, field.characteristic());
}

namespace detail {

struct Overflow {};

// A sparse column: parallel arrays of row indices (ascending) and coefficients.
struct SparseColumn {
  std::vector<std::int32_t> rows;
  std::vector<std::int64_t> coeffs;

  bool empty() const { return rows.empty(); }
  std::int32_t low() const { return rows.back(); }
  std::int64_t low_coeff() const { return coeffs.back(); }
  void clear() {
    rows.clear();
    coeffs.clear();
  }
};

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
  return r;
}
inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
  return r;
}

// Column reduction against stored pivots, dispatched on characteristic.
// Characteristic 0 uses fraction-free updates col <- a*col - b*pivot with content removal.
class ColumnReducer {
 public:
  ColumnReducer(std::size_t row_count, std::uint32_t characteristic)
      : p_(characteristic), pivot_of_row_(row_count, -1) {}

  /// Reduces `col` in place; returns true and stores it when it stays nonzero.
  bool reduce_and_store(SparseColumn& col) {
    if (p_ != 0) {
      const auto P = static_cast<std::int64_t>(p_);
      for (auto& c : col.coeffs) c = ((c % P) + P) % P;
    }
    while (!col.empty()) {
      const auto p = pivot_of_row_[static_cast<std::size_t>(col.low())];
      if (p < 0) break;
      eliminate(col, stored_[static_cast<std::size_t>(p)]);
    }
    if (col.empty()) return false;
    if (p_ != 0 && col.low_coeff() != 1) {
      const auto inv = static_cast<std::int64_t>(inverse_mod(static_cast<std::uint64_t>(col.low_coeff()), p_));
      for (auto& c : col.coeffs) c = c * inv % p_;
    }
    pivot_of_row_[static_cast<std::size_t>(col.low())] = static_cast<std::int32_t>(stored_.size());
    stored_.push_back(col);
    return true;
  }

  const std::vector<std::int32_t>& pivot_of_row() const { return pivot_of_row_; }

 private:
  void eliminate(SparseColumn& col, const SparseColumn& piv) {
    scratch_.clear();
    std::int64_t a = 1;
    std::int64_t b = col.low_coeff();
    const auto P = static_cast<std::int64_t>(p_);
    if (p_ == 0) {
      a = piv.low_coeff();
      const std::int64_t g = std::gcd(a, b);
      a /= g;
      b /= g;
    }
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < col.rows.size() || j < piv.rows.size()) {
      std::int32_t r;
      std::int64_t v;
      if (j == piv.rows.size() || (i < col.rows.size() && col.rows[i] < piv.rows[j])) {
        r = col.rows[i];
        v = p_ == 0 ? checked_mul(a, col.coeffs[i]) : col.coeffs[i];
        ++i;
      } else if (i == col.rows.size() || piv.rows[j] < col.rows[i]) {
        r = piv.rows[j];
        v = p_ == 0 ? checked_sub(0, checked_mul(b, piv.coeffs[j])) : (P - b * piv.coeffs[j] % P) % P;
        ++j;
      } else {
        r = col.rows[i];
        v = p_ == 0 ? checked_sub(checked_mul(a, col.coeffs[i]), checked_mul(b, piv.coeffs[j]))
                    : ((col.coeffs[i] - b * piv.coeffs[j]) % P + P) % P;
        ++i;
        ++j;
      }
      if (v != 0) {
        scratch_.rows.push_back(r);
        scratch_.coeffs.push_back(v);
      }
    }
    if (p_ == 0 && !scratch_.empty()) {
      std::int64_t g = 0;
      for (auto c : scratch_.coeffs) g = std::gcd(g, c);
      if (scratch_.low_coeff() < 0) g = -g;
      if (g != 1)
        for (auto& c : scratch_.coeffs) c /= g;
    }
    std::swap(col, scratch_);
  }

  std::uint32_t p_;
  std::vector<std::int32_t> pivot_of_row_;
  std::vector<SparseColumn> stored_;
  SparseColumn scratch_;
};

// Mod-2 specialisation: coefficients are implicit and updates are symmetric differences.
class Gf2Reducer {
 public:
  explicit Gf2Reducer(std::size_t row_count) : pivot_of_row_(row_count, -1) {}

  bool reduce_and_store(std::vector<std::int32_t>& col) {
    while (!col.empty()) {
      const auto p = pivot_of_row_[static_cast<std::size_t>(col.back())];
      if (p < 0) break;
      const auto& piv = stored_[static_cast<std::size_t>(p)];
      scratch_.clear();
      std::set_symmetric_difference(col.begin(), col.end(), piv.begin(), piv.end(), std::back_inserter(scratch_));
      std::swap(col, scratch_);
    }
    if (col.empty()) return false;
    pivot_of_row_[static_cast<std::size_t>(col.back())] = static_cast<std::int32_t>(stored_.size());
    stored_.push_back(col);
    return true;
  }

  const std::vector<std::int32_t>& pivot_of_row() const { return pivot_of_row_; }

 private:
  std::vector<std::int32_t> pivot_of_row_;
  std::vector<std::vector<std::int32_t>> stored_;
  std::vector<std::int32_t> scratch_;
};

inline std::int32_t face_index(const std::vector<Mask>& bucket, Mask face) {
  auto it = std::lower_bound(bucket.begin(), bucket.end(), face);
  return static_cast<std::int32_t>(it - bucket.begin());
}

// Boundary column of `face` against the bucket of its codimension-one faces.
inline void boundary_column(Mask face, const std::vector<Mask>& lower, SparseColumn& out) {
  out.clear();
  std::vector<std::pair<std::int32_t, std::int64_t>> entries;
  int pos = 0;
  for (Mask rest = face; rest != 0; rest &= rest - 1, ++pos) {
    const Mask v = rest & (~rest + 1);
    entries.emplace_back(face_index(lower, face & ~v), (pos % 2 == 0) ? 1 : -1);
  }
  std::sort(entries.begin(), entries.end());
  for (auto [r, c] : entries) {
    out.rows.push_back(r);
    out.coeffs.push_back(c);
  }
}

}  // namespace detail

/**
 * Dense boundary matrix from size-s faces (columns) to size-(s-1) faces (rows),
 * both in the bucket order, with the alternating-sign convention.
 */
inline IntMatrix boundary_matrix_from_buckets(const FaceBuckets& faces, int s) {
  const auto& cols = s < static_cast<int>(faces.by_size.size()) && s >= 0 ? faces.by_size[static_cast<std::size_t>(s)]
                                                                          : std::vector<Mask>{};
  static const std::vector<Mask> none;
  const auto& rows = s >= 1 && s - 1 < static_cast<int>(faces.by_size.size())
                         ? faces.by_size[static_cast<std::size_t>(s - 1)]
                         : none;
  IntMatrix m(rows.size(), cols.size());
  if (s < 1) return m;
  detail::SparseColumn col;
  for (std::size_t j = 0; j < cols.size(); ++j) {
    detail::boundary_column(cols[j], rows, col);
    for (std::size_t t = 0; t < col.rows.size(); ++t) m(static_cast<std::size_t>(col.rows[t]), j) = col.coeffs[t];
  }
  return m;
}

/**
 * Ranks of all boundary maps of a face set: result[s] is the rank of the map
 * from size-s faces to size-(s-1) faces (result[0] = 0).
 *
 * Sparse column reduction from the top dimension down; a row that becomes a
 * pivot clears the matching column one dimension lower. Over Q a reduction
 * that overflows 64-bit coefficients is recomputed by Bareiss elimination.
 */
inline std::vector<std::int64_t> boundary_ranks(const FaceBuckets& faces, const Field& field) {
  const int top = static_cast<int>(faces.by_size.size()) - 1;
  std::vector<std::int64_t> ranks(static_cast<std::size_t>(std::max(top, 0) + 2), 0);
  std::vector<char> cleared;  // cleared[j] for columns of the current size
  bool clearing_valid = false;
  detail::SparseColumn col;
  std::vector<std::int32_t> col2;
  for (int s = top; s >= 1; --s) {
    const auto& columns = faces.by_size[static_cast<std::size_t>(s)];
    const auto& lower = faces.by_size[static_cast<std::size_t>(s - 1)];
    std::vector<char> next_cleared(lower.size(), 0);
    std::int64_t rank = 0;
    if (field.characteristic() == 2) {
      detail::Gf2Reducer red(lower.size());
      for (std::size_t j = 0; j < columns.size(); ++j) {
        if (clearing_valid && cleared[j]) continue;
        col2.clear();
        for (Mask rest = columns[j]; rest != 0; rest &= rest - 1) {
          const Mask v = rest & (~rest + 1);
          col2.push_back(detail::face_index(lower, columns[j] & ~v));
        }
        std::sort(col2.begin(), col2.end());
        if (red.reduce_and_store(col2)) {
          ++rank;
          next_cleared[static_cast<std::size_t>(col2.back())] = 1;
        }
      }
    } else {
      try {
        detail::ColumnReducer red(lower.size(), field.characteristic());
        for (std::size_t j = 0; j < columns.size(); ++j) {
          if (clearing_valid && cleared[j]) continue;
          detail::boundary_column(columns[j], lower, col);
          if (red.reduce_and_store(col)) {
            ++rank;
            next_cleared[static_cast<std::size_t>(col.low())] = 1;
          }
        }
      } catch (const detail::Overflow&) {
        rank = rank_bareiss(boundary_matrix_from_buckets(faces, s));
        ranks[static_cast<std::size_t>(s)] = rank;
        clearing_valid = false;
        cleared.clear();
        continue;
      }
    }
    ranks[static_cast<std::size_t>(s)] = rank;
    cleared = std::move(next_cleared);
    clearing_valid = true;
  }
  return ranks;
}

}  // namespace linalg
}  // namespace srlab
