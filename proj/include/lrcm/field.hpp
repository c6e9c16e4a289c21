// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "lrcm/error.hpp"
#include "lrcm/subset.hpp"

namespace lrcm {

inline bool is_prime(uint64_t p) {
  if (p < 2) return false;
  for (uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

/// Arithmetic in GF(p) for a prime p < 2^31. Elements are uint32_t in [0, p).
class PrimeField {
 public:
  using Element = uint32_t;

  explicit PrimeField(uint32_t p) : p_(p) {
    if (p >= (uint32_t{1} << 31) || !is_prime(p)) {
      throw DomainError("modulus " + std::to_string(p) + " is not a prime below 2^31");
    }
  }

  uint32_t modulus() const noexcept { return p_; }

  Element reduce(int64_t v) const noexcept {
    const int64_t r = v % static_cast<int64_t>(p_);
    return static_cast<Element>(r < 0 ? r + p_ : r);
  }
  Element add(Element a, Element b) const noexcept {
    const uint64_t s = uint64_t{a} + b;
    return static_cast<Element>(s >= p_ ? s - p_ : s);
  }
  Element sub(Element a, Element b) const noexcept {
    return a >= b ? a - b : static_cast<Element>(uint64_t{a} + p_ - b);
  }
  Element mul(Element a, Element b) const noexcept {
    return static_cast<Element>(uint64_t{a} * b % p_);
  }
  Element pow(Element a, uint64_t e) const noexcept {
    uint64_t result = 1 % p_;
    uint64_t base = a;
    while (e) {
      if (e & 1) result = result * base % p_;
      base = base * base % p_;
      e >>= 1;
    }
    return static_cast<Element>(result);
  }
  Element inv(Element a) const {
    if (a == 0) throw DomainError("inverse of zero");
    return pow(a, p_ - 2);
  }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  uint32_t p_;
};

/// A k x n matrix over GF(p), read as a generator matrix: rows are
/// information symbols, columns are code symbols (storage nodes).
class FieldMatrix {
 public:
  FieldMatrix(PrimeField field, int rows, int cols)
      : field_(field), rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, 0) {
    if (rows < 0 || cols < 0 || cols > GroundSubset::kMaxUniverse) {
      throw DomainError("matrix shape " + std::to_string(rows) + "x" + std::to_string(cols) +
                        " unsupported");
    }
  }

  /// Builds from integer rows; entries are reduced mod p.
  static FieldMatrix from_rows(PrimeField field, const std::vector<std::vector<int64_t>>& rows) {
    const int k = static_cast<int>(rows.size());
    const int n = k == 0 ? 0 : static_cast<int>(rows.front().size());
    FieldMatrix m(field, k, n);
    for (int i = 0; i < k; ++i) {
      if (static_cast<int>(rows[i].size()) != n) {
        throw FormatError("ragged matrix: row " + std::to_string(i) + " has " +
                          std::to_string(rows[i].size()) + " entries, expected " +
                          std::to_string(n));
      }
      for (int j = 0; j < n; ++j) m.set(i, j, field.reduce(rows[i][j]));
    }
    return m;
  }

  static FieldMatrix identity(PrimeField field, int size) {
    FieldMatrix m(field, size, size);
    for (int i = 0; i < size; ++i) m.set(i, i, 1);
    return m;
  }

  const PrimeField& field() const noexcept { return field_; }
  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }

  PrimeField::Element at(int r, int c) const { return data_[index(r, c)]; }
  void set(int r, int c, PrimeField::Element v) {
    if (v >= field_.modulus()) throw DomainError("entry not reduced mod p");
    data_[index(r, c)] = v;
  }

  friend bool operator==(const FieldMatrix&, const FieldMatrix&) = default;

 private:
  size_t index(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_) {
      throw DomainError("matrix index (" + std::to_string(r) + "," + std::to_string(c) +
                        ") out of range");
    }
    return static_cast<size_t>(r) * cols_ + c;
  }

  PrimeField field_;
  int rows_;
  int cols_;
  std::vector<PrimeField::Element> data_;
};

/// Rank of the column submatrix indexed by `cols`, by Gaussian elimination.
inline int matrix_rank(const FieldMatrix& a, const GroundSubset& cols) {
  if (cols.universe() != a.cols()) {
    throw DomainError("column subset universe " + std::to_string(cols.universe()) +
                      " does not match matrix with " + std::to_string(a.cols()) + " columns");
  }
  const PrimeField& f = a.field();
  const std::vector<int> idx = cols.elements();
  const int k = a.rows();
  const int c = static_cast<int>(idx.size());
  // Work on the transpose so each selected column becomes a row to reduce.
  std::vector<std::vector<PrimeField::Element>> m(c, std::vector<PrimeField::Element>(k));
  for (int j = 0; j < c; ++j) {
    for (int i = 0; i < k; ++i) m[j][i] = a.at(i, idx[j]);
  }
  int rank = 0;
  for (int col = 0; col < k && rank < c; ++col) {
    int pivot = -1;
    for (int r = rank; r < c; ++r) {
      if (m[r][col] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);
    const PrimeField::Element inv = f.inv(m[rank][col]);
    for (int r = rank + 1; r < c; ++r) {
      if (m[r][col] == 0) continue;
      const PrimeField::Element factor = f.mul(m[r][col], inv);
      for (int i = col; i < k; ++i) m[r][i] = f.sub(m[r][i], f.mul(factor, m[rank][i]));
    }
    ++rank;
  }
  return rank;
}

inline int matrix_rank(const FieldMatrix& a) {
  return matrix_rank(a, GroundSubset::full(a.cols()));
}

}  // namespace lrcm
