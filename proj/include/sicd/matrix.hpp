// Copyright 2026 The sicdesign Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "sicd/cyclo.hpp"

namespace sicd {

/// Dense matrix over Q(zeta_n), row-major. All entries share one conductor.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  /// Zero matrix.
  ExactMatrix(std::size_t rows, std::size_t cols, int conductor);
  /// Takes ownership of row-major entries; all must have the given conductor.
  ExactMatrix(std::size_t rows, std::size_t cols, int conductor, std::vector<CycNum> entries);

  static ExactMatrix identity(std::size_t n, int conductor);
  /// Matrix with integer entries given row by row.
  static ExactMatrix from_integers(int conductor, const std::vector<std::vector<long>>& rows);
  /// Column vector.
  static ExactMatrix column(std::span<const CycNum> v);
  /// |v><v|, not normalized.
  static ExactMatrix outer(std::span<const CycNum> v);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  int conductor() const noexcept { return conductor_; }
  bool square() const noexcept { return rows_ == cols_; }

  const CycNum& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  std::span<const CycNum> entries() const noexcept { return entries_; }

  /// Copy with one entry replaced.
  ExactMatrix with(std::size_t r, std::size_t c, CycNum value) const;

  ExactMatrix dagger() const;
  ExactMatrix transpose() const;
  ExactMatrix conj() const;

  bool is_zero() const;
  bool is_hermitian() const;

  friend ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator-(const ExactMatrix& a);
  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator*(const CycNum& s, const ExactMatrix& a);
  friend ExactMatrix operator*(const mpq_class& s, const ExactMatrix& a);
  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b);
  friend bool operator!=(const ExactMatrix& a, const ExactMatrix& b) { return !(a == b); }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  int conductor_ = 1;
  std::vector<CycNum> entries_;
};

ExactMatrix mat_mul(const ExactMatrix& a, const ExactMatrix& b);
ExactMatrix mat_dagger(const ExactMatrix& a);
CycNum mat_trace(const ExactMatrix& a);
/// tr(a b) without forming the product.
CycNum trace_of_product(const ExactMatrix& a, const ExactMatrix& b);

/// Kronecker product; entry (i1*rows_b + i2, j1*cols_b + j2) = a(i1,j1) b(i2,j2).
ExactMatrix mat_kron(const ExactMatrix& a, const ExactMatrix& b);

/// Rank by fraction-free (Bareiss) elimination.
std::size_t mat_rank(const ExactMatrix& a);

/// True iff prod_r (a - r I) is exactly zero.
bool mat_annihilates(const ExactMatrix& a, std::span<const mpq_class> roots);

/// a^k for square a, k >= 0.
ExactMatrix mat_pow(const ExactMatrix& a, unsigned k);

/// v^dagger a w for column vectors given as spans.
CycNum sesquilinear(std::span<const CycNum> v, const ExactMatrix& a, std::span<const CycNum> w);
/// v^dagger w.
CycNum inner(std::span<const CycNum> v, std::span<const CycNum> w);
/// a v.
std::vector<CycNum> apply(const ExactMatrix& a, std::span<const CycNum> v);

}  // namespace sicd
