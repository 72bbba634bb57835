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

#include "sicd/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace sicd {
namespace {

void require_conductor(int a, int b) {
  if (a != b) throw ConductorMismatch(a, b);
}

void require_shape(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(std::string("dimension mismatch in ") + what);
}

}  // namespace

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols, int conductor)
    : rows_(rows), cols_(cols), conductor_(conductor), entries_(rows * cols, CycNum(conductor)) {}

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols, int conductor,
                         std::vector<CycNum> entries)
    : rows_(rows), cols_(cols), conductor_(conductor), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols)
    throw std::invalid_argument("ExactMatrix: entry count does not match shape");
  for (const auto& e : entries_) require_conductor(e.conductor(), conductor_);
}

ExactMatrix ExactMatrix::identity(std::size_t n, int conductor) {
  ExactMatrix m(n, n, conductor);
  for (std::size_t i = 0; i < n; ++i) m.entries_[i * n + i] = CycNum(conductor, 1L);
  return m;
}

ExactMatrix ExactMatrix::from_integers(int conductor, const std::vector<std::vector<long>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.front().size();
  std::vector<CycNum> e;
  e.reserve(r * c);
  for (const auto& row : rows) {
    if (row.size() != c) throw std::invalid_argument("from_integers: ragged rows");
    for (long v : row) e.emplace_back(conductor, v);
  }
  return ExactMatrix(r, c, conductor, std::move(e));
}

ExactMatrix ExactMatrix::column(std::span<const CycNum> v) {
  if (v.empty()) throw std::invalid_argument("column: empty vector");
  return ExactMatrix(v.size(), 1, v.front().conductor(), std::vector<CycNum>(v.begin(), v.end()));
}

ExactMatrix ExactMatrix::outer(std::span<const CycNum> v) {
  if (v.empty()) throw std::invalid_argument("outer: empty vector");
  const std::size_t n = v.size();
  const int cond = v.front().conductor();
  std::vector<CycNum> e;
  e.reserve(n * n);
  std::vector<CycNum> vc;
  vc.reserve(n);
  for (const auto& x : v) vc.push_back(x.conj());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) e.push_back(v[i] * vc[j]);
  return ExactMatrix(n, n, cond, std::move(e));
}

ExactMatrix ExactMatrix::with(std::size_t r, std::size_t c, CycNum value) const {
  require_conductor(value.conductor(), conductor_);
  ExactMatrix m(*this);
  m.entries_.at(r * cols_ + c) = std::move(value);
  return m;
}

ExactMatrix ExactMatrix::dagger() const {
  ExactMatrix m(cols_, rows_, conductor_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m.entries_[j * rows_ + i] = (*this)(i, j).conj();
  return m;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix m(cols_, rows_, conductor_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m.entries_[j * rows_ + i] = (*this)(i, j);
  return m;
}

ExactMatrix ExactMatrix::conj() const {
  ExactMatrix m(*this);
  for (auto& e : m.entries_) e = e.conj();
  return m;
}

bool ExactMatrix::is_zero() const {
  for (const auto& e : entries_)
    if (!e.is_zero()) return false;
  return true;
}

bool ExactMatrix::is_hermitian() const {
  if (!square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i).conj()) return false;
  return true;
}

ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b) {
  require_conductor(a.conductor_, b.conductor_);
  require_shape(a.rows_ == b.rows_ && a.cols_ == b.cols_, "addition");
  ExactMatrix m(a);
  for (std::size_t i = 0; i < m.entries_.size(); ++i) m.entries_[i] += b.entries_[i];
  return m;
}

ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b) {
  require_conductor(a.conductor_, b.conductor_);
  require_shape(a.rows_ == b.rows_ && a.cols_ == b.cols_, "subtraction");
  ExactMatrix m(a);
  for (std::size_t i = 0; i < m.entries_.size(); ++i) m.entries_[i] -= b.entries_[i];
  return m;
}

ExactMatrix operator-(const ExactMatrix& a) {
  ExactMatrix m(a);
  for (auto& e : m.entries_) e = -e;
  return m;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  require_conductor(a.conductor_, b.conductor_);
  require_shape(a.cols_ == b.rows_, "multiplication");
  ExactMatrix m(a.rows_, b.cols_, a.conductor_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const CycNum& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const CycNum& bkj = b(k, j);
        if (bkj.is_zero()) continue;
        m.entries_[i * b.cols_ + j] += aik * bkj;
      }
    }
  }
  return m;
}

ExactMatrix operator*(const CycNum& s, const ExactMatrix& a) {
  require_conductor(s.conductor(), a.conductor_);
  ExactMatrix m(a);
  for (auto& e : m.entries_) e = s * e;
  return m;
}

ExactMatrix operator*(const mpq_class& s, const ExactMatrix& a) {
  ExactMatrix m(a);
  for (auto& e : m.entries_) e *= s;
  return m;
}

bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
  require_conductor(a.conductor_, b.conductor_);
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

ExactMatrix mat_mul(const ExactMatrix& a, const ExactMatrix& b) { return a * b; }

ExactMatrix mat_dagger(const ExactMatrix& a) { return a.dagger(); }

CycNum mat_trace(const ExactMatrix& a) {
  if (!a.square()) throw std::invalid_argument("trace of a non-square matrix");
  CycNum t(a.conductor());
  for (std::size_t i = 0; i < a.rows(); ++i) t += a(i, i);
  return t;
}

CycNum trace_of_product(const ExactMatrix& a, const ExactMatrix& b) {
  require_conductor(a.conductor(), b.conductor());
  require_shape(a.cols() == b.rows() && a.rows() == b.cols(), "trace_of_product");
  CycNum t(a.conductor());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k).is_zero() || b(k, i).is_zero()) continue;
      t += a(i, k) * b(k, i);
    }
  return t;
}

ExactMatrix mat_kron(const ExactMatrix& a, const ExactMatrix& b) {
  require_conductor(a.conductor(), b.conductor());
  const std::size_t rows = a.rows() * b.rows();
  const std::size_t cols = a.cols() * b.cols();
  std::vector<CycNum> e(rows * cols, CycNum(a.conductor()));
  for (std::size_t i1 = 0; i1 < a.rows(); ++i1)
    for (std::size_t j1 = 0; j1 < a.cols(); ++j1) {
      const CycNum& x = a(i1, j1);
      if (x.is_zero()) continue;
      for (std::size_t i2 = 0; i2 < b.rows(); ++i2)
        for (std::size_t j2 = 0; j2 < b.cols(); ++j2)
          e[(i1 * b.rows() + i2) * cols + (j1 * b.cols() + j2)] = x * b(i2, j2);
    }
  return ExactMatrix(rows, cols, a.conductor(), std::move(e));
}

std::size_t mat_rank(const ExactMatrix& a) {
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::vector<CycNum> m(a.entries().begin(), a.entries().end());
  auto at = [&](std::size_t r, std::size_t c) -> CycNum& { return m[r * cols + c]; };
  CycNum prev(a.conductor(), 1L);
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && at(piv, c).is_zero()) ++piv;
    if (piv == rows) continue;
    if (piv != rank)
      for (std::size_t j = 0; j < cols; ++j) std::swap(at(piv, j), at(rank, j));
    const CycNum pivot = at(rank, c);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      const CycNum f = at(r, c);
      for (std::size_t j = c + 1; j < cols; ++j) {
        CycNum v = pivot * at(r, j);
        if (!f.is_zero()) v -= f * at(rank, j);
        v /= prev;
        at(r, j) = std::move(v);
      }
      at(r, c) = CycNum(a.conductor());
    }
    prev = pivot;
    ++rank;
  }
  return rank;
}

bool mat_annihilates(const ExactMatrix& a, std::span<const mpq_class> roots) {
  if (!a.square()) throw std::invalid_argument("mat_annihilates: non-square matrix");
  const std::size_t n = a.rows();
  ExactMatrix prod = ExactMatrix::identity(n, a.conductor());
  for (const auto& r : roots) {
    const ExactMatrix shifted = a - r * ExactMatrix::identity(n, a.conductor());
    prod = prod * shifted;
  }
  return prod.is_zero();
}

ExactMatrix mat_pow(const ExactMatrix& a, unsigned k) {
  if (!a.square()) throw std::invalid_argument("mat_pow: non-square matrix");
  ExactMatrix r = ExactMatrix::identity(a.rows(), a.conductor());
  for (unsigned i = 0; i < k; ++i) r = r * a;
  return r;
}

CycNum inner(std::span<const CycNum> v, std::span<const CycNum> w) {
  require_shape(v.size() == w.size(), "inner");
  CycNum s(v.front().conductor());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero() || w[i].is_zero()) continue;
    s += v[i].conj() * w[i];
  }
  return s;
}

std::vector<CycNum> apply(const ExactMatrix& a, std::span<const CycNum> v) {
  require_shape(a.cols() == v.size(), "apply");
  std::vector<CycNum> out(a.rows(), CycNum(a.conductor()));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero() || v[j].is_zero()) continue;
      out[i] += a(i, j) * v[j];
    }
  return out;
}

CycNum sesquilinear(std::span<const CycNum> v, const ExactMatrix& a, std::span<const CycNum> w) {
  const auto aw = apply(a, w);
  return inner(v, aw);
}

}  // namespace sicd
