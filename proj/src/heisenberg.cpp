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

#include "sicd/heisenberg.hpp"

#include <sstream>
#include <stdexcept>

namespace sicd {

PauliIndex::PauliIndex(int d, std::vector<int> exps) : d_(d), exps_(std::move(exps)) {
  if (d_ < 2) throw std::invalid_argument("PauliIndex: d must be at least 2");
  if (exps_.empty() || exps_.size() % 2 != 0)
    throw std::invalid_argument("PauliIndex: need an even, nonzero number of exponents");
  linear_ = 0;
  for (int& k : exps_) {
    k %= d_;
    if (k < 0) k += d_;
    linear_ = linear_ * static_cast<std::size_t>(d_) + static_cast<std::size_t>(k);
  }
}

PauliIndex PauliIndex::from_linear(int d, int factors, std::size_t linear) {
  if (factors < 1) throw std::invalid_argument("PauliIndex: need at least one factor");
  std::vector<int> exps(2 * factors);
  std::size_t rest = linear;
  for (int i = 2 * factors - 1; i >= 0; --i) {
    exps[i] = static_cast<int>(rest % d);
    rest /= d;
  }
  if (rest != 0) throw std::out_of_range("PauliIndex: linear index out of range");
  return PauliIndex(d, std::move(exps));
}

PauliIndex PauliIndex::from_exponents(int d, std::vector<int> exps) {
  return PauliIndex(d, std::move(exps));
}

std::size_t PauliIndex::count() const {
  std::size_t n = 1;
  for (std::size_t i = 0; i < exps_.size(); ++i) n *= static_cast<std::size_t>(d_);
  return n;
}

PauliIndex PauliIndex::operator+(const PauliIndex& o) const {
  if (d_ != o.d_ || exps_.size() != o.exps_.size())
    throw std::invalid_argument("PauliIndex: shape mismatch");
  std::vector<int> e(exps_.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = exps_[i] + o.exps_[i];
  return PauliIndex(d_, std::move(e));
}

std::string PauliIndex::str() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < exps_.size(); ++i) os << (i ? "," : "") << exps_[i];
  os << ")#" << linear_;
  return os.str();
}

std::pair<ExactMatrix, ExactMatrix> shift_phase(int d, int conductor) {
  if (d < 2) throw std::invalid_argument("shift_phase: d must be at least 2");
  ExactMatrix x(d, d, conductor);
  ExactMatrix z(d, d, conductor);
  for (int j = 0; j < d; ++j) {
    x = x.with((j + 1) % d, j, CycNum(conductor, 1L));
    z = z.with(j, j, CycNum::root_of_unity(conductor, d, j));
  }
  return {x, z};
}

ExactMatrix displacement(const PauliIndex& idx, int conductor) {
  const auto [x, z] = shift_phase(idx.d(), conductor);
  ExactMatrix out = ExactMatrix::identity(1, conductor);
  for (int f = 0; f < idx.factors(); ++f) {
    const ExactMatrix factor = mat_pow(x, idx[2 * f]) * mat_pow(z, idx[2 * f + 1]);
    out = mat_kron(out, factor);
  }
  return out;
}

int y_count(const PauliIndex& idx) {
  if (idx.d() != 2) throw std::invalid_argument("y_count: qubit factors only");
  int n = 0;
  for (int f = 0; f < idx.factors(); ++f) n += idx[2 * f] * idx[2 * f + 1];
  return n;
}

ExactMatrix hermitize(const PauliIndex& idx, int conductor) {
  if (conductor % 4 != 0) throw std::invalid_argument("hermitize: conductor must contain i");
  const int ys = y_count(idx);
  const CycNum phase = CycNum::zeta(conductor, static_cast<long>(ys) * (conductor / 4));
  ExactMatrix h = phase * displacement(idx, conductor);
  if (!h.is_hermitian())
    throw std::logic_error("hermitized displacement " + idx.str() + " is not Hermitian");
  return h;
}

SymplecticForm::SymplecticForm(int factors) : m_(factors), omega_(4 * factors * factors, 0) {
  if (factors < 1) throw std::invalid_argument("SymplecticForm: need at least one factor");
  const int n = 2 * m_;
  for (int f = 0; f < m_; ++f) {
    omega_[(2 * f) * n + 2 * f + 1] = -1;
    omega_[(2 * f + 1) * n + 2 * f] = 1;
  }
}

long SymplecticForm::value(const PauliIndex& k, const PauliIndex& l) const {
  const int n = 2 * m_;
  if (k.factors() != m_ || l.factors() != m_)
    throw std::invalid_argument("SymplecticForm: index shape mismatch");
  long s = 0;
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) s += static_cast<long>(k[r]) * (*this)(r, c) * l[c];
  return s;
}

bool SymplecticForm::is_antisymmetric() const {
  const int n = 2 * m_;
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      if ((*this)(r, c) != -(*this)(c, r)) return false;
  return true;
}

long SymplecticForm::determinant() const {
  const int n = 2 * m_;
  std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(n));
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) a[r][c] = (*this)(r, c);
  mpq_class det = 1;
  for (int c = 0; c < n; ++c) {
    int p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (int r = c + 1; r < n; ++r) {
      const mpq_class f = a[r][c] / a[c][c];
      for (int j = c; j < n; ++j) a[r][j] -= f * a[c][j];
    }
  }
  return det.get_num().get_si();
}

int symplectic_value(const PauliIndex& k, const PauliIndex& l) {
  const long v = SymplecticForm(k.factors()).value(k, l);
  return static_cast<int>(((v % 2) + 2) % 2);
}

bool is_antisymmetric(const PauliIndex& idx) {
  const ExactMatrix dk = displacement(idx, 4);
  return dk.transpose() == -dk;
}

bool odd_parity(const PauliIndex& idx) {
  int s = 0;
  for (int f = 0; f < idx.factors(); ++f) s += idx[2 * f] * idx[2 * f + 1];
  return s % 2 == 1;
}

bool odd_y_count(const PauliIndex& idx) {
  int ys = 0;
  for (int f = 0; f < idx.factors(); ++f)
    if (idx[2 * f] == 1 && idx[2 * f + 1] == 1) ++ys;
  return ys % 2 == 1;
}

CycNum displacement_product_phase(const PauliIndex& k, const PauliIndex& l, int conductor) {
  const ExactMatrix lhs = displacement(k, conductor) * displacement(l, conductor);
  const ExactMatrix rhs = displacement(k + l, conductor);
  // Find a nonzero entry of rhs to read off the ratio.
  CycNum phase(conductor);
  bool found = false;
  for (std::size_t i = 0; i < rhs.rows() && !found; ++i)
    for (std::size_t j = 0; j < rhs.cols() && !found; ++j)
      if (!rhs(i, j).is_zero()) {
        phase = lhs(i, j) / rhs(i, j);
        found = true;
      }
  if (!found || phase * rhs != lhs)
    throw std::logic_error("D_k D_l is not a multiple of D_{k+l} for " + k.str() + ", " + l.str());
  return phase;
}

const std::vector<ExactMatrix>& qubit3_displacements() {
  static const std::vector<ExactMatrix> table = [] {
    std::vector<ExactMatrix> t;
    t.reserve(64);
    for (std::size_t n = 0; n < 64; ++n) t.push_back(displacement(PauliIndex::qubits3(n), 4));
    return t;
  }();
  return table;
}

const std::vector<ExactMatrix>& qubit3_hermitized() {
  static const std::vector<ExactMatrix> table = [] {
    std::vector<ExactMatrix> t;
    t.reserve(64);
    for (std::size_t n = 0; n < 64; ++n) t.push_back(hermitize(PauliIndex::qubits3(n), 4));
    return t;
  }();
  return table;
}

}  // namespace sicd
