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
#include <string>
#include <utility>
#include <vector>

#include "sicd/matrix.hpp"

namespace sicd {

/// Exponent tuple (k_0, k_1, ..., k_{2m-1}) of a displacement operator
/// X^{k_0} Z^{k_1} (x) ... (x) X^{k_{2m-2}} Z^{k_{2m-1}}, together with its
/// linear index sum_i k_i d^{2m-1-i} (k_0 most significant).
class PauliIndex {
 public:
  static PauliIndex from_linear(int d, int factors, std::size_t linear);
  static PauliIndex from_exponents(int d, std::vector<int> exps);
  /// The three-qubit index used by the Hoggar construction.
  static PauliIndex qubits3(std::size_t linear) { return from_linear(2, 3, linear); }

  int d() const noexcept { return d_; }
  int factors() const noexcept { return static_cast<int>(exps_.size() / 2); }
  const std::vector<int>& exps() const noexcept { return exps_; }
  int operator[](std::size_t i) const { return exps_.at(i); }
  std::size_t linear() const noexcept { return linear_; }
  /// Number of indices for this shape, d^{2m}.
  std::size_t count() const;

  /// Entrywise sum mod d.
  PauliIndex operator+(const PauliIndex& o) const;
  bool operator==(const PauliIndex& o) const = default;

  /// "(0,0,0,0,0,1)#1"
  std::string str() const;

 private:
  PauliIndex(int d, std::vector<int> exps);
  int d_ = 2;
  std::vector<int> exps_;
  std::size_t linear_ = 0;
};

/// Shift X|j> = |j+1 mod d> and phase Z|j> = w^j |j>, w = e^{2 pi i/d}.
/// The conductor must be a multiple of d.
std::pair<ExactMatrix, ExactMatrix> shift_phase(int d, int conductor);

/// D_k as an explicit tensor product, without extra phases.
ExactMatrix displacement(const PauliIndex& idx, int conductor);

/// D_k rescaled by i per Y = iXZ factor so that it is Hermitian (qubits only).
/// Throws std::logic_error if the result fails the Hermiticity check.
ExactMatrix hermitize(const PauliIndex& idx, int conductor);

/// Number of qubit factors with both exponents odd.
int y_count(const PauliIndex& idx);

/// Alternating form I_m (x) [[0,-1],[1,0]] as a 2m x 2m integer matrix.
class SymplecticForm {
 public:
  explicit SymplecticForm(int factors);
  int factors() const noexcept { return m_; }
  int operator()(int r, int c) const { return omega_.at(r * 2 * m_ + c); }
  /// k Omega l^T as an integer, not reduced.
  long value(const PauliIndex& k, const PauliIndex& l) const;
  bool is_antisymmetric() const;
  /// Determinant is +-1 for this block form; computed rather than assumed.
  long determinant() const;

 private:
  int m_;
  std::vector<int> omega_;
};

/// k Omega l^T mod 2.
int symplectic_value(const PauliIndex& k, const PauliIndex& l);

/// transpose(D_k) == -D_k, decided on the explicit matrix.
bool is_antisymmetric(const PauliIndex& idx);
/// k_0 k_1 + k_2 k_3 + k_4 k_5 = 1 mod 2.
bool odd_parity(const PauliIndex& idx);
/// Odd number of Y factors.
bool odd_y_count(const PauliIndex& idx);

/// D_k D_l = w * D_{k+l}; returns w (a root of unity) or throws if the
/// product is not a scalar multiple of D_{k+l}.
CycNum displacement_product_phase(const PauliIndex& k, const PauliIndex& l, int conductor);

/// The 64 three-qubit displacement operators over Q(i), built once.
const std::vector<ExactMatrix>& qubit3_displacements();
const std::vector<ExactMatrix>& qubit3_hermitized();

}  // namespace sicd
