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

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace sicd {

/// Largest conductor for which a field context is available.
inline constexpr int kMaxConductor = 24;

class ConductorMismatch : public std::invalid_argument {
 public:
  ConductorMismatch(int a, int b);
};

/// Exact element of the cyclotomic field Q(zeta_n).
///
/// Stored in the power basis 1, zeta, ..., zeta^(phi(n)-1) of Q[x]/Phi_n(x)
/// with arbitrary-precision rational coordinates. Values are immutable;
/// every operation returns a fresh value. Binary operations require equal
/// conductors; use embed() to move a value into a larger field.
class CycNum {
 public:
  /// Zero of Q (conductor 1).
  CycNum();
  /// Zero of Q(zeta_n).
  explicit CycNum(int conductor);
  CycNum(int conductor, mpq_class value);
  CycNum(int conductor, long value) : CycNum(conductor, mpq_class(value)) {}

  /// Builds sum_k c_k zeta^k; the input may be longer than phi(n) and is
  /// reduced modulo Phi_n.
  static CycNum from_powers(int conductor, std::span<const mpq_class> c);
  static CycNum from_powers(int conductor, std::initializer_list<long> c);
  /// zeta_n^power, any integer power.
  static CycNum zeta(int conductor, long power = 1);
  /// Primitive d-th root of unity e^(2 pi i / d) inside Q(zeta_n); needs d | n.
  static CycNum root_of_unity(int conductor, int d, long power = 1);
  /// The imaginary unit; needs 4 | n.
  static CycNum i(int conductor);
  /// sqrt(3) as zeta_12 + zeta_12^-1; needs 12 | n.
  static CycNum sqrt3(int conductor);

  int conductor() const noexcept { return conductor_; }
  /// Power-basis coordinates; length is always phi(conductor).
  std::span<const mpq_class> coeffs() const noexcept { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  /// Throws std::domain_error unless is_rational().
  const mpq_class& rational() const;
  /// True iff the value is fixed by complex conjugation.
  bool is_real() const;

  /// Complex conjugation, the automorphism zeta -> zeta^-1.
  CycNum conj() const;
  /// (a + conj(a)) / 2.
  CycNum real_part() const;
  /// (a - conj(a)) / 2i, returned as a real element. Needs 4 | n.
  CycNum imag_part() const;
  CycNum inverse() const;
  /// Image under Q(zeta_n) -> Q(zeta_m), zeta_n -> zeta_m^(m/n); needs n | m.
  CycNum embed(int conductor) const;

  /// Evaluation at zeta_n = e^(2 pi i / n) in long double. For the
  /// coefficient sizes used in this project the relative error stays
  /// below 2^-60.
  std::complex<long double> to_complex() const;
  long double to_real() const { return to_complex().real(); }

  /// Human-readable form, e.g. "1/2 - 3*z^2" (z = zeta_n).
  std::string str() const;

  CycNum operator-() const;
  CycNum& operator+=(const CycNum& o);
  CycNum& operator-=(const CycNum& o);
  CycNum& operator*=(const CycNum& o);
  CycNum& operator/=(const CycNum& o);
  CycNum& operator*=(const mpq_class& q);

  friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
  friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
  friend CycNum operator*(const CycNum& a, const CycNum& b);
  friend CycNum operator/(CycNum a, const CycNum& b) { return a /= b; }
  friend CycNum operator*(CycNum a, const mpq_class& q) { return a *= q; }
  friend CycNum operator*(const mpq_class& q, CycNum a) { return a *= q; }

  friend bool operator==(const CycNum& a, const CycNum& b);
  friend bool operator!=(const CycNum& a, const CycNum& b) { return !(a == b); }

 private:
  int conductor_;
  std::vector<mpq_class> coeffs_;
  void require_same(const CycNum& o) const;
};

/// Euler phi.
int euler_phi(int n);

/// Integer coefficients of the n-th cyclotomic polynomial, lowest degree first.
std::vector<long> cyclotomic_polynomial(int n);

/// Sign of a real field element: -1, 0 or +1.
///
/// Decided from the long double value; when its magnitude is below 2^-40
/// the decision escalates to an exact zero test. Throws std::domain_error
/// if the value is not real.
int real_sign(const CycNum& a);

/// a < b for real elements, using real_sign(a - b).
inline bool real_less(const CycNum& a, const CycNum& b) { return real_sign(a - b) < 0; }

std::string to_string(const mpq_class& q);

}  // namespace sicd
