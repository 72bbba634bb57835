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

#include "sicd/cyclo.hpp"

#include <array>
#include <cmath>
#include <memory>
#include <numbers>
#include <sstream>

namespace sicd {
namespace {

struct FieldContext {
  int n = 0;
  int phi = 0;
  // pow_red[k] holds x^k mod Phi_n for 0 <= k < max(n, 2 phi - 1).
  std::vector<std::vector<long>> pow_red;
};

// Exact division by a monic polynomial.
std::vector<long> poly_div_exact(std::vector<long> num, const std::vector<long>& den) {
  const std::size_t dn = den.size() - 1;
  std::vector<long> q(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    const long c = num[i];
    q[i - dn] = c;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  for (std::size_t i = 0; i < dn; ++i)
    if (num[i] != 0) throw std::logic_error("cyclotomic division not exact");
  return q;
}

FieldContext build_context(int n) {
  FieldContext ctx;
  ctx.n = n;
  const auto phi_poly = cyclotomic_polynomial(n);
  ctx.phi = static_cast<int>(phi_poly.size()) - 1;
  const int len = std::max(n, 2 * ctx.phi - 1);
  ctx.pow_red.assign(len, std::vector<long>(ctx.phi, 0));
  std::vector<long> cur(ctx.phi, 0);
  cur[0] = 1;
  for (int k = 0; k < len; ++k) {
    ctx.pow_red[k] = cur;
    // multiply by x and reduce: x^phi = -sum_{i<phi} Phi_i x^i
    const long top = cur[ctx.phi - 1];
    for (int i = ctx.phi - 1; i > 0; --i) cur[i] = cur[i - 1] - top * phi_poly[i];
    cur[0] = -top * phi_poly[0];
  }
  return ctx;
}

const FieldContext& context(int n) {
  if (n < 1 || n > kMaxConductor)
    throw std::invalid_argument("unsupported conductor " + std::to_string(n));
  static const auto table = [] {
    std::array<FieldContext, kMaxConductor + 1> t{};
    for (int m = 1; m <= kMaxConductor; ++m) t[m] = build_context(m);
    return t;
  }();
  return table[n];
}

long double to_long_double(const mpq_class& q) {
  if (q == 0) return 0.0L;
  const mpz_class& num = q.get_num();
  const mpz_class& den = q.get_den();
  const long shift = 64 - static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 2)) +
                     static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 2));
  mpz_class scaled = abs(num);
  if (shift >= 0)
    scaled <<= static_cast<mp_bitcnt_t>(shift);
  else
    scaled >>= static_cast<mp_bitcnt_t>(-shift);
  mpz_class t = scaled / den;
  long double mag = 0.0L;
  // t < 2^66; split into two halves so nothing is lost in conversion.
  const mpz_class hi = t >> 32;
  const mpz_class lo = t - (hi << 32);
  mag = std::ldexp(static_cast<long double>(hi.get_ui()), 32) +
        static_cast<long double>(lo.get_ui());
  mag = std::ldexp(mag, static_cast<int>(-shift));
  return sgn(num) < 0 ? -mag : mag;
}

}  // namespace

ConductorMismatch::ConductorMismatch(int a, int b)
    : std::invalid_argument("conductor mismatch: " + std::to_string(a) + " vs " +
                            std::to_string(b)) {}

int euler_phi(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

std::vector<long> cyclotomic_polynomial(int n) {
  if (n < 1) throw std::invalid_argument("cyclotomic_polynomial: n must be positive");
  // x^n - 1 divided by Phi_d for every proper divisor d of n.
  std::vector<long> num(n + 1, 0);
  num[0] = -1;
  num[n] = 1;
  for (int d = 1; d < n; ++d)
    if (n % d == 0) num = poly_div_exact(num, cyclotomic_polynomial(d));
  return num;
}

CycNum::CycNum() : CycNum(1) {}

CycNum::CycNum(int conductor) : conductor_(conductor) {
  coeffs_.assign(context(conductor).phi, mpq_class(0));
}

CycNum::CycNum(int conductor, mpq_class value) : CycNum(conductor) {
  coeffs_[0] = std::move(value);
  coeffs_[0].canonicalize();
}

CycNum CycNum::from_powers(int conductor, std::span<const mpq_class> c) {
  const auto& ctx = context(conductor);
  CycNum r(conductor);
  for (std::size_t k = 0; k < c.size(); ++k) {
    mpq_class ck = c[k];
    ck.canonicalize();
    if (ck == 0) continue;
    const auto& red = ctx.pow_red[k % static_cast<std::size_t>(ctx.n)];
    for (int i = 0; i < ctx.phi; ++i)
      if (red[i] != 0) r.coeffs_[i] += ck * red[i];
  }
  return r;
}

CycNum CycNum::from_powers(int conductor, std::initializer_list<long> c) {
  std::vector<mpq_class> q(c.begin(), c.end());
  return from_powers(conductor, q);
}

CycNum CycNum::zeta(int conductor, long power) {
  const auto& ctx = context(conductor);
  long p = power % conductor;
  if (p < 0) p += conductor;
  CycNum r(conductor);
  for (int i = 0; i < ctx.phi; ++i) r.coeffs_[i] = ctx.pow_red[p][i];
  return r;
}

CycNum CycNum::root_of_unity(int conductor, int d, long power) {
  if (d < 1 || conductor % d != 0)
    throw std::invalid_argument("root_of_unity: order " + std::to_string(d) +
                                " does not divide conductor " + std::to_string(conductor));
  return zeta(conductor, power * (conductor / d));
}

CycNum CycNum::i(int conductor) { return root_of_unity(conductor, 4); }

CycNum CycNum::sqrt3(int conductor) {
  if (conductor % 12 != 0) throw std::invalid_argument("sqrt3 needs 12 | conductor");
  return zeta(conductor, conductor / 12) + zeta(conductor, -conductor / 12);
}

bool CycNum::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool CycNum::is_one() const { return coeffs_[0] == 1 && is_rational(); }

bool CycNum::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

const mpq_class& CycNum::rational() const {
  if (!is_rational()) throw std::domain_error("value is not rational: " + str());
  return coeffs_[0];
}

bool CycNum::is_real() const { return conj() == *this; }

CycNum CycNum::conj() const {
  const auto& ctx = context(conductor_);
  CycNum r(conductor_);
  for (int k = 0; k < ctx.phi; ++k) {
    if (coeffs_[k] == 0) continue;
    const auto& red = ctx.pow_red[(ctx.n - k) % ctx.n];
    for (int i = 0; i < ctx.phi; ++i)
      if (red[i] != 0) r.coeffs_[i] += coeffs_[k] * red[i];
  }
  return r;
}

CycNum CycNum::real_part() const {
  CycNum r = *this + conj();
  r *= mpq_class(1, 2);
  return r;
}

CycNum CycNum::imag_part() const {
  CycNum diff = *this - conj();
  CycNum r = diff * (-CycNum::i(conductor_));
  r *= mpq_class(1, 2);
  return r;
}

CycNum CycNum::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero in Q(zeta_" +
                                         std::to_string(conductor_) + ")");
  const int phi = static_cast<int>(coeffs_.size());
  // Solve (multiplication-by-this) * x = 1 over Q.
  std::vector<std::vector<mpq_class>> m(phi, std::vector<mpq_class>(phi + 1));
  for (int j = 0; j < phi; ++j) {
    CycNum col = *this * CycNum::zeta(conductor_, j);
    for (int i = 0; i < phi; ++i) m[i][j] = col.coeffs_[i];
  }
  m[0][phi] = 1;
  for (int c = 0; c < phi; ++c) {
    int piv = c;
    while (m[piv][c] == 0) ++piv;
    std::swap(m[piv], m[c]);
    const mpq_class inv = 1 / m[c][c];
    for (int j = c; j <= phi; ++j) m[c][j] *= inv;
    for (int r = 0; r < phi; ++r) {
      if (r == c || m[r][c] == 0) continue;
      const mpq_class f = m[r][c];
      for (int j = c; j <= phi; ++j) m[r][j] -= f * m[c][j];
    }
  }
  CycNum r(conductor_);
  for (int i = 0; i < phi; ++i) r.coeffs_[i] = m[i][phi];
  return r;
}

CycNum CycNum::embed(int conductor) const {
  if (conductor % conductor_ != 0)
    throw std::invalid_argument("cannot embed Q(zeta_" + std::to_string(conductor_) +
                                ") into Q(zeta_" + std::to_string(conductor) + ")");
  const long step = conductor / conductor_;
  std::vector<mpq_class> powers(static_cast<std::size_t>(step) * coeffs_.size());
  for (std::size_t k = 0; k < coeffs_.size(); ++k) powers[k * step] = coeffs_[k];
  return from_powers(conductor, powers);
}

std::complex<long double> CycNum::to_complex() const {
  const long double two_pi = 2.0L * std::numbers::pi_v<long double>;
  long double re = 0.0L, im = 0.0L;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] == 0) continue;
    const long double c = to_long_double(coeffs_[k]);
    const long double theta = two_pi * static_cast<long double>(k) / conductor_;
    re += c * std::cos(theta);
    im += c * std::sin(theta);
  }
  return {re, im};
}

std::string CycNum::str() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const mpq_class& c = coeffs_[k];
    if (c == 0) continue;
    mpq_class mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << mag.get_str();
    } else {
      if (mag != 1) os << mag.get_str() << "*";
      os << "z";
      if (k > 1) os << "^" << k;
    }
  }
  if (first) os << "0";
  return os.str();
}

void CycNum::require_same(const CycNum& o) const {
  if (conductor_ != o.conductor_) throw ConductorMismatch(conductor_, o.conductor_);
}

CycNum CycNum::operator-() const {
  CycNum r(*this);
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

CycNum& CycNum::operator+=(const CycNum& o) {
  require_same(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

CycNum& CycNum::operator-=(const CycNum& o) {
  require_same(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

CycNum operator*(const CycNum& a, const CycNum& b) {
  a.require_same(b);
  const auto& ctx = context(a.conductor_);
  const int phi = ctx.phi;
  CycNum r(a.conductor_);
  if (phi == 1) {
    r.coeffs_[0] = a.coeffs_[0] * b.coeffs_[0];
    return r;
  }
  std::vector<mpq_class> prod(2 * phi - 1);
  for (int i = 0; i < phi; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (int j = 0; j < phi; ++j)
      if (b.coeffs_[j] != 0) prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  for (int k = 0; k < phi; ++k) r.coeffs_[k] = std::move(prod[k]);
  for (int k = phi; k < 2 * phi - 1; ++k) {
    if (prod[k] == 0) continue;
    const auto& red = ctx.pow_red[k];
    for (int i = 0; i < phi; ++i)
      if (red[i] != 0) r.coeffs_[i] += prod[k] * red[i];
  }
  return r;
}

CycNum& CycNum::operator*=(const CycNum& o) {
  *this = *this * o;
  return *this;
}

CycNum& CycNum::operator/=(const CycNum& o) {
  require_same(o);
  if (o.is_rational()) {
    if (o.coeffs_[0] == 0)
      throw std::domain_error("division by zero in Q(zeta_" + std::to_string(conductor_) + ")");
    const mpq_class inv = 1 / o.coeffs_[0];
    return *this *= inv;
  }
  return *this = *this * o.inverse();
}

CycNum& CycNum::operator*=(const mpq_class& q) {
  mpq_class s = q;
  s.canonicalize();
  for (auto& c : coeffs_) c *= s;
  return *this;
}

bool operator==(const CycNum& a, const CycNum& b) {
  a.require_same(b);
  return a.coeffs_ == b.coeffs_;
}

int real_sign(const CycNum& a) {
  if (!a.is_real()) throw std::domain_error("real_sign on non-real value " + a.str());
  const long double v = a.to_real();
  if (std::fabs(v) >= std::ldexp(1.0L, -40)) return v > 0 ? 1 : -1;
  if (a.is_zero()) return 0;
  if (v != 0.0L) return v > 0 ? 1 : -1;
  throw std::runtime_error("cannot resolve sign of " + a.str());
}

std::string to_string(const mpq_class& q) { return q.get_str(); }

}  // namespace sicd
