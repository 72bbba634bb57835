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

#include "sicd/grouparith.hpp"

#include <sstream>
#include <stdexcept>

namespace sicd {
namespace {

void require(std::vector<std::string>& log, const std::string& name, const mpz_class& lhs,
             const mpz_class& rhs) {
  const std::string line = name + ": " + lhs.get_str() + " = " + rhs.get_str();
  if (lhs != rhs) throw InvariantViolation("order identity failed, " + name + ": " + lhs.get_str() +
                                           " != " + rhs.get_str());
  log.push_back(line);
}

long constant_pair_count(const std::vector<Triple>& triples, int n) {
  const auto c = pair_counts(triples, n);
  const long first = c.at(1);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (c[static_cast<std::size_t>(a) * n + b] != first)
        throw InvariantViolation("pair count is not constant");
  return first;
}

}  // namespace

mpz_class clifford_order(unsigned long p, unsigned long n) {
  if (p < 2 || n < 1) throw std::invalid_argument("clifford_order: need p >= 2, n >= 1");
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), p, n * n + 2 * n);
  for (unsigned long j = 1; j <= n; ++j) {
    mpz_class t;
    mpz_ui_pow_ui(t.get_mpz_t(), p, 2 * j);
    r *= t - 1;
  }
  return r;
}

std::map<unsigned long, unsigned long> factorize(mpz_class x) {
  if (x <= 0) throw std::invalid_argument("factorize: need a positive integer");
  std::map<unsigned long, unsigned long> f;
  for (unsigned long p = 2; mpz_class(p) * p <= x; ++p)
    while (mpz_divisible_ui_p(x.get_mpz_t(), p)) {
      ++f[p];
      x /= p;
    }
  if (x > 1) {
    if (!x.fits_ulong_p()) throw std::overflow_error("factorize: cofactor too large");
    ++f[x.get_ui()];
  }
  return f;
}

std::string factorization_string(const mpz_class& x) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [p, e] : factorize(x)) {
    os << (first ? "" : " * ") << p;
    if (e > 1) os << "^" << e;
    first = false;
  }
  return os.str();
}

OrderReport order_identities(const TripleClass& cls) {
  OrderReport r;
  const mpz_class plus(static_cast<unsigned long>(cls.s_plus.size()));
  const mpz_class minus(static_cast<unsigned long>(cls.s_minus.size()));
  const mpz_class v(cls.n);
  r.clifford_order = clifford_order(2, 3);
  r.stabilizer_order = 6048;
  r.hoggar_symmetry_order = 64 * r.stabilizer_order;

  require(r.identities, "clifford(2,3) = 2^15 * 3 * 15 * 63", r.clifford_order,
          mpz_class(32768) * 3 * 15 * 63);
  require(r.identities, "clifford(2,3) = 2^15 * 3^4 * 5 * 7", r.clifford_order,
          mpz_class(32768) * 81 * 5 * 7);
  require(r.identities, "clifford(2,3) = 2^9 * 3^2 * (|S+| + |S-|)", r.clifford_order,
          mpz_class(512) * 9 * (plus + minus));
  require(r.identities, "64 * 6048 = 2^11 * 3^3 * 7", r.hoggar_symmetry_order, mpz_class(2048) * 27 * 7);
  require(r.identities, "symmetry order = 24 |S+|", r.hoggar_symmetry_order, 24 * plus);
  require(r.identities, "symmetry order = 96 |S-|", r.hoggar_symmetry_order, 96 * minus);

  const mpz_class lp(constant_pair_count(cls.s_plus, cls.n));
  const mpz_class lm(constant_pair_count(cls.s_minus, cls.n));
  require(r.identities, "b+ = 672 lambda+", plus, 672 * lp);
  require(r.identities, "b- = 672 lambda-", minus, 672 * lm);
  require(r.identities, "4 lambda- b+ = 6048 v", 4 * lm * plus, r.stabilizer_order * v);
  require(r.identities, "4 lambda+ b- = 6048 v", 4 * lp * minus, r.stabilizer_order * v);
  require(r.identities, "lambda- lambda+ = 6048 v / (4 * 672)", lm * lp * 4 * 672, r.stabilizer_order * v);
  return r;
}

}  // namespace sicd
