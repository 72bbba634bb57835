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

#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "sicd/triples.hpp"

namespace sicd {

/// p^(n^2 + 2n) prod_{j=1..n} (p^(2j) - 1).
mpz_class clifford_order(unsigned long p, unsigned long n);

/// Prime factorization by trial division, prime -> exponent.
std::map<unsigned long, unsigned long> factorize(mpz_class x);
/// "2^15 * 3^4 * 5 * 7".
std::string factorization_string(const mpz_class& x);

struct OrderReport {
  mpz_class clifford_order;
  mpz_class hoggar_symmetry_order;
  mpz_class stabilizer_order;
  /// One line per identity checked, "lhs = rhs".
  std::vector<std::string> identities;
};

/// Checks the Clifford and symmetry-group order identities against the
/// set sizes and pair counts of the classification. Throws
/// InvariantViolation quoting both sides of the first failure.
OrderReport order_identities(const TripleClass& cls);

}  // namespace sicd
