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

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "sicd/ensembles.hpp"

namespace sicd {

/// Index triple with j < k < l.
using Triple = std::array<int, 3>;

struct TripleProduct {
  CycNum t;  // tr(Pi_j Pi_k Pi_l)
  CycNum c;  // Re t
};

/// Direct route: explicit matrix products and a trace.
TripleProduct triple_product(const SicEnsemble& e, int j, int k, int l);

/// Triple products of every sorted distinct triple, computed from the
/// ensemble's vector overlaps as <j|k><k|l><l|j> / (N_j N_k N_l).
class TripleTable {
 public:
  static TripleTable build(const SicEnsemble& e, int jobs = 1);

  int n() const noexcept { return n_; }
  int d() const noexcept { return d_; }
  int conductor() const noexcept { return conductor_; }
  std::size_t triple_count() const noexcept { return triples_.size(); }
  const std::vector<Triple>& triples() const noexcept { return triples_; }

  /// Position of the sorted form of (j, k, l) in triples(); indices must be distinct.
  std::size_t rank(int j, int k, int l) const;
  /// T_jkl in the given order (conjugated for odd permutations of the sorted form).
  CycNum complex_value(int j, int k, int l) const;
  /// C_jkl, any order, indices may repeat.
  CycNum value(int j, int k, int l) const;
  const CycNum& sorted_value(std::size_t r) const { return c_[r]; }
  const CycNum& sorted_complex(std::size_t r) const { return t_[r]; }
  /// tr(Pi_j Pi_k).
  const CycNum& pair(int j, int k) const { return pair_[static_cast<std::size_t>(j) * n_ + k]; }

  /// True iff every C_jkl and pair value is rational.
  bool rational() const noexcept { return rational_; }
  const std::vector<mpq_class>& rational_values() const { return c_rational_; }
  const std::vector<mpq_class>& rational_pairs() const { return pair_rational_; }

 private:
  int n_ = 0;
  int d_ = 0;
  int conductor_ = 1;
  std::vector<Triple> triples_;
  std::vector<std::size_t> offset_;  // offset_[j*n + k] = rank of (j, k, k+1)
  std::vector<CycNum> t_;
  std::vector<CycNum> c_;
  std::vector<CycNum> pair_;
  bool rational_ = false;
  std::vector<mpq_class> c_rational_;
  std::vector<mpq_class> pair_rational_;
};

/// Partition of the sorted distinct triples of the Hoggar SIC by the value
/// of C_jkl: +1/27, -1/27 and 0.
struct TripleClass {
  int n = 64;
  std::vector<Triple> s_plus;
  std::vector<Triple> s_minus;
  std::vector<Triple> s_zero;
};

/// Throws InvariantViolation naming the first triple whose value is not
/// one of 0, +-1/27, or if the table is not a d = 8 table.
TripleClass classify(const TripleTable& table);

/// Number of triples containing each point.
std::vector<long> point_counts(const std::vector<Triple>& triples, int n);
/// Number of triples containing each unordered pair; n x n, symmetric, zero diagonal.
std::vector<long> pair_counts(const std::vector<Triple>& triples, int n);

/// Membership set for sorted triples over n vertices.
class TripleSet {
 public:
  TripleSet(int n, const std::vector<Triple>& triples);
  int n() const noexcept { return n_; }
  std::size_t size() const noexcept { return size_; }
  /// Order-insensitive; false when indices repeat.
  bool contains(int a, int b, int c) const;

 private:
  int n_;
  std::size_t size_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// Two-graph axiom, checked literally on every 4-subset {p,q,r,s}: for each
/// choice of p, (pqr),(pqs),(prs) in t implies (qrs) in t, and likewise for
/// the complement of t.
bool two_graph_check(const TripleSet& t);
/// Number of 4-subsets violating the axiom.
std::size_t two_graph_violations(const TripleSet& t);

/// C_{0,1,k} for all 64 k, arranged by sigma index s_f = 2 k_{2f} + k_{2f+1}
/// of each qubit, sigma = {I, Z, X, XZ}. Position (s1, s2, s3) is k = 16 s1 + 4 s2 + s3.
struct C01Cube {
  std::array<mpq_class, 64> values;
  const mpq_class& at(int s1, int s2, int s3) const { return values[16 * s1 + 4 * s2 + s3]; }
  /// Counts keyed by rational string: "1/9", "1/27", "-1/27", "0".
  std::map<std::string, int> histogram() const;
  /// Four 4x4 slices (one per s1) using R for 1/9, + for 1/27, - for -1/27, 0 for 0.
  std::string text_art() const;
};
C01Cube cube_c01(const TripleTable& hoggar);

/// Sign of the real number <psi_0| Dhat_k |psi_0>; throws InvariantViolation
/// if the expectation is not exactly real or vanishes.
int phase_sign_after_hermitize(const SicEnsemble& e, std::size_t k);

/// Number of l in [0, 64) for which C_{0,1,l} == 0 exactly when the
/// symplectic exponent f((0,0,0,0,0,1), l) is odd. 64 means full agreement.
int symplectic_vanishing_agreement(const C01Cube& cube);

/// Seidel adjacency matrix: symmetric, zero diagonal, +-1 off the diagonal.
class SeidelMatrix {
 public:
  explicit SeidelMatrix(int n);
  int n() const noexcept { return n_; }
  int operator()(int u, int w) const { return a_[static_cast<std::size_t>(u) * n_ + w]; }
  void set(int u, int w, int value);
  bool well_formed() const;
  ExactMatrix to_exact(int conductor = 1) const;

 private:
  int n_;
  std::vector<int> a_;
};

/// Descendant graph at v: u ~ w iff (u v w) in t; A = -1 on edges, +1 on
/// non-edges, 0 on the diagonal.
SeidelMatrix descendant_seidel(const TripleSet& t, int v);

/// M = I - A / lambda.
ExactMatrix gram_from_seidel(const SeidelMatrix& a, const mpq_class& lambda);

}  // namespace sicd
