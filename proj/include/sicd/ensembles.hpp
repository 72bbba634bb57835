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
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sicd/heisenberg.hpp"
#include "sicd/matrix.hpp"

namespace sicd {

enum class EnsembleLabel { kTetrahedron, kTetrahedronDual, kHesse, kHoggar, kHoggarTwin };

std::string_view label_name(EnsembleLabel label);
std::optional<EnsembleLabel> parse_label(std::string_view name);
inline constexpr std::array<EnsembleLabel, 5> kAllLabels = {
    EnsembleLabel::kTetrahedron, EnsembleLabel::kTetrahedronDual, EnsembleLabel::kHesse,
    EnsembleLabel::kHoggar, EnsembleLabel::kHoggarTwin};

/// Raised when a constructed ensemble breaks one of its defining identities.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// d^2 rank-1 projectors Pi_j = D_j |psi_0><psi_0| D_j^dagger / <psi_0|psi_0>,
/// ordered by the linear index j of the displacement D_j.
///
/// The constructor verifies idempotence, Hermiticity, unit trace, the
/// resolution of the identity sum_j Pi_j / d = I and the overlap law
/// tr(Pi_j Pi_k) = (d delta_jk + 1)/(d + 1), all exactly, and throws
/// InvariantViolation naming the identity that failed.
class SicEnsemble {
 public:
  /// `factor_dim` is the dimension of one tensor factor; d = factor_dim^factors.
  SicEnsemble(EnsembleLabel label, int factor_dim, int factors, int conductor,
              std::vector<CycNum> fiducial);

  EnsembleLabel label() const noexcept { return label_; }
  int d() const noexcept { return d_; }
  int conductor() const noexcept { return conductor_; }
  std::size_t size() const noexcept { return projectors_.size(); }
  /// Unnormalized fiducial vector.
  const std::vector<CycNum>& fiducial() const noexcept { return fiducial_; }
  /// Unnormalized vectors D_j |psi_0>.
  const std::vector<std::vector<CycNum>>& vectors() const noexcept { return vectors_; }
  /// <psi_j|psi_j>.
  const CycNum& norm(std::size_t j) const { return norms_.at(j); }
  const std::vector<ExactMatrix>& projectors() const noexcept { return projectors_; }
  const ExactMatrix& projector(std::size_t j) const { return projectors_.at(j); }
  /// <psi_j|psi_k> for the unnormalized vectors.
  const CycNum& overlap(std::size_t j, std::size_t k) const { return gram_.at(j * size() + k); }
  PauliIndex index(std::size_t j) const;

 private:
  EnsembleLabel label_;
  int d_;
  int factor_dim_;
  int factors_;
  int conductor_;
  std::vector<CycNum> fiducial_;
  std::vector<std::vector<CycNum>> vectors_;
  std::vector<CycNum> norms_;
  std::vector<ExactMatrix> projectors_;
  std::vector<CycNum> gram_;

  void verify() const;
};

/// Fresh construction of a catalog ensemble.
SicEnsemble build_catalog(EnsembleLabel label);
/// Shared, lazily built instance.
const SicEnsemble& catalog(EnsembleLabel label);

/// Hermitian, unit-trace density matrix. Positivity is not checked.
class QuantumState {
 public:
  explicit QuantumState(ExactMatrix rho);
  /// |v><v| / <v|v>.
  static QuantumState pure(std::span<const CycNum> v);
  static QuantumState maximally_mixed(int d, int conductor);

  const ExactMatrix& rho() const noexcept { return rho_; }
  int d() const noexcept { return static_cast<int>(rho_.rows()); }
  int conductor() const noexcept { return rho_.conductor(); }

 private:
  ExactMatrix rho_;
};

/// SIC representation p(i): d^2 real, nonnegative field elements summing to 1.
class ProbVector {
 public:
  ProbVector(int d, std::vector<CycNum> p);
  static ProbVector from_rationals(int d, int conductor, std::span<const mpq_class> p);
  static ProbVector uniform(int d, int conductor);
  /// 1/N on the set bits of `support` (bit i = entry i), 0 elsewhere.
  static ProbVector uniform_on(int d, int conductor, std::uint64_t support);

  int d() const noexcept { return d_; }
  int conductor() const noexcept { return p_.front().conductor(); }
  std::size_t size() const noexcept { return p_.size(); }
  const CycNum& operator[](std::size_t i) const { return p_.at(i); }
  const std::vector<CycNum>& values() const noexcept { return p_; }

  bool all_rational() const;
  std::vector<mpq_class> rationals() const;
  std::size_t zero_count() const;
  /// Bit i set iff p(i) != 0; requires size() <= 64.
  std::uint64_t support() const;

  bool operator==(const ProbVector& o) const { return d_ == o.d_ && p_ == o.p_; }

 private:
  int d_;
  std::vector<CycNum> p_;
};

/// p(i) = tr(rho Pi_i) / d. Throws std::invalid_argument for non-Hermitian
/// or mis-sized input.
ProbVector sic_rep(const ExactMatrix& rho, const SicEnsemble& e);
ProbVector sic_rep(const QuantumState& state, const SicEnsemble& e);

/// rho = sum_i ((d+1) p(i) - 1/d) Pi_i.
QuantumState reconstruct(const ProbVector& p, const SicEnsemble& e);

/// sum_i p(i)^2 == 2 / (d(d+1)).
bool quadratic_check(const ProbVector& p, int d);

/// C_jkl = Re tr(Pi_j Pi_k Pi_l) for the sorted distinct triples of an
/// ensemble, plus the pair values tr(Pi_j Pi_k), computed once.
class TripleTable;

/// Left-hand side sum_{jkl} C_jkl p(j)p(k)p(l) over all ordered index triples.
CycNum qbic_lhs_general(const ProbVector& p, const TripleTable& table);
/// LHS == (d + 7)/(d + 1)^3.
bool qbic_check_general(const ProbVector& p, const TripleTable& table);
bool qbic_check_general(const ProbVector& p, const SicEnsemble& e);

struct TripleClass;

/// Pieces of the reduced d = 8 cubic: sum p^3, the bracketed S+/S- sum,
/// and the number of nonzero products in each sum.
struct HoggarQbicTerms {
  CycNum sum_cubes;
  CycNum bracket;
  CycNum lhs;
  long plus_nonzero = 0;
  long minus_nonzero = 0;
};
HoggarQbicTerms hoggar_qbic_terms(const ProbVector& p, const TripleClass& cls);
/// sum p^3 + (1/3)[sum_{S+} - sum_{S-}] == 11/648.
bool qbic_check_hoggar(const ProbVector& p, const TripleClass& cls);

using Line3 = std::array<int, 3>;
/// The 12 lines of the affine plane on Z_3^2: distinct index triples whose
/// (k_0, k_1) coordinates sum to zero componentwise.
std::vector<Line3> hesse_lines();
/// sum p^3 - 3 sum_{lines} p(i)p(j)p(k) == 0.
bool qbic_check_hesse(const ProbVector& p, std::span<const Line3> lines);

/// -sum p log2 p with 0 log 0 = 0.
double shannon_entropy(const ProbVector& p);

/// All uniform-on-N-entries vectors, N = d(d+1)/2, that pass the quadratic
/// and cubic purity tests. Exhaustive; only d in {2, 3} is accepted.
std::vector<ProbVector> enumerate_min_entropy(const SicEnsemble& e);
/// Verification mode for any d: every candidate has the minimizer form
/// and passes both purity tests.
bool verify_min_entropy(const SicEnsemble& e, std::span<const ProbVector> candidates);

struct MubReport {
  bool ok = false;
  /// Indices grouped into orthonormal bases.
  std::vector<std::vector<int>> bases;
  /// Distinct tr(rho_a rho_b) values across different bases.
  std::vector<std::string> cross_values;
  std::string failure;
};
/// Reconstructs each rep, requires it to be a pure state, and checks that
/// the states split into d orthonormal bases with cross-basis overlaps 1/d.
MubReport mub_check(std::span<const ProbVector> reps, const SicEnsemble& e);

/// Number of exact zeros <= d(d-1)/2.
bool zero_count_bound(const ProbVector& p, int d);

/// Pure state from a vector whose entries are small random Gaussian
/// (or Eisenstein, for conductor 3) integers.
QuantumState random_pure_state(int d, int conductor, std::mt19937_64& rng);
/// Random Hermitian matrix with small rational entries and unit trace.
ExactMatrix random_hermitian_trace_one(int d, int conductor, std::mt19937_64& rng);

}  // namespace sicd
