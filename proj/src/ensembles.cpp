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

#include "sicd/ensembles.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <memory>
#include <mutex>
#include <optional>

#include "sicd/triples.hpp"

namespace sicd {
namespace {

std::string describe(EnsembleLabel label) { return std::string(label_name(label)); }

CycNum rational(int conductor, long num, long den = 1) {
  return CycNum(conductor, mpq_class(num, den));
}

std::optional<std::vector<mpq_class>> rational_view(const ProbVector& p) {
  if (!p.all_rational()) return std::nullopt;
  return p.rationals();
}

template <class T>
T cube(const T& x) {
  return T(x * x * x);
}

}  // namespace

std::string_view label_name(EnsembleLabel label) {
  switch (label) {
    case EnsembleLabel::kTetrahedron: return "tetrahedron";
    case EnsembleLabel::kTetrahedronDual: return "tetrahedron-dual";
    case EnsembleLabel::kHesse: return "hesse";
    case EnsembleLabel::kHoggar: return "hoggar";
    case EnsembleLabel::kHoggarTwin: return "hoggar-twin";
  }
  return "unknown";
}

std::optional<EnsembleLabel> parse_label(std::string_view name) {
  for (auto label : kAllLabels)
    if (label_name(label) == name) return label;
  return std::nullopt;
}

SicEnsemble::SicEnsemble(EnsembleLabel label, int factor_dim, int factors, int conductor,
                         std::vector<CycNum> fiducial)
    : label_(label),
      d_(1),
      factor_dim_(factor_dim),
      factors_(factors),
      conductor_(conductor),
      fiducial_(std::move(fiducial)) {
  for (int f = 0; f < factors_; ++f) d_ *= factor_dim_;
  if (fiducial_.size() != static_cast<std::size_t>(d_))
    throw std::invalid_argument("fiducial length does not match dimension");
  const std::size_t n = static_cast<std::size_t>(d_) * d_;
  const bool qubits3 = factor_dim_ == 2 && factors_ == 3 && conductor_ == 4;
  vectors_.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    const ExactMatrix dj = qubits3 ? qubit3_displacements()[j]
                                   : displacement(index(j), conductor_);
    vectors_.push_back(sicd::apply(dj, fiducial_));
  }
  gram_.reserve(n * n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) gram_.push_back(inner(vectors_[j], vectors_[k]));
  for (std::size_t j = 0; j < n; ++j) norms_.push_back(gram_[j * n + j]);
  projectors_.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    const CycNum inv = norms_[j].inverse();
    projectors_.push_back(inv * ExactMatrix::outer(vectors_[j]));
  }
  verify();
}

PauliIndex SicEnsemble::index(std::size_t j) const {
  return PauliIndex::from_linear(factor_dim_, factors_, j);
}

void SicEnsemble::verify() const {
  const std::string name = describe(label_);
  const std::size_t n = size();
  const CycNum one(conductor_, 1L);
  for (std::size_t j = 0; j < n; ++j) {
    const ExactMatrix& p = projectors_[j];
    if (!p.is_hermitian())
      throw InvariantViolation(name + ": projector " + std::to_string(j) + " violates P^dagger = P");
    if (p * p != p)
      throw InvariantViolation(name + ": projector " + std::to_string(j) + " violates P^2 = P");
    if (mat_trace(p) != one)
      throw InvariantViolation(name + ": projector " + std::to_string(j) + " violates tr P = 1");
  }
  ExactMatrix sum(d_, d_, conductor_);
  for (const auto& p : projectors_) sum = sum + p;
  if (mpq_class(1, d_) * sum != ExactMatrix::identity(d_, conductor_))
    throw InvariantViolation(name + ": violates sum_j Pi_j / d = I");
  const CycNum diag = one;
  const CycNum off = rational(conductor_, 1, d_ + 1);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = j; k < n; ++k) {
      const CycNum t = trace_of_product(projectors_[j], projectors_[k]);
      if (t != (j == k ? diag : off))
        throw InvariantViolation(name + ": violates tr(Pi_j Pi_k) = (d delta_jk + 1)/(d + 1) at (" +
                                 std::to_string(j) + "," + std::to_string(k) + "), got " + t.str());
    }
}

SicEnsemble build_catalog(EnsembleLabel label) {
  switch (label) {
    case EnsembleLabel::kTetrahedron:
    case EnsembleLabel::kTetrahedronDual: {
      // Eigenvector of n.sigma for Bloch vector n = +-(1,1,1)/sqrt(3), scaled by sqrt(3).
      const int c = 12;
      const CycNum s3 = CycNum::sqrt3(c);
      const CycNum one(c, 1L);
      const CycNum one_plus_i = one + CycNum::i(c);
      std::vector<CycNum> fid;
      if (label == EnsembleLabel::kTetrahedron)
        fid = {s3 + one, one_plus_i};
      else
        fid = {s3 - one, -one_plus_i};
      return SicEnsemble(label, 2, 1, c, std::move(fid));
    }
    case EnsembleLabel::kHesse: {
      const int c = 3;
      return SicEnsemble(label, 3, 1, c, {CycNum(c, 0L), CycNum(c, 1L), CycNum(c, -1L)});
    }
    case EnsembleLabel::kHoggar:
    case EnsembleLabel::kHoggarTwin: {
      const int c = 4;
      std::vector<CycNum> fid(8, CycNum(c, 1L));
      const CycNum two_i = CycNum::i(c) * mpq_class(2);
      fid[0] = label == EnsembleLabel::kHoggar ? CycNum(c, -1L) + two_i : CycNum(c, -1L) - two_i;
      return SicEnsemble(label, 2, 3, c, std::move(fid));
    }
  }
  throw std::invalid_argument("unknown ensemble label");
}

const SicEnsemble& catalog(EnsembleLabel label) {
  static std::array<std::once_flag, kAllLabels.size()> flags;
  static std::array<std::unique_ptr<SicEnsemble>, kAllLabels.size()> cache;
  const auto i = static_cast<std::size_t>(label);
  std::call_once(flags.at(i), [&] { cache[i] = std::make_unique<SicEnsemble>(build_catalog(label)); });
  return *cache[i];
}

QuantumState::QuantumState(ExactMatrix rho) : rho_(std::move(rho)) {
  if (!rho_.square()) throw std::invalid_argument("density matrix must be square");
  if (!rho_.is_hermitian()) throw std::invalid_argument("density matrix must be Hermitian");
  if (!mat_trace(rho_).is_one()) throw std::invalid_argument("density matrix must have unit trace");
}

QuantumState QuantumState::pure(std::span<const CycNum> v) {
  const CycNum n = inner(v, v);
  if (n.is_zero()) throw std::invalid_argument("pure state from a zero vector");
  return QuantumState(n.inverse() * ExactMatrix::outer(v));
}

QuantumState QuantumState::maximally_mixed(int d, int conductor) {
  return QuantumState(mpq_class(1, d) * ExactMatrix::identity(d, conductor));
}

ProbVector::ProbVector(int d, std::vector<CycNum> p) : d_(d), p_(std::move(p)) {
  if (p_.size() != static_cast<std::size_t>(d) * d)
    throw std::invalid_argument("probability vector must have d^2 entries");
  CycNum total(p_.front().conductor());
  for (const auto& x : p_) {
    if (!x.is_real()) throw std::invalid_argument("probability entry is not real: " + x.str());
    if (real_sign(x) < 0) throw std::invalid_argument("negative probability: " + x.str());
    total += x;
  }
  if (!total.is_one()) throw std::invalid_argument("probabilities do not sum to 1: " + total.str());
}

ProbVector ProbVector::from_rationals(int d, int conductor, std::span<const mpq_class> p) {
  std::vector<CycNum> v;
  v.reserve(p.size());
  for (const auto& x : p) v.emplace_back(conductor, x);
  return ProbVector(d, std::move(v));
}

ProbVector ProbVector::uniform(int d, int conductor) {
  return ProbVector(d, std::vector<CycNum>(static_cast<std::size_t>(d) * d,
                                           rational(conductor, 1, static_cast<long>(d) * d)));
}

ProbVector ProbVector::uniform_on(int d, int conductor, std::uint64_t support) {
  const long n = std::popcount(support);
  if (n == 0) throw std::invalid_argument("uniform_on: empty support");
  std::vector<CycNum> v(static_cast<std::size_t>(d) * d, CycNum(conductor));
  for (std::size_t i = 0; i < v.size(); ++i)
    if ((support >> i) & 1U) v[i] = rational(conductor, 1, n);
  return ProbVector(d, std::move(v));
}

bool ProbVector::all_rational() const {
  for (const auto& x : p_)
    if (!x.is_rational()) return false;
  return true;
}

std::vector<mpq_class> ProbVector::rationals() const {
  std::vector<mpq_class> out;
  out.reserve(p_.size());
  for (const auto& x : p_) out.push_back(x.rational());
  return out;
}

std::size_t ProbVector::zero_count() const {
  std::size_t z = 0;
  for (const auto& x : p_)
    if (x.is_zero()) ++z;
  return z;
}

std::uint64_t ProbVector::support() const {
  if (p_.size() > 64) throw std::length_error("support mask needs at most 64 entries");
  std::uint64_t m = 0;
  for (std::size_t i = 0; i < p_.size(); ++i)
    if (!p_[i].is_zero()) m |= std::uint64_t{1} << i;
  return m;
}

ProbVector sic_rep(const ExactMatrix& rho, const SicEnsemble& e) {
  if (!rho.square() || rho.rows() != static_cast<std::size_t>(e.d()))
    throw std::invalid_argument("sic_rep: state dimension does not match ensemble");
  if (rho.conductor() != e.conductor()) throw ConductorMismatch(rho.conductor(), e.conductor());
  if (!rho.is_hermitian()) throw std::invalid_argument("sic_rep: input is not Hermitian");
  std::vector<CycNum> p;
  p.reserve(e.size());
  const mpq_class inv_d(1, e.d());
  for (std::size_t i = 0; i < e.size(); ++i) {
    CycNum v = sesquilinear(e.vectors()[i], rho, e.vectors()[i]) / e.norm(i);
    v *= inv_d;
    if (!v.is_real())
      throw std::logic_error("sic_rep: nonzero imaginary residue at outcome " + std::to_string(i));
    p.push_back(std::move(v));
  }
  return ProbVector(e.d(), std::move(p));
}

ProbVector sic_rep(const QuantumState& state, const SicEnsemble& e) { return sic_rep(state.rho(), e); }

QuantumState reconstruct(const ProbVector& p, const SicEnsemble& e) {
  if (p.size() != e.size()) throw std::invalid_argument("reconstruct: size mismatch");
  const int d = e.d();
  ExactMatrix rho(d, d, e.conductor());
  const CycNum shift = rational(e.conductor(), 1, d);
  for (std::size_t i = 0; i < e.size(); ++i) {
    CycNum c = p[i] * mpq_class(d + 1) - shift;
    if (c.is_zero()) continue;
    rho = rho + c * e.projector(i);
  }
  return QuantumState(std::move(rho));
}

bool quadratic_check(const ProbVector& p, int d) {
  CycNum s(p.conductor());
  for (const auto& x : p.values()) s += x * x;
  return s == rational(p.conductor(), 2, static_cast<long>(d) * (d + 1));
}

CycNum qbic_lhs_general(const ProbVector& p, const TripleTable& table) {
  const int n = table.n();
  if (p.size() != static_cast<std::size_t>(n)) throw std::invalid_argument("qbic: size mismatch");
  const auto& triples = table.triples();
  if (table.rational()) {
    if (auto q = rational_view(p)) {
      const auto& v = *q;
      const auto& pairs = table.rational_pairs();
      const auto& c = table.rational_values();
      mpq_class diag = 0, two = 0, three = 0;
      for (int j = 0; j < n; ++j) {
        if (v[j] == 0) continue;
        diag += pairs[static_cast<std::size_t>(j) * n + j] * cube(v[j]);
        const mpq_class sq = v[j] * v[j];
        for (int k = 0; k < n; ++k)
          if (k != j && v[k] != 0) two += pairs[static_cast<std::size_t>(j) * n + k] * sq * v[k];
      }
      for (std::size_t r = 0; r < triples.size(); ++r) {
        const auto& t = triples[r];
        if (v[t[0]] == 0 || v[t[1]] == 0 || v[t[2]] == 0 || c[r] == 0) continue;
        three += c[r] * v[t[0]] * v[t[1]] * v[t[2]];
      }
      return CycNum(p.conductor(), mpq_class(diag + 3 * two + 6 * three));
    }
  }
  const auto& v = p.values();
  CycNum diag(p.conductor()), two(p.conductor()), three(p.conductor());
  for (int j = 0; j < n; ++j) {
    if (v[j].is_zero()) continue;
    diag += table.pair(j, j) * v[j] * v[j] * v[j];
    const CycNum sq = v[j] * v[j];
    for (int k = 0; k < n; ++k)
      if (k != j && !v[k].is_zero()) two += table.pair(j, k) * sq * v[k];
  }
  for (std::size_t r = 0; r < triples.size(); ++r) {
    const auto& t = triples[r];
    if (v[t[0]].is_zero() || v[t[1]].is_zero() || v[t[2]].is_zero()) continue;
    three += table.sorted_value(r) * v[t[0]] * v[t[1]] * v[t[2]];
  }
  return diag + two * mpq_class(3) + three * mpq_class(6);
}

bool qbic_check_general(const ProbVector& p, const TripleTable& table) {
  const long d = table.d();
  return qbic_lhs_general(p, table) == rational(p.conductor(), d + 7, (d + 1) * (d + 1) * (d + 1));
}

bool qbic_check_general(const ProbVector& p, const SicEnsemble& e) {
  return qbic_check_general(p, TripleTable::build(e));
}

HoggarQbicTerms hoggar_qbic_terms(const ProbVector& p, const TripleClass& cls) {
  if (p.size() != 64) throw std::invalid_argument("hoggar_qbic_terms: need a d = 8 vector");
  HoggarQbicTerms out;
  const int c = p.conductor();
  auto count_nonzero = [&](const std::vector<Triple>& set) {
    long n = 0;
    for (const auto& t : set)
      if (!p[t[0]].is_zero() && !p[t[1]].is_zero() && !p[t[2]].is_zero()) ++n;
    return n;
  };
  out.plus_nonzero = count_nonzero(cls.s_plus);
  out.minus_nonzero = count_nonzero(cls.s_minus);
  if (auto q = rational_view(p)) {
    const auto& v = *q;
    mpq_class cubes = 0, plus = 0, minus = 0;
    for (const auto& x : v) cubes += cube(x);
    for (const auto& t : cls.s_plus) plus += v[t[0]] * v[t[1]] * v[t[2]];
    for (const auto& t : cls.s_minus) minus += v[t[0]] * v[t[1]] * v[t[2]];
    const mpq_class bracket = plus - minus;
    out.sum_cubes = CycNum(c, cubes);
    out.bracket = CycNum(c, bracket);
    out.lhs = CycNum(c, mpq_class(cubes + bracket / 3));
    return out;
  }
  CycNum cubes(c), plus(c), minus(c);
  for (const auto& x : p.values()) cubes += x * x * x;
  for (const auto& t : cls.s_plus) plus += p[t[0]] * p[t[1]] * p[t[2]];
  for (const auto& t : cls.s_minus) minus += p[t[0]] * p[t[1]] * p[t[2]];
  out.sum_cubes = cubes;
  out.bracket = plus - minus;
  out.lhs = cubes + out.bracket * mpq_class(1, 3);
  return out;
}

bool qbic_check_hoggar(const ProbVector& p, const TripleClass& cls) {
  return hoggar_qbic_terms(p, cls).lhs == rational(p.conductor(), 11, 648);
}

std::vector<Line3> hesse_lines() {
  std::vector<Line3> lines;
  for (int a = 0; a < 9; ++a)
    for (int b = a + 1; b < 9; ++b)
      for (int c = b + 1; c < 9; ++c) {
        const int s0 = a / 3 + b / 3 + c / 3;
        const int s1 = a % 3 + b % 3 + c % 3;
        if (s0 % 3 == 0 && s1 % 3 == 0) lines.push_back({a, b, c});
      }
  return lines;
}

bool qbic_check_hesse(const ProbVector& p, std::span<const Line3> lines) {
  if (p.size() != 9) throw std::invalid_argument("qbic_check_hesse: need a d = 3 vector");
  CycNum cubes(p.conductor()), on_lines(p.conductor());
  for (const auto& x : p.values()) cubes += x * x * x;
  for (const auto& l : lines) on_lines += p[l[0]] * p[l[1]] * p[l[2]];
  return (cubes - on_lines * mpq_class(3)).is_zero();
}

double shannon_entropy(const ProbVector& p) {
  long double h = 0.0L;
  for (const auto& x : p.values()) {
    if (x.is_zero()) continue;
    const long double v = x.to_real();
    h -= v * std::log2(v);
  }
  return static_cast<double>(h);
}

std::vector<ProbVector> enumerate_min_entropy(const SicEnsemble& e) {
  const int d = e.d();
  if (d != 2 && d != 3)
    throw std::domain_error("exhaustive minimum-entropy search is only run for d = 2 and d = 3");
  const int n = d * d;
  const int support = d * (d + 1) / 2;
  const TripleTable table = TripleTable::build(e);
  std::vector<ProbVector> found;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (std::popcount(mask) != support) continue;
    ProbVector p = ProbVector::uniform_on(d, e.conductor(), mask);
    if (quadratic_check(p, d) && qbic_check_general(p, table)) found.push_back(std::move(p));
  }
  return found;
}

bool verify_min_entropy(const SicEnsemble& e, std::span<const ProbVector> candidates) {
  const int d = e.d();
  const long support = static_cast<long>(d) * (d + 1) / 2;
  const CycNum level = rational(e.conductor(), 1, support);
  const TripleTable table = TripleTable::build(e);
  for (const auto& p : candidates) {
    if (p.size() != e.size() || p.conductor() != e.conductor()) return false;
    long nonzero = 0;
    for (const auto& x : p.values()) {
      if (x.is_zero()) continue;
      if (x != level) return false;
      ++nonzero;
    }
    if (nonzero != support) return false;
    if (!quadratic_check(p, d) || !qbic_check_general(p, table)) return false;
  }
  return true;
}

MubReport mub_check(std::span<const ProbVector> reps, const SicEnsemble& e) {
  MubReport out;
  const int d = e.d();
  const std::size_t n = reps.size();
  std::vector<ExactMatrix> rho;
  for (std::size_t a = 0; a < n; ++a) {
    ExactMatrix r = reconstruct(reps[a], e).rho();
    if (r * r != r) {
      out.failure = "state " + std::to_string(a) + " is not pure";
      return out;
    }
    rho.push_back(std::move(r));
  }
  std::vector<int> basis(n, -1);
  for (std::size_t a = 0; a < n; ++a) {
    if (basis[a] >= 0) continue;
    basis[a] = static_cast<int>(out.bases.size());
    out.bases.push_back({static_cast<int>(a)});
    for (std::size_t b = a + 1; b < n; ++b)
      if (basis[b] < 0 && trace_of_product(rho[a], rho[b]).is_zero()) {
        basis[b] = basis[a];
        out.bases.back().push_back(static_cast<int>(b));
      }
  }
  const CycNum unbiased(e.conductor(), mpq_class(1, d));
  std::vector<std::string> cross;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      const CycNum t = trace_of_product(rho[a], rho[b]);
      if (basis[a] == basis[b]) {
        if (!t.is_zero()) {
          out.failure = "states " + std::to_string(a) + " and " + std::to_string(b) +
                        " share a basis but are not orthogonal";
          return out;
        }
        continue;
      }
      const std::string s = t.str();
      if (std::find(cross.begin(), cross.end(), s) == cross.end()) cross.push_back(s);
      if (t != unbiased && out.failure.empty())
        out.failure = "cross-basis overlap " + s + " between " + std::to_string(a) + " and " +
                      std::to_string(b);
    }
  out.cross_values = cross;
  for (const auto& g : out.bases)
    if (g.size() != static_cast<std::size_t>(d) && out.failure.empty())
      out.failure = "basis of size " + std::to_string(g.size());
  out.ok = out.failure.empty();
  return out;
}

bool zero_count_bound(const ProbVector& p, int d) {
  return p.zero_count() <= static_cast<std::size_t>(d) * (d - 1) / 2;
}

QuantumState random_pure_state(int d, int conductor, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> coef(-3, 3);
  const bool gaussian = conductor % 4 == 0;
  const bool eisenstein = !gaussian && conductor % 3 == 0;
  CycNum unit(conductor, 0L);
  if (gaussian) unit = CycNum::i(conductor);
  if (eisenstein) unit = CycNum::root_of_unity(conductor, 3);
  for (;;) {
    std::vector<CycNum> v;
    bool nonzero = false;
    for (int i = 0; i < d; ++i) {
      CycNum x(conductor, coef(rng));
      if (gaussian || eisenstein) x += unit * mpq_class(coef(rng));
      nonzero = nonzero || !x.is_zero();
      v.push_back(std::move(x));
    }
    if (nonzero) return QuantumState::pure(v);
  }
}

ExactMatrix random_hermitian_trace_one(int d, int conductor, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> weight(1, 5);
  std::uniform_int_distribution<int> parts(1, 3);
  const int k = parts(rng);
  std::vector<long> w(k);
  long total = 0;
  for (auto& x : w) total += (x = weight(rng));
  ExactMatrix rho(d, d, conductor);
  for (int i = 0; i < k; ++i)
    rho = rho + mpq_class(w[i], total) * random_pure_state(d, conductor, rng).rho();
  return rho;
}

}  // namespace sicd
