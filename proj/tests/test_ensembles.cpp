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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "sicd/compat.hpp"
#include "sicd/designs.hpp"
#include "sicd/ensembles.hpp"
#include "sicd/triples.hpp"

using namespace sicd;

namespace {

const TripleTable& table_for(EnsembleLabel label) {
  static std::map<EnsembleLabel, TripleTable> cache;
  auto it = cache.find(label);
  if (it == cache.end()) it = cache.emplace(label, TripleTable::build(catalog(label), 4)).first;
  return it->second;
}

const TripleClass& hoggar_class() {
  static const TripleClass cls = classify(table_for(EnsembleLabel::kHoggar));
  return cls;
}

const std::vector<ProbVector>& twin_reps() {
  static const std::vector<ProbVector> reps =
      cross_reps(catalog(EnsembleLabel::kHoggar), catalog(EnsembleLabel::kHoggarTwin));
  return reps;
}

}  // namespace

TEST(Ensembles, CatalogOverlaps) {
  const std::map<EnsembleLabel, std::pair<std::size_t, mpq_class>> expected = {
      {EnsembleLabel::kTetrahedron, {4, mpq_class(1, 3)}},
      {EnsembleLabel::kTetrahedronDual, {4, mpq_class(1, 3)}},
      {EnsembleLabel::kHesse, {9, mpq_class(1, 4)}},
      {EnsembleLabel::kHoggar, {64, mpq_class(1, 9)}},
      {EnsembleLabel::kHoggarTwin, {64, mpq_class(1, 9)}}};
  for (const auto& [label, want] : expected) {
    const SicEnsemble& e = catalog(label);
    ASSERT_EQ(e.size(), want.first) << label_name(label);
    for (std::size_t j = 0; j < e.size(); ++j)
      for (std::size_t k = j + 1; k < e.size(); k += (e.size() > 9 ? 7 : 1))
        EXPECT_EQ(trace_of_product(e.projector(j), e.projector(k)), CycNum(e.conductor(), want.second));
  }
}

TEST(Ensembles, Conductors) {
  EXPECT_EQ(catalog(EnsembleLabel::kTetrahedron).conductor(), 12);
  EXPECT_EQ(catalog(EnsembleLabel::kHesse).conductor(), 3);
  EXPECT_EQ(catalog(EnsembleLabel::kHoggar).conductor(), 4);
  EXPECT_EQ(catalog(EnsembleLabel::kHoggarTwin).conductor(), 4);
}

TEST(Ensembles, Labels) {
  for (auto label : kAllLabels) EXPECT_EQ(parse_label(label_name(label)), label);
  EXPECT_FALSE(parse_label("dodecahedron").has_value());
}

TEST(Ensembles, BrokenFiducialIsRejected) {
  std::vector<CycNum> f(3, CycNum(3, 1L));
  EXPECT_THROW(SicEnsemble(EnsembleLabel::kHesse, 3, 1, 3, f), InvariantViolation);
  EXPECT_THROW(SicEnsemble(EnsembleLabel::kHesse, 3, 1, 3, std::vector<CycNum>(2, CycNum(3, 1L))),
               std::invalid_argument);
}

TEST(Ensembles, MaximallyMixedIsUniform) {
  for (auto label : kAllLabels) {
    const SicEnsemble& e = catalog(label);
    const ProbVector p = sic_rep(QuantumState::maximally_mixed(e.d(), e.conductor()), e);
    EXPECT_EQ(p, ProbVector::uniform(e.d(), e.conductor()));
    EXPECT_FALSE(quadratic_check(p, e.d()));
    EXPECT_EQ(reconstruct(p, e).rho(), QuantumState::maximally_mixed(e.d(), e.conductor()).rho());
  }
}

TEST(Ensembles, ProjectorReps) {
  const SicEnsemble& h = catalog(EnsembleLabel::kHoggar);
  const ProbVector p = sic_rep(h.projector(5), h);
  for (std::size_t i = 0; i < 64; ++i)
    EXPECT_EQ(p[i], CycNum(4, mpq_class(1, 72) + (i == 5 ? mpq_class(1, 9) : mpq_class(0))));
  EXPECT_EQ(reconstruct(p, h).rho(), h.projector(5));
  for (auto label : kAllLabels) {
    const SicEnsemble& e = catalog(label);
    for (std::size_t k = 0; k < e.size(); k += 5) {
      const ProbVector q = sic_rep(e.projector(k), e);
      EXPECT_TRUE(quadratic_check(q, e.d()));
      EXPECT_TRUE(qbic_check_general(q, table_for(label))) << label_name(label) << " " << k;
    }
  }
}

TEST(Ensembles, TwinRepsAgainstHoggar) {
  const auto& reps = twin_reps();
  ASSERT_EQ(reps.size(), 64u);
  for (const ProbVector& p : reps) {
    EXPECT_EQ(p.zero_count(), 28u);
    for (std::size_t i = 0; i < 64; ++i)
      EXPECT_TRUE(p[i].is_zero() || p[i] == CycNum(4, mpq_class(1, 36)));
    EXPECT_TRUE(quadratic_check(p, 8));
    EXPECT_TRUE(zero_count_bound(p, 8));
  }
  const ProbVector& p = reps.front();
  EXPECT_EQ(qbic_lhs_general(p, table_for(EnsembleLabel::kHoggar)), CycNum(4, mpq_class(5, 243)));
  EXPECT_TRUE(qbic_check_general(p, table_for(EnsembleLabel::kHoggar)));
  const HoggarQbicTerms t = hoggar_qbic_terms(p, hoggar_class());
  EXPECT_EQ(t.sum_cubes, CycNum(4, mpq_class(1, 1296)));
  EXPECT_EQ(t.bracket, CycNum(4, mpq_class(7, 144)));
  EXPECT_TRUE(qbic_check_hoggar(p, hoggar_class()));
}

TEST(Ensembles, ReconstructRoundTrip) {
  std::mt19937_64 rng(20);
  for (auto label : kAllLabels) {
    const SicEnsemble& e = catalog(label);
    for (int s = 0; s < 20; ++s) {
      const ExactMatrix rho = random_hermitian_trace_one(e.d(), e.conductor(), rng);
      EXPECT_EQ(reconstruct(sic_rep(rho, e), e).rho(), rho) << label_name(label);
    }
  }
}

TEST(Ensembles, RandomPureStates) {
  std::mt19937_64 rng(50);
  for (auto label : {EnsembleLabel::kTetrahedron, EnsembleLabel::kHesse, EnsembleLabel::kHoggar}) {
    const SicEnsemble& e = catalog(label);
    const double min_entropy = shannon_entropy(sic_rep(e.projector(0), e));
    for (int s = 0; s < 50; ++s) {
      const ProbVector p = sic_rep(random_pure_state(e.d(), e.conductor(), rng), e);
      EXPECT_TRUE(quadratic_check(p, e.d()));
      EXPECT_TRUE(qbic_check_general(p, table_for(label)));
      if (label == EnsembleLabel::kHoggar) EXPECT_TRUE(qbic_check_hoggar(p, hoggar_class()));
      if (label == EnsembleLabel::kHesse) EXPECT_TRUE(qbic_check_hesse(p, hesse_lines()));
      EXPECT_TRUE(zero_count_bound(p, e.d()));
      EXPECT_LE(shannon_entropy(p), min_entropy + 1e-12);
    }
  }
}

TEST(Ensembles, RandomMixedStatesFailCubic) {
  std::mt19937_64 rng(51);
  const SicEnsemble& h = catalog(EnsembleLabel::kHoggar);
  int failed = 0;
  for (int s = 0; s < 10; ++s) {
    const ExactMatrix rho = random_hermitian_trace_one(8, 4, rng);
    const ProbVector p = sic_rep(rho, h);
    const bool pure = rho * rho == rho;
    EXPECT_EQ(quadratic_check(p, 8) && qbic_check_hoggar(p, hoggar_class()), pure);
    failed += !pure;
  }
  EXPECT_GT(failed, 0);
}

TEST(Ensembles, HesseCubicMatchesGeneral) {
  std::mt19937_64 rng(52);
  const SicEnsemble& e = catalog(EnsembleLabel::kHesse);
  for (int s = 0; s < 30; ++s) {
    const ProbVector p = sic_rep(random_hermitian_trace_one(3, 3, rng), e);
    if (!quadratic_check(p, 3)) continue;
    EXPECT_EQ(qbic_check_hesse(p, hesse_lines()), qbic_check_general(p, table_for(EnsembleLabel::kHesse)));
  }
  EXPECT_EQ(hesse_lines().size(), 12u);
  EXPECT_FALSE(qbic_check_hesse(ProbVector::uniform(3, 3), hesse_lines()));
}

TEST(Ensembles, HesseExampleStates) {
  const HypothesisSet h = hesse_example_states();
  for (const ProbVector& p : h.reps()) {
    EXPECT_TRUE(quadratic_check(p, 3));
    EXPECT_TRUE(qbic_check_hesse(p, hesse_lines()));
    EXPECT_EQ(p.zero_count(), 3u);
    EXPECT_TRUE(zero_count_bound(p, 3));
  }
}

TEST(Ensembles, Entropy) {
  EXPECT_EQ(shannon_entropy(ProbVector::uniform(8, 4)), 6.0);
  EXPECT_NEAR(shannon_entropy(twin_reps().front()), std::log2(36.0), 1e-12);
  const SicEnsemble& h = catalog(EnsembleLabel::kHoggar);
  const double ek = shannon_entropy(sic_rep(h.projector(0), h));
  const double closed = -(1.0 / 9 + 1.0 / 72) * std::log2(1.0 / 9 + 1.0 / 72) - 63.0 / 72 * std::log2(1.0 / 72);
  EXPECT_NEAR(ek, closed, 1e-12);
  EXPECT_GT(ek, std::log2(36.0));
}

TEST(Ensembles, MinimumEntropyQubit) {
  const SicEnsemble& e = catalog(EnsembleLabel::kTetrahedron);
  const auto mins = enumerate_min_entropy(e);
  ASSERT_EQ(mins.size(), 4u);
  for (const ProbVector& p : mins) {
    EXPECT_EQ(p.zero_count(), 1u);
    EXPECT_NEAR(shannon_entropy(p), std::log2(3.0), 1e-12);
  }
  EXPECT_TRUE(verify_min_entropy(e, mins));
}

TEST(Ensembles, MinimumEntropyQutritFormsMubs) {
  const SicEnsemble& e = catalog(EnsembleLabel::kHesse);
  const auto mins = enumerate_min_entropy(e);
  ASSERT_EQ(mins.size(), 12u);
  const MubReport mub = mub_check(mins, e);
  EXPECT_TRUE(mub.ok) << mub.failure;
  EXPECT_EQ(mub.bases.size(), 4u);
  for (const auto& b : mub.bases) EXPECT_EQ(b.size(), 3u);
  EXPECT_EQ(mub.cross_values, std::vector<std::string>{"1/3"});
  EXPECT_THROW(enumerate_min_entropy(catalog(EnsembleLabel::kHoggar)), std::domain_error);
}

TEST(Ensembles, MinimumEntropyHoggarVerification) {
  EXPECT_TRUE(verify_min_entropy(catalog(EnsembleLabel::kHoggar), twin_reps()));
  const std::vector<ProbVector> bad = {ProbVector::uniform(8, 4)};
  EXPECT_FALSE(verify_min_entropy(catalog(EnsembleLabel::kHoggar), bad));
}

TEST(Ensembles, InputErrors) {
  const SicEnsemble& h = catalog(EnsembleLabel::kHoggar);
  const ExactMatrix m = ExactMatrix::identity(8, 4).with(0, 1, CycNum(4, 1L));
  EXPECT_THROW(sic_rep(m, h), std::invalid_argument);
  EXPECT_THROW(sic_rep(ExactMatrix::identity(3, 4), h), std::invalid_argument);
  EXPECT_THROW(QuantumState(ExactMatrix::identity(2, 4)), std::invalid_argument);
  const std::vector<mpq_class> neg = {mpq_class(2), mpq_class(-1), mpq_class(0), mpq_class(0)};
  EXPECT_THROW(ProbVector::from_rationals(2, 12, neg), std::invalid_argument);
}
