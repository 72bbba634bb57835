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

#include <random>

#include "sicd/ensembles.hpp"
#include "sicd/heisenberg.hpp"

using namespace sicd;

namespace {

ExactMatrix random_matrix(std::size_t r, std::size_t c, int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> u(-3, 3);
  std::vector<CycNum> e;
  for (std::size_t i = 0; i < r * c; ++i)
    e.push_back(CycNum(n, u(rng)) + CycNum::zeta(n) * mpq_class(u(rng)));
  return ExactMatrix(r, c, n, std::move(e));
}

ExactMatrix h2() {
  return ExactMatrix::from_integers(1, {{-1, 1, 1, 1}, {1, -1, 1, 1}, {1, 1, -1, 1}, {1, 1, 1, -1}});
}

}  // namespace

TEST(Matrix, IdentityProducts) {
  std::mt19937_64 rng(1);
  const ExactMatrix m = random_matrix(8, 8, 4, rng);
  EXPECT_EQ(ExactMatrix::identity(8, 4) * m, m);
  EXPECT_EQ(m * ExactMatrix::identity(8, 4), m);
}

TEST(Matrix, WeylCommutation) {
  for (int d : {2, 3}) {
    const auto [x, z] = shift_phase(d, d == 2 ? 4 : 3);
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b) {
        const ExactMatrix za_xb = mat_pow(z, a) * mat_pow(x, b);
        const ExactMatrix xb_za = mat_pow(x, b) * mat_pow(z, a);
        EXPECT_EQ(za_xb, CycNum::root_of_unity(x.conductor(), d, static_cast<long>(a) * b) * xb_za);
      }
  }
}

TEST(Matrix, HoggarProjectorIdempotent) {
  const ExactMatrix& p = catalog(EnsembleLabel::kHoggar).projector(0);
  EXPECT_EQ(p * p, p);
}

TEST(Matrix, Dagger) {
  const auto [x2, z2] = shift_phase(2, 4);
  EXPECT_EQ(mat_dagger(x2), x2);
  const ExactMatrix y = CycNum::i(4) * (x2 * z2);
  EXPECT_EQ(mat_dagger(y), y);
  const auto [x3, z3] = shift_phase(3, 3);
  EXPECT_EQ(mat_dagger(z3), z3 * z3);
  std::mt19937_64 rng(2);
  const ExactMatrix m = random_matrix(3, 5, 12, rng);
  EXPECT_EQ(mat_dagger(mat_dagger(m)), m);
}

TEST(Matrix, Trace) {
  EXPECT_EQ(mat_trace(ExactMatrix::identity(8, 1)), CycNum(1, 8L));
  EXPECT_TRUE(mat_trace(catalog(EnsembleLabel::kHesse).projector(4)).is_one());
  EXPECT_TRUE(mat_trace(shift_phase(2, 4).first).is_zero());
  EXPECT_THROW(mat_trace(ExactMatrix(2, 3, 1)), std::invalid_argument);
}

TEST(Matrix, TraceIsCyclic) {
  std::mt19937_64 rng(3);
  for (int s = 0; s < 20; ++s) {
    const ExactMatrix a = random_matrix(3, 4, 12, rng), b = random_matrix(4, 3, 12, rng);
    EXPECT_EQ(mat_trace(a * b), mat_trace(b * a));
    EXPECT_EQ(trace_of_product(a, b), mat_trace(a * b));
  }
}

TEST(Matrix, Kronecker) {
  const ExactMatrix i2 = ExactMatrix::identity(2, 1);
  EXPECT_EQ(mat_kron(mat_kron(i2, i2), i2), ExactMatrix::identity(8, 1));
  const ExactMatrix a = ExactMatrix::from_integers(1, {{1, 2}, {3, 4}});
  const ExactMatrix b = ExactMatrix::from_integers(1, {{0, 5}, {6, 7}});
  const ExactMatrix k = mat_kron(a, b);
  ASSERT_EQ(k.rows(), 4u);
  for (std::size_t i1 = 0; i1 < 2; ++i1)
    for (std::size_t i2 = 0; i2 < 2; ++i2)
      for (std::size_t j1 = 0; j1 < 2; ++j1)
        for (std::size_t j2 = 0; j2 < 2; ++j2)
          EXPECT_EQ(k(i1 * 2 + i2, j1 * 2 + j2), a(i1, j1) * b(i2, j2));
  const ExactMatrix h6 = mat_kron(mat_kron(h2(), h2()), h2());
  ASSERT_EQ(h6.rows(), 64u);
  for (std::size_t r = 0; r < 64; ++r) {
    CycNum s(1);
    for (std::size_t c = 0; c < 64; ++c) s += h6(r, c);
    EXPECT_EQ(s, CycNum(1, 8L));
  }
  EXPECT_THROW(mat_kron(ExactMatrix::identity(2, 4), ExactMatrix::identity(2, 3)), ConductorMismatch);
}

TEST(Matrix, Rank) {
  EXPECT_EQ(mat_rank(ExactMatrix::identity(8, 1)), 8u);
  EXPECT_EQ(mat_rank(ExactMatrix::from_integers(1, std::vector<std::vector<long>>(4, std::vector<long>(4, 1)))), 1u);
  EXPECT_EQ(mat_rank(ExactMatrix(3, 5, 4)), 0u);
  EXPECT_EQ(mat_rank(ExactMatrix::from_integers(1, {{1, 2, 3}, {2, 4, 6}, {1, 0, 1}})), 2u);
  EXPECT_EQ(mat_rank(catalog(EnsembleLabel::kHoggar).projector(3)), 1u);
}

TEST(Matrix, RankInvariantUnderInvertibleFactors) {
  std::mt19937_64 rng(4);
  const auto [x, z] = shift_phase(3, 3);
  const ExactMatrix u = x * z;
  for (int s = 0; s < 10; ++s) {
    const ExactMatrix a = random_matrix(3, 2, 3, rng);
    const ExactMatrix low = a * mat_dagger(a);  // rank <= 2
    EXPECT_EQ(mat_rank(u * low), mat_rank(low));
    EXPECT_LE(mat_rank(low), 2u);
  }
}

TEST(Matrix, NullityFromElimination) {
  // Columns: c2 = c0 + c1, c3 = 2 c0. Rank 2, two independent kernel vectors.
  const ExactMatrix a = ExactMatrix::from_integers(1, {{1, 0, 1, 2}, {0, 1, 1, 0}, {1, 1, 2, 2}});
  EXPECT_EQ(mat_rank(a), 2u);
  const ExactMatrix k = ExactMatrix::from_integers(1, {{1, 2}, {1, 0}, {-1, 0}, {0, -1}});
  EXPECT_TRUE((a * k).is_zero());
  EXPECT_EQ(mat_rank(k), 2u);
  EXPECT_EQ(mat_rank(a) + mat_rank(k), a.cols());
}

TEST(Matrix, Annihilation) {
  const std::vector<mpq_class> one = {1}, pm = {1, -1}, proj = {0, 1};
  EXPECT_TRUE(mat_annihilates(ExactMatrix::identity(8, 1), one));
  EXPECT_TRUE(mat_annihilates(shift_phase(2, 4).first, pm));
  EXPECT_FALSE(mat_annihilates(shift_phase(2, 4).first, one));
  for (auto label : kAllLabels)
    for (const auto& p : catalog(label).projectors()) EXPECT_TRUE(mat_annihilates(p, proj));
}

TEST(Matrix, ShapeErrors) {
  EXPECT_THROW(ExactMatrix(2, 2, 1) * ExactMatrix(3, 3, 1), std::invalid_argument);
  EXPECT_THROW(ExactMatrix(2, 2, 4) * ExactMatrix(2, 2, 3), ConductorMismatch);
  EXPECT_THROW(ExactMatrix(2, 2, 1, std::vector<CycNum>(3, CycNum(1))), std::invalid_argument);
}
