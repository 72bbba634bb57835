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

#include "sicd/ensembles.hpp"
#include "sicd/heisenberg.hpp"

using namespace sicd;

TEST(Heisenberg, LinearIndex) {
  const PauliIndex k = PauliIndex::from_exponents(2, {1, 0, 0, 1, 1, 1});
  EXPECT_EQ(k.linear(), 32u + 4u + 2u + 1u);
  EXPECT_EQ(PauliIndex::qubits3(39), k);
  EXPECT_EQ(k.count(), 64u);
  EXPECT_EQ(PauliIndex::from_linear(3, 1, 5).exps(), (std::vector<int>{1, 2}));
  EXPECT_THROW(PauliIndex::qubits3(64), std::out_of_range);
}

TEST(Heisenberg, ShiftAndPhase) {
  const auto [x2, z2] = shift_phase(2, 4);
  EXPECT_EQ(x2, ExactMatrix::from_integers(4, {{0, 1}, {1, 0}}));
  EXPECT_EQ(z2, ExactMatrix::from_integers(4, {{1, 0}, {0, -1}}));
  const auto [x3, z3] = shift_phase(3, 3);
  EXPECT_EQ(z3(1, 1), CycNum::zeta(3));
  EXPECT_EQ(z3(2, 2), CycNum::zeta(3, 2));
  EXPECT_EQ(mat_pow(x3, 3), ExactMatrix::identity(3, 3));
  EXPECT_TRUE(x3(1, 0).is_one());
}

TEST(Heisenberg, Displacements) {
  EXPECT_EQ(displacement(PauliIndex::qubits3(0), 4), ExactMatrix::identity(8, 4));
  const auto [x, z] = shift_phase(2, 4);
  const ExactMatrix i2 = ExactMatrix::identity(2, 4);
  EXPECT_EQ(displacement(PauliIndex::qubits3(1), 4), mat_kron(mat_kron(i2, i2), z));
  const ExactMatrix d1 = displacement(PauliIndex::qubits3(1), 4);
  EXPECT_EQ(d1 * d1, ExactMatrix::identity(8, 4));
  for (const auto& d : qubit3_displacements()) EXPECT_EQ(d * mat_dagger(d), ExactMatrix::identity(8, 4));
}

TEST(Heisenberg, Hermitize) {
  for (std::size_t n = 0; n < 64; ++n) {
    const PauliIndex k = PauliIndex::qubits3(n);
    const ExactMatrix& h = qubit3_hermitized()[n];
    EXPECT_TRUE(h.is_hermitian()) << n;
    EXPECT_EQ(h * h, ExactMatrix::identity(8, 4));
    if (y_count(k) == 0) EXPECT_EQ(h, displacement(k, 4));
  }
  const auto [x, z] = shift_phase(2, 4);
  const ExactMatrix y = CycNum::i(4) * (x * z);
  const ExactMatrix i2 = ExactMatrix::identity(2, 4);
  const ExactMatrix yii = mat_kron(mat_kron(y, i2), i2);
  const ExactMatrix h = hermitize(PauliIndex::qubits3(48), 4);
  EXPECT_TRUE(h == yii || h == -yii);
  EXPECT_THROW(hermitize(PauliIndex::qubits3(48), 3), std::invalid_argument);
}

TEST(Heisenberg, ProductPhases) {
  for (std::size_t a = 0; a < 64; a += 5)
    for (std::size_t b = 0; b < 64; b += 3) {
      const PauliIndex k = PauliIndex::qubits3(a), l = PauliIndex::qubits3(b);
      const CycNum w = displacement_product_phase(k, l, 4);
      EXPECT_TRUE(w == CycNum(4, 1L) || w == CycNum(4, -1L)) << a << "," << b;
    }
  const PauliIndex k = PauliIndex::from_linear(3, 1, 1), l = PauliIndex::from_linear(3, 1, 3);
  const CycNum w = displacement_product_phase(k, l, 3);
  const CycNum c = w * w * w;
  EXPECT_TRUE(c.is_one());
}

TEST(Heisenberg, SymplecticForm) {
  const SymplecticForm omega(3);
  EXPECT_TRUE(omega.is_antisymmetric());
  EXPECT_EQ(omega.determinant(), 1);
  EXPECT_EQ(omega(0, 1), -1);
  EXPECT_EQ(omega(1, 0), 1);
  int odd = 0;
  const PauliIndex k1 = PauliIndex::qubits3(1);
  for (std::size_t a = 0; a < 64; ++a) {
    const PauliIndex k = PauliIndex::qubits3(a);
    EXPECT_EQ(symplectic_value(k, k), 0);
    odd += symplectic_value(k1, k);
    for (std::size_t b = 0; b < 64; b += 7) {
      const PauliIndex l = PauliIndex::qubits3(b);
      EXPECT_EQ(symplectic_value(k, l), symplectic_value(l, k));
      for (std::size_t c = 0; c < 64; c += 13) {
        const PauliIndex m = PauliIndex::qubits3(c);
        EXPECT_EQ(symplectic_value(k, l + m), (symplectic_value(k, l) + symplectic_value(k, m)) % 2);
      }
    }
  }
  EXPECT_EQ(odd, 32);
}

TEST(Heisenberg, SymplecticFormMatchesCommutation) {
  for (std::size_t a = 0; a < 64; ++a)
    for (std::size_t b = 0; b < 64; b += 3) {
      const PauliIndex k = PauliIndex::qubits3(a), l = PauliIndex::qubits3(b);
      const ExactMatrix dk = displacement(k, 4), dl = displacement(l, 4);
      const bool commute = dk * dl == dl * dk;
      EXPECT_EQ(commute, symplectic_value(k, l) == 0);
    }
}

TEST(Heisenberg, Antisymmetry) {
  int count = 0;
  for (std::size_t n = 0; n < 64; ++n) {
    const PauliIndex k = PauliIndex::qubits3(n);
    const bool a = is_antisymmetric(k);
    EXPECT_EQ(a, odd_parity(k)) << n;
    EXPECT_EQ(a, odd_y_count(k)) << n;
    count += a;
  }
  EXPECT_EQ(count, 28);
  EXPECT_FALSE(is_antisymmetric(PauliIndex::qubits3(0)));
  EXPECT_TRUE(is_antisymmetric(PauliIndex::qubits3(63)));
}

TEST(Heisenberg, RealExpectationsOnFiducial) {
  const SicEnsemble& h = catalog(EnsembleLabel::kHoggar);
  for (std::size_t n = 0; n < 64; ++n) {
    const CycNum v = sesquilinear(h.fiducial(), qubit3_hermitized()[n], h.fiducial());
    EXPECT_TRUE(v.is_real()) << n;
  }
}
