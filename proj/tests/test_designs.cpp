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

#include <bit>
#include <sstream>

#include "sicd/designs.hpp"

using namespace sicd;

namespace {

const Design& twin() {
  static const Design d =
      design_from_twin(catalog(EnsembleLabel::kHoggar), catalog(EnsembleLabel::kHoggarTwin));
  return d;
}

const TripleClass& cls() {
  static const TripleClass c = classify(TripleTable::build(catalog(EnsembleLabel::kHoggar), 4));
  return c;
}

std::array<long, 5> params(const BibdParams& p) { return {p.v, p.b, p.k, p.r, p.lambda}; }

}  // namespace

TEST(Designs, BlockStrings) {
  const Block b = Block::parse("1101", 7);
  EXPECT_EQ(b.bits, 0b1011u);
  EXPECT_EQ(b.weight(), 3);
  EXPECT_EQ(b.origin, 7);
  EXPECT_EQ(b.str(4), "1101");
  EXPECT_THROW(Block::parse("10x1"), std::invalid_argument);
}

TEST(Designs, TwinDesign) {
  ASSERT_EQ(twin().b(), 64u);
  for (const Block& b : twin().blocks) EXPECT_EQ(b.weight(), 36);
  for (std::size_t i = 0; i < 64; ++i)
    for (std::size_t j = i + 1; j < 64; ++j)
      EXPECT_EQ(std::popcount(twin().blocks[i].bits & twin().blocks[j].bits), 20);
  const BibdParams p = bibd_params(twin());
  ASSERT_TRUE(p.ok) << p.failure;
  EXPECT_EQ(params(p), (std::array<long, 5>{64, 64, 36, 36, 20}));
  const auto s = symplectic_params(3, 1);
  EXPECT_EQ(s, (std::array<long, 3>{64, 36, 20}));
}

TEST(Designs, ReferenceQuartetIsFirstFourBlocks) {
  for (int i = 0; i < 4; ++i) EXPECT_EQ(twin().blocks[i].str(), reference_quartet()[i]);
}

TEST(Designs, OrthogonalityGraph) {
  const auto reps = cross_reps(catalog(EnsembleLabel::kHoggar), catalog(EnsembleLabel::kHoggarTwin));
  for (std::size_t i = 0; i < 64; ++i)
    for (int n = 0; n < 64; ++n) EXPECT_EQ(twin().blocks[i].test(n), !reps[i][n].is_zero());
}

TEST(Designs, Complement) {
  const Design c = complement(twin());
  const BibdParams q = bibd_params(c);
  ASSERT_TRUE(q.ok);
  EXPECT_EQ(params(q), (std::array<long, 5>{64, 64, 28, 28, 12}));
  EXPECT_TRUE(complement_law(bibd_params(twin()), q));
  EXPECT_EQ(hadamard_family(4), (std::array<long, 3>{64, 28, 12}));
  const Design cc = complement(c);
  for (std::size_t i = 0; i < 64; ++i) EXPECT_EQ(cc.blocks[i].bits, twin().blocks[i].bits);
}

TEST(Designs, TripleClassDesigns) {
  const BibdParams minus = bibd_params(design_from_triples(64, cls().s_minus));
  ASSERT_TRUE(minus.ok) << minus.failure;
  EXPECT_EQ(params(minus),
            (std::array<long, 5>{64, 4032, 3, 189, 6}));
  const BibdParams plus = bibd_params(design_from_triples(64, cls().s_plus));
  ASSERT_TRUE(plus.ok) << plus.failure;
  EXPECT_EQ(params(plus),
            (std::array<long, 5>{64, 16128, 3, 756, 24}));
  for (const BibdParams& p : {minus, plus}) {
    EXPECT_EQ(p.b * p.k, p.v * p.r);
    EXPECT_EQ(p.lambda * (p.v - 1), p.r * (p.k - 1));
  }
}

TEST(Designs, NotADesign) {
  Design d = twin();
  d.blocks[0].bits ^= 1;
  const BibdParams p = bibd_params(d);
  EXPECT_FALSE(p.ok);
  EXPECT_FALSE(p.failure.empty());
}

TEST(Designs, SymmetricDifferenceProperty) {
  const SdpReport r = sdp_check(twin());
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(r.triples_checked, 41664u);
  EXPECT_EQ(r.as_block + r.as_complement, 41664u);
  EXPECT_EQ(r.as_block, 20160u);
  EXPECT_EQ(r.as_complement, 21504u);
  EXPECT_TRUE(r.parameter_condition);
  EXPECT_EQ(r.m, 3);
}

TEST(Designs, SdpMutation) {
  Design d = twin();
  d.blocks[17].bits ^= std::uint64_t{1} << 40;
  EXPECT_FALSE(sdp_check(d).holds);
}

TEST(Designs, XorOfThreeBlocks) {
  const auto& b = twin().blocks;
  for (int j = 0; j < 64; ++j)
    for (int n = 0; n < 64; ++n) EXPECT_EQ(b[j].test(n), b[0].test(n ^ j));
}

TEST(Designs, HadamardSmall) {
  const HadamardConstruction h1 = hadamard_construction(1);
  EXPECT_EQ(h1.h, ExactMatrix::from_integers(1, {{-1, 1, 1, 1}, {1, -1, 1, 1}, {1, 1, -1, 1}, {1, 1, 1, -1}}));
  ASSERT_EQ(h1.incidence.b(), 4u);
  for (int i = 0; i < 4; ++i)
    for (int n = 0; n < 4; ++n) EXPECT_EQ(h1.incidence.blocks[i].test(n), i != n);
  const Design dual = design_from_twin(catalog(EnsembleLabel::kTetrahedron), catalog(EnsembleLabel::kTetrahedronDual));
  EXPECT_TRUE(same_row_multiset(h1.incidence, dual));
  const HadamardConstruction h2 = hadamard_construction(2);
  EXPECT_EQ(h2.incidence.v, 16);
  const BibdParams p = bibd_params(h2.incidence);
  ASSERT_TRUE(p.ok);
  const std::array<long, 3> vkl = {p.v, p.k, p.lambda};
  EXPECT_EQ(vkl, symplectic_params(2, 1));
  EXPECT_THROW(hadamard_construction(4), std::invalid_argument);
}

TEST(Designs, HadamardRowsMatchTwin) {
  const HadamardConstruction h = hadamard_construction(3);
  EXPECT_EQ(h.h.rows(), 64u);
  EXPECT_EQ(h.h * h.h.transpose(), mpq_class(64) * ExactMatrix::identity(64, 1));
  EXPECT_TRUE(same_row_multiset(h.incidence, twin()));
  EXPECT_TRUE(regular_hadamard(twin()));
  Design d = twin();
  d.blocks[3] = d.blocks[4];
  EXPECT_FALSE(same_row_multiset(h.incidence, d));
}

TEST(Designs, Hyperplanes) {
  const HyperplaneReport r = hyperplanes(twin());
  EXPECT_EQ(r.distinct.size(), 126u);
  EXPECT_EQ(r.weights, std::set<int>{32});
  EXPECT_EQ(r.multiplicities, std::set<int>{16});
}

TEST(Designs, Kantor) {
  const KantorReport r = kantor_sweep(twin());
  EXPECT_EQ(r.values, (std::set<int>{16, 20}));
  EXPECT_TRUE(r.xor_consistent);
  EXPECT_EQ(r.admissible, 124992u);
  EXPECT_EQ(r.count16, 60480u);
  EXPECT_EQ(r.count20, 64512u);
  EXPECT_EQ(r.per_pair16, std::set<std::size_t>{30});
  const int v = kantor_value(twin(), 0, 1, 2);
  EXPECT_TRUE(v == 16 || v == 20);
}

TEST(Designs, BlockFileRoundTrip) {
  std::stringstream s;
  write_blocks(s, twin());
  const Design d = read_blocks(s);
  ASSERT_EQ(d.b(), 64u);
  for (std::size_t i = 0; i < 64; ++i) EXPECT_EQ(d.blocks[i].bits, twin().blocks[i].bits);
  std::stringstream bad("0101\n011\n");
  EXPECT_THROW(read_blocks(bad), std::invalid_argument);
}
