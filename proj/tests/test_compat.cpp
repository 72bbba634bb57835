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

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>

#include "sicd/compat.hpp"

using namespace sicd;

namespace {

const Design& twin() {
  static const Design d =
      design_from_twin(catalog(EnsembleLabel::kHoggar), catalog(EnsembleLabel::kHoggarTwin));
  return d;
}

const std::vector<ProbVector>& twin_reps() {
  static const std::vector<ProbVector> reps =
      cross_reps(catalog(EnsembleLabel::kHoggar), catalog(EnsembleLabel::kHoggarTwin));
  return reps;
}

const TripleClass& cls() {
  static const TripleClass c = classify(TripleTable::build(catalog(EnsembleLabel::kHoggar), 4));
  return c;
}

const std::vector<Quartet>& quartets() {
  static const std::vector<Quartet> q = pph_quartets(twin());
  return q;
}

HypothesisSet twin_subset(std::initializer_list<int> idx) {
  std::vector<ProbVector> reps;
  for (int i : idx) reps.push_back(twin_reps()[i]);
  return HypothesisSet(std::move(reps));
}

std::vector<CycNum> basis(int d, int i, int conductor) {
  std::vector<CycNum> v(d, CycNum(conductor));
  v[i] = CycNum(conductor, 1L);
  return v;
}

}  // namespace

TEST(Compat, HesseExample) {
  const HypothesisSet h = hesse_example_states();
  ASSERT_EQ(h.size(), 3u);
  EXPECT_TRUE(pp_incompatible(h));
  EXPECT_EQ(zeros_per_outcome(h), std::vector<int>(9, 1));
}

TEST(Compat, HesseSupportsOverlapInPairs) {
  const HypothesisSet h = hesse_example_states();
  std::vector<std::uint64_t> s;
  for (const auto& r : h.reps()) s.push_back(r.support());
  const auto regions = venn_regions(s, 9);
  for (const auto& [key, count] : regions) {
    EXPECT_EQ(std::popcount(key), 2) << key;
    EXPECT_EQ(count, 3);
  }
}

TEST(Compat, SicStatesAreCompatible) {
  EXPECT_FALSE(pp_incompatible(twin_subset({0, 1})));
  EXPECT_FALSE(pp_incompatible(twin_subset({5, 40})));
  EXPECT_FALSE(pp_incompatible(twin_subset({0, 1, 2})));
  EXPECT_FALSE(pp_incompatible(twin_subset({7, 19, 63})));
  const SicEnsemble& h = catalog(EnsembleLabel::kHoggar);
  std::vector<ProbVector> own;
  for (int j = 0; j < 3; ++j) own.push_back(sic_rep(h.projector(j), h));
  EXPECT_FALSE(pp_incompatible(HypothesisSet(own)));
  EXPECT_THROW(pp_incompatible(twin_subset({0})), std::invalid_argument);
}

TEST(Compat, Monotone) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> u(0, 63);
  for (int s = 0; s < 200; ++s) {
    std::vector<ProbVector> reps = {twin_reps()[u(rng)], twin_reps()[u(rng)]};
    bool before = pp_incompatible(HypothesisSet(reps));
    for (int add = 0; add < 4; ++add) {
      reps.push_back(twin_reps()[u(rng)]);
      const bool after = pp_incompatible(HypothesisSet(reps));
      if (before) EXPECT_TRUE(after);
      before = after;
    }
  }
}

TEST(Compat, PermutationCovariance) {
  std::mt19937_64 rng(6);
  std::vector<int> perm(64);
  std::iota(perm.begin(), perm.end(), 0);
  const Quartet& q = quartets().front();
  const HypothesisSet inc = twin_subset({q[0], q[1], q[2], q[3]});
  const HypothesisSet com = twin_subset({q[0], q[1], q[2]});
  for (int s = 0; s < 10; ++s) {
    std::shuffle(perm.begin(), perm.end(), rng);
    EXPECT_TRUE(pp_incompatible(permute_outcomes(inc, perm)));
    EXPECT_FALSE(pp_incompatible(permute_outcomes(com, perm)));
  }
}

TEST(Compat, OdopHesseBoundary) {
  const SicEnsemble& e = catalog(EnsembleLabel::kHesse);
  const OdopReport r = pp_odop(e.vectors()[0], e.vectors()[1], e.vectors()[2]);
  EXPECT_EQ(r.sum, CycNum(3, mpq_class(3, 4)));
  EXPECT_EQ(r.gap, CycNum(3, mpq_class(1, 16)));
  EXPECT_EQ(r.product4, CycNum(3, mpq_class(1, 16)));
  EXPECT_TRUE(r.strict);
  EXPECT_TRUE(r.squared_gap);
  EXPECT_TRUE(pp_odop_criterion(e.vectors()[0], e.vectors()[1], e.vectors()[2]));
}

TEST(Compat, OdopCopiesAndBases) {
  const SicEnsemble& e = catalog(EnsembleLabel::kHesse);
  EXPECT_FALSE(pp_odop_criterion(e.vectors()[4], e.vectors()[4], e.vectors()[4]));
  const auto a = basis(3, 0, 3), b = basis(3, 1, 3), c = basis(3, 2, 3);
  const OdopReport r = pp_odop(a, b, c);
  EXPECT_TRUE(r.sum.is_zero());
  EXPECT_TRUE(r.gap.is_one());
  EXPECT_TRUE(r.incompatible);
}

TEST(Compat, SicTripleInequalities) {
  EXPECT_FALSE(sic_triple_inequalities(2).first);
  for (int d = 3; d <= 8; ++d) {
    const auto [first, second] = sic_triple_inequalities(d);
    EXPECT_TRUE(first) << d;
    EXPECT_TRUE(second) << d;
    EXPECT_EQ(second, sic_triple_second_simplified(d)) << d;
  }
  EXPECT_EQ(sic_triple_inequalities(2).second, sic_triple_second_simplified(2));
}

TEST(Compat, ReferenceQuartet) {
  const Quartet ref = {0, 1, 2, 3};
  EXPECT_TRUE(quartet_covers(twin(), ref));
  EXPECT_NE(std::find(quartets().begin(), quartets().end(), ref), quartets().end());
  EXPECT_TRUE(pp_incompatible(twin_subset({0, 1, 2, 3})));
  for (int drop = 0; drop < 4; ++drop) {
    std::vector<int> three;
    for (int i = 0; i < 4; ++i)
      if (i != drop) three.push_back(i);
    EXPECT_FALSE(blocks_cover(twin(), three));
    EXPECT_FALSE(pp_incompatible(twin_subset({three[0], three[1], three[2]})));
  }
}

TEST(Compat, QuartetsMatchExhaustiveSearch) {
  EXPECT_EQ(quartets().size(), 5376u);
  std::set<Quartet> brute;
  const auto& b = twin().blocks;
  for (int i = 0; i < 64; ++i)
    for (int j = i + 1; j < 64; ++j)
      for (int k = j + 1; k < 64; ++k) {
        const std::uint64_t ijk = b[i].bits & b[j].bits & b[k].bits;
        if (ijk == 0) ADD_FAILURE() << "three blocks cover: " << i << " " << j << " " << k;
        for (int l = k + 1; l < 64; ++l)
          if ((ijk & b[l].bits) == 0) brute.insert({i, j, k, l});
      }
  EXPECT_EQ(std::set<Quartet>(quartets().begin(), quartets().end()), brute);
}

TEST(Compat, Bridge) {
  const BridgeReport r = quartet_triple_product_bridge(quartets(), cls());
  EXPECT_TRUE(r.forward);
  EXPECT_TRUE(r.reverse);
  EXPECT_EQ(r.s0_extended, 21504u);
  EXPECT_EQ(r.plus_extended, 0u);
  EXPECT_EQ(r.minus_extended, 0u);
}

TEST(Compat, VennRegions) {
  std::vector<std::uint64_t> s;
  for (int i = 0; i < 4; ++i) s.push_back(twin().blocks[i].bits);
  const auto regions = venn_regions(s, 64);
  EXPECT_EQ(regions.count(0xF), 0u);
  for (const auto& [key, count] : regions) {
    if (std::popcount(key) == 3) EXPECT_EQ(count, 10) << key;
    else if (std::popcount(key) == 1) EXPECT_EQ(count, 6) << key;
    else ADD_FAILURE() << "unexpected region " << key << " with " << count;
  }
  for (int b = 0; b < 4; ++b) {
    int total = 0;
    for (const auto& [key, count] : regions)
      if ((key >> b) & 1U) total += count;
    EXPECT_EQ(total, 36);
  }
}
