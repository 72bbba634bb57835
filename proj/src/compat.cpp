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

#include "sicd/compat.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace sicd {
namespace {

CycNum squared_overlap(std::span<const CycNum> a, std::span<const CycNum> b) {
  const CycNum ab = inner(a, b);
  return ab * ab.conj() / (inner(a, a) * inner(b, b));
}

}  // namespace

HypothesisSet::HypothesisSet(std::vector<ProbVector> reps) : reps_(std::move(reps)) {
  if (reps_.empty()) throw std::invalid_argument("HypothesisSet: need at least one state");
  for (const auto& r : reps_)
    if (r.d() != reps_.front().d() || r.size() != reps_.front().size())
      throw std::invalid_argument("HypothesisSet: states of different dimension");
}

std::vector<int> zeros_per_outcome(const HypothesisSet& h) {
  std::vector<int> z(h.outcomes(), 0);
  for (const auto& r : h.reps())
    for (std::size_t i = 0; i < z.size(); ++i)
      if (r[i].is_zero()) ++z[i];
  return z;
}

bool pp_incompatible(const HypothesisSet& h) {
  if (h.size() < 2) throw std::invalid_argument("pp_incompatible: need at least two hypotheses");
  const auto z = zeros_per_outcome(h);
  return std::all_of(z.begin(), z.end(), [](int x) { return x > 0; });
}

HypothesisSet permute_outcomes(const HypothesisSet& h, std::span<const int> perm) {
  if (perm.size() != h.outcomes()) throw std::invalid_argument("permute_outcomes: size mismatch");
  std::vector<ProbVector> out;
  for (const auto& r : h.reps()) {
    std::vector<CycNum> v(r.size(), CycNum(r.conductor()));
    for (std::size_t i = 0; i < r.size(); ++i) v.at(perm[i]) = r[i];
    out.emplace_back(r.d(), std::move(v));
  }
  return HypothesisSet(std::move(out));
}

OdopReport pp_odop(std::span<const CycNum> a, std::span<const CycNum> b, std::span<const CycNum> c) {
  const CycNum x = squared_overlap(a, b);
  const CycNum y = squared_overlap(b, c);
  const CycNum z = squared_overlap(c, a);
  const int cond = x.conductor();
  OdopReport r;
  r.sum = x + y + z;
  const CycNum m1 = r.sum - CycNum(cond, 1L);
  r.gap = m1 * m1;
  r.product4 = x * y * z * mpq_class(4);
  r.strict = real_sign(r.sum - CycNum(cond, 1L)) < 0;
  r.squared_gap = real_sign(r.gap - r.product4) >= 0;
  r.incompatible = r.strict && r.squared_gap;
  return r;
}

bool pp_odop_criterion(std::span<const CycNum> a, std::span<const CycNum> b, std::span<const CycNum> c) {
  return pp_odop(a, b, c).incompatible;
}

std::pair<bool, bool> sic_triple_inequalities(int d) {
  if (d < 2) throw std::invalid_argument("sic_triple_inequalities: need d >= 2");
  const mpq_class o(1, d + 1);
  const mpq_class sum = 3 * o;
  const mpq_class gap = (sum - 1) * (sum - 1);
  const mpq_class prod = 4 * o * o * o;
  return {sum < 1, gap >= prod};
}

bool sic_triple_second_simplified(int d) {
  const mpq_class lhs = mpq_class((d - 2) * (d - 2));
  return lhs >= mpq_class(4, d + 1);
}

std::vector<Quartet> pph_quartets(const Design& d) {
  const std::uint64_t mask = d.mask();
  std::unordered_map<std::uint64_t, int> index;
  for (std::size_t i = 0; i < d.b(); ++i) index.emplace(d.blocks[i].bits, static_cast<int>(i));
  std::set<Quartet> found;
  const int nb = static_cast<int>(d.b());
  for (int i = 0; i < nb; ++i)
    for (int j = i + 1; j < nb; ++j)
      for (int k = j + 1; k < nb; ++k) {
        const std::uint64_t want = ~(d.blocks[i].bits ^ d.blocks[j].bits ^ d.blocks[k].bits) & mask;
        const auto it = index.find(want);
        if (it == index.end()) continue;
        const int l = it->second;
        if (l == i || l == j || l == k) continue;
        Quartet q = {i, j, k, l};
        std::sort(q.begin(), q.end());
        found.insert(q);
      }
  return {found.begin(), found.end()};
}

bool blocks_cover(const Design& d, std::span<const int> idx) {
  std::uint64_t all = d.mask();
  for (int i : idx) all &= d.blocks.at(i).bits;
  return all == 0;
}

bool quartet_covers(const Design& d, const Quartet& q) { return blocks_cover(d, q); }

BridgeReport quartet_triple_product_bridge(const std::vector<Quartet>& quartets, const TripleClass& cls) {
  BridgeReport r;
  const TripleSet s0(cls.n, cls.s_zero);
  std::set<Triple> covered;
  r.forward = true;
  for (const auto& q : quartets)
    for (int skip = 0; skip < 4; ++skip) {
      Triple t{};
      int w = 0;
      for (int a = 0; a < 4; ++a)
        if (a != skip) t[w++] = q[a];
      if (!s0.contains(t[0], t[1], t[2])) r.forward = false;
      covered.insert(t);
    }
  auto extended = [&](const std::vector<Triple>& set) {
    std::size_t n = 0;
    for (const auto& t : set)
      if (covered.count(t)) ++n;
    return n;
  };
  r.s0_extended = extended(cls.s_zero);
  r.plus_extended = extended(cls.s_plus);
  r.minus_extended = extended(cls.s_minus);
  r.reverse = r.s0_extended == cls.s_zero.size();
  return r;
}

std::map<unsigned, int> venn_regions(std::span<const std::uint64_t> supports, int outcomes) {
  if (supports.size() > 31) throw std::invalid_argument("venn_regions: too many sets");
  std::map<unsigned, int> regions;
  for (int n = 0; n < outcomes; ++n) {
    unsigned key = 0;
    for (std::size_t b = 0; b < supports.size(); ++b)
      if ((supports[b] >> n) & 1U) key |= 1U << b;
    ++regions[key];
  }
  return regions;
}

HypothesisSet hesse_example_states() {
  std::vector<ProbVector> reps;
  for (int z = 0; z < 3; ++z) {
    std::uint64_t support = 0x1FF & ~(std::uint64_t{7} << (3 * z));
    reps.push_back(ProbVector::uniform_on(3, 3, support));
  }
  return HypothesisSet(std::move(reps));
}

}  // namespace sicd
