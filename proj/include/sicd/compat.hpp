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
#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "sicd/designs.hpp"
#include "sicd/ensembles.hpp"
#include "sicd/triples.hpp"

namespace sicd {

/// States an agent is willing to entertain, as reps over one measurement.
class HypothesisSet {
 public:
  explicit HypothesisSet(std::vector<ProbVector> reps);
  const std::vector<ProbVector>& reps() const noexcept { return reps_; }
  std::size_t size() const noexcept { return reps_.size(); }
  std::size_t outcomes() const noexcept { return reps_.front().size(); }

 private:
  std::vector<ProbVector> reps_;
};

/// Number of hypotheses assigning exact zero to each outcome.
std::vector<int> zeros_per_outcome(const HypothesisSet& h);
/// Every outcome is ruled out by at least one hypothesis. Needs two or more.
bool pp_incompatible(const HypothesisSet& h);
/// Same hypotheses with outcome i moved to perm[i].
HypothesisSet permute_outcomes(const HypothesisSet& h, std::span<const int> perm);

struct OdopReport {
  CycNum sum;       // sum of the three squared overlaps
  CycNum gap;       // (sum - 1)^2
  CycNum product4;  // 4 * product of the squared overlaps
  bool strict = false;
  bool squared_gap = false;
  bool incompatible = false;
};
/// Both inequalities for three pure states in d = 3; vectors need not be
/// normalized. Equality in the second inequality counts as satisfied.
OdopReport pp_odop(std::span<const CycNum> a, std::span<const CycNum> b, std::span<const CycNum> c);
bool pp_odop_criterion(std::span<const CycNum> a, std::span<const CycNum> b, std::span<const CycNum> c);

/// Both inequalities at equal overlaps 1/(d+1), exactly.
std::pair<bool, bool> sic_triple_inequalities(int d);
/// Simplified second inequality (d - 2)^2 >= 4/(d + 1).
bool sic_triple_second_simplified(int d);

using Quartet = std::array<int, 4>;
/// Sorted quartets {i,j,k,l} with B_l = complement(B_i xor B_j xor B_k).
std::vector<Quartet> pph_quartets(const Design& d);
/// Direct test: no column is 1 in all four blocks.
bool quartet_covers(const Design& d, const Quartet& q);
/// No column is 1 in all of the given blocks.
bool blocks_cover(const Design& d, std::span<const int> idx);

struct BridgeReport {
  bool forward = false;       // all four sub-triples of every quartet lie in S0
  bool reverse = false;       // every S0 triple lies in some quartet
  std::size_t s0_extended = 0;
  std::size_t plus_extended = 0;
  std::size_t minus_extended = 0;
};
BridgeReport quartet_triple_product_bridge(const std::vector<Quartet>& quartets, const TripleClass& cls);

/// Column counts by membership pattern: key bit b set iff the column is 1
/// in supports[b]. Key 0 counts columns outside every support.
std::map<unsigned, int> venn_regions(std::span<const std::uint64_t> supports, int outcomes);

/// Three d = 3 states with zeros on {0,1,2}, {3,4,5}, {6,7,8} and 1/6 elsewhere.
HypothesisSet hesse_example_states();

}  // namespace sicd
