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
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "sicd/designs.hpp"
#include "sicd/heisenberg.hpp"

namespace sicd {

using Bits3 = std::array<int, 3>;
enum class FanoKind { kPoint, kLine };

/// Nonzero triple over Z_2 labelling a point or a line of the Fano plane.
class FanoElement {
 public:
  FanoElement(Bits3 coords, FanoKind kind);
  const Bits3& coords() const noexcept { return coords_; }
  FanoKind kind() const noexcept { return kind_; }
  /// "010" for coords (0, 1, 0).
  std::string str() const;
  bool operator==(const FanoElement& o) const = default;

 private:
  Bits3 coords_;
  FanoKind kind_;
};

/// The seven elements of one kind, coords read as a binary number 1..7.
std::vector<FanoElement> fano_elements(FanoKind kind);
/// Z_2 dot product of the coordinates is 0.
bool fano_incident(const FanoElement& point, const FanoElement& line);

struct FanoRow {
  FanoElement line;
  std::vector<FanoElement> points;
};
/// For each line, its incident points.
std::vector<FanoRow> fano_table();
/// (point, line) pairs that are not incident.
std::vector<std::pair<FanoElement, FanoElement>> anti_flags();

/// Point (k0, k2, k4) and line (k1, k3, k5) of a three-qubit index; empty
/// when the triple is zero.
std::optional<FanoElement> point_of(const PauliIndex& k);
std::optional<FanoElement> line_of(const PauliIndex& k);
/// Both labels exist and are not incident.
bool is_anti_flag(const PauliIndex& k);

struct ZeroPatternReport {
  bool agree = false;
  int block_zeros = 0;
  int odd_parity = 0;
  int antisymmetric = 0;
  int anti_flags = 0;
  std::vector<int> disagreements;
};
/// Index-by-index comparison of B(n) = 0, odd parity of n, transpose(D_n) = -D_n
/// and the anti-flag label of n.
ZeroPatternReport zero_pattern_correspondence(const Block& b0);

/// Block with bit n = 0 exactly when n has odd parity.
Block block_from_parity();
/// Block j equals block 0 read at n xor j, for every j.
bool translation_covariance(const Design& d);

struct GossetPolytope {
  std::vector<std::array<int, 8>> vertices;
  /// Antipodal vertex pairs (a, b) with a < b.
  std::vector<std::pair<int, int>> lines;
  bool orthogonal_to_ones = false;
  /// Squared cosines between distinct lines.
  std::set<mpq_class> squared_cosines;
};
GossetPolytope gosset_polytope();

}  // namespace sicd
