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

#include "sicd/finitegeo.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace sicd {

FanoElement::FanoElement(Bits3 coords, FanoKind kind) : coords_(coords), kind_(kind) {
  for (int c : coords_)
    if (c != 0 && c != 1) throw std::invalid_argument("FanoElement: coordinates must be 0 or 1");
  if (coords_ == Bits3{0, 0, 0}) throw std::invalid_argument("FanoElement: zero triple");
}

std::string FanoElement::str() const {
  std::string s;
  for (int c : coords_) s += static_cast<char>('0' + c);
  return s;
}

std::vector<FanoElement> fano_elements(FanoKind kind) {
  std::vector<FanoElement> out;
  for (int v = 1; v < 8; ++v) out.emplace_back(Bits3{(v >> 2) & 1, (v >> 1) & 1, v & 1}, kind);
  return out;
}

bool fano_incident(const FanoElement& point, const FanoElement& line) {
  if (point.kind() != FanoKind::kPoint || line.kind() != FanoKind::kLine)
    throw std::invalid_argument("fano_incident: need a point and a line");
  int s = 0;
  for (int i = 0; i < 3; ++i) s += point.coords()[i] * line.coords()[i];
  return s % 2 == 0;
}

std::vector<FanoRow> fano_table() {
  std::vector<FanoRow> rows;
  for (const auto& line : fano_elements(FanoKind::kLine)) {
    FanoRow row{line, {}};
    for (const auto& p : fano_elements(FanoKind::kPoint))
      if (fano_incident(p, line)) row.points.push_back(p);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<std::pair<FanoElement, FanoElement>> anti_flags() {
  std::vector<std::pair<FanoElement, FanoElement>> out;
  for (const auto& p : fano_elements(FanoKind::kPoint))
    for (const auto& l : fano_elements(FanoKind::kLine))
      if (!fano_incident(p, l)) out.emplace_back(p, l);
  return out;
}

std::optional<FanoElement> point_of(const PauliIndex& k) {
  const Bits3 c{k[0], k[2], k[4]};
  if (c == Bits3{0, 0, 0}) return std::nullopt;
  return FanoElement(c, FanoKind::kPoint);
}

std::optional<FanoElement> line_of(const PauliIndex& k) {
  const Bits3 c{k[1], k[3], k[5]};
  if (c == Bits3{0, 0, 0}) return std::nullopt;
  return FanoElement(c, FanoKind::kLine);
}

bool is_anti_flag(const PauliIndex& k) {
  const auto p = point_of(k);
  const auto l = line_of(k);
  return p && l && !fano_incident(*p, *l);
}

ZeroPatternReport zero_pattern_correspondence(const Block& b0) {
  ZeroPatternReport r;
  r.agree = true;
  for (int n = 0; n < 64; ++n) {
    const PauliIndex k = PauliIndex::qubits3(n);
    const bool zero = !b0.test(n);
    const bool odd = odd_parity(k);
    const bool anti = is_antisymmetric(k);
    const bool flag = is_anti_flag(k);
    r.block_zeros += zero;
    r.odd_parity += odd;
    r.antisymmetric += anti;
    r.anti_flags += flag;
    if (!(zero == odd && odd == anti && anti == flag)) {
      r.agree = false;
      r.disagreements.push_back(n);
    }
  }
  return r;
}

Block block_from_parity() {
  Block b;
  b.origin = 0;
  for (int n = 0; n < 64; ++n)
    if (!odd_parity(PauliIndex::qubits3(n))) b.bits |= std::uint64_t{1} << n;
  return b;
}

bool translation_covariance(const Design& d) {
  if (d.v != 64 || d.b() != 64) return false;
  const Block& b0 = d.blocks[0];
  for (int j = 0; j < 64; ++j)
    for (int n = 0; n < 64; ++n)
      if (d.blocks[j].test(n) != b0.test(n ^ j)) return false;
  return true;
}

GossetPolytope gosset_polytope() {
  GossetPolytope g;
  std::array<int, 8> seed = {-1, -1, -1, -1, -1, -1, 3, 3};
  do {
    g.vertices.push_back(seed);
    std::array<int, 8> neg;
    std::transform(seed.begin(), seed.end(), neg.begin(), [](int x) { return -x; });
    g.vertices.push_back(neg);
  } while (std::next_permutation(seed.begin(), seed.end()));
  std::sort(g.vertices.begin(), g.vertices.end());
  g.vertices.erase(std::unique(g.vertices.begin(), g.vertices.end()), g.vertices.end());

  auto dot = [](const std::array<int, 8>& a, const std::array<int, 8>& b) {
    return std::inner_product(a.begin(), a.end(), b.begin(), 0L);
  };
  g.orthogonal_to_ones = std::all_of(g.vertices.begin(), g.vertices.end(), [](const auto& v) {
    return std::accumulate(v.begin(), v.end(), 0) == 0;
  });
  const int nv = static_cast<int>(g.vertices.size());
  for (int a = 0; a < nv; ++a)
    for (int b = a + 1; b < nv; ++b) {
      bool antipodal = true;
      for (int i = 0; i < 8; ++i) antipodal = antipodal && g.vertices[a][i] == -g.vertices[b][i];
      if (antipodal) g.lines.emplace_back(a, b);
    }
  for (std::size_t x = 0; x < g.lines.size(); ++x)
    for (std::size_t y = x + 1; y < g.lines.size(); ++y) {
      const auto& u = g.vertices[g.lines[x].first];
      const auto& w = g.vertices[g.lines[y].first];
      const long uw = dot(u, w);
      mpq_class c2(uw * uw, dot(u, u) * dot(w, w));
      c2.canonicalize();
      g.squared_cosines.insert(c2);
    }
  return g;
}

}  // namespace sicd
