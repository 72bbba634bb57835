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
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "sicd/ensembles.hpp"
#include "sicd/triples.hpp"

namespace sicd {

/// Support pattern of one state on up to 64 points: bit n is point n.
struct Block {
  std::uint64_t bits = 0;
  int origin = -1;

  bool test(int n) const { return (bits >> n) & 1U; }
  int weight() const;
  /// First `v` characters, char n = bit n.
  std::string str(int v = 64) const;
  static Block parse(const std::string& s, int origin = -1);
};

struct Design {
  int v = 64;
  std::vector<Block> blocks;

  std::size_t b() const noexcept { return blocks.size(); }
  std::uint64_t mask() const;
};

/// Representations of every `other` projector against `base`.
std::vector<ProbVector> cross_reps(const SicEnsemble& base, const SicEnsemble& other);

/// Block i has bit n set iff tr(Pi_n pi_i) != 0 for Pi in `base`, pi in
/// `other`. Every rep entry must be exactly 0 or 2/(d(d+1)); anything
/// else throws InvariantViolation.
Design design_from_twin(const SicEnsemble& base, const SicEnsemble& other);

/// Design on n points whose blocks are the given triples.
Design design_from_triples(int n, const std::vector<Triple>& triples);

struct BibdParams {
  bool ok = false;
  long v = 0, b = 0, k = 0, r = 0, lambda = 0;
  /// Empty when ok; otherwise the first violated condition.
  std::string failure;
};
BibdParams bibd_params(const Design& d);

Design complement(const Design& d);
/// lambda' = lambda + b - 2r together with k' = v - k and r' = b - r.
bool complement_law(const BibdParams& before, const BibdParams& after);

/// Symplectic design parameters (v, k, lambda) for S^eps(2m).
std::array<long, 3> symplectic_params(int m, int eps);
/// (4u^2, 2u^2 - u, u^2 - u).
std::array<long, 3> hadamard_family(long u);

struct SdpReport {
  bool holds = false;
  std::size_t triples_checked = 0;
  std::size_t as_block = 0;
  std::size_t as_complement = 0;
  /// Design or its complement has v = 4^m, k = 2^(2m-1) - 2^(m-1), lambda = 2^(2m-2) - 2^(m-1).
  bool parameter_condition = false;
  int m = 0;
};
SdpReport sdp_check(const Design& d);

struct HadamardConstruction {
  ExactMatrix h;
  Design incidence;
};
/// H = H2^(x)m with H2 = J - 2I, incidence (H + J)/2. Needs 1 <= m <= 3.
HadamardConstruction hadamard_construction(int m);

/// Equality of the sorted block words.
bool same_row_multiset(const Design& a, const Design& b);

/// 2N - J has constant row sums and (2N - J)(2N - J)^T = v I.
bool regular_hadamard(const Design& d);

struct HyperplaneReport {
  std::set<std::uint64_t> distinct;
  std::map<std::uint64_t, int> multiplicity;
  std::set<int> weights;
  std::set<int> multiplicities;
};
HyperplaneReport hyperplanes(const Design& d);

/// |(B_i xor B_j) and B_k|; needs i != j and k outside {i, j}.
int kantor_value(const Design& d, int i, int j, int k);

struct KantorReport {
  std::size_t admissible = 0;
  std::set<int> values;
  std::size_t count16 = 0;
  std::size_t count20 = 0;
  /// Value 16 iff the three-block XOR is a block, value 20 iff it is a block complement.
  bool xor_consistent = true;
  /// For fixed {i, j}: sizes of {k : value 16} seen over all pairs.
  std::set<std::size_t> per_pair16;
};
KantorReport kantor_sweep(const Design& d);

void write_blocks(std::ostream& os, const Design& d);
/// One 0/1 string per line; all lines must have the same length <= 64.
Design read_blocks(std::istream& is);

/// Support patterns of twin states 0..3, the reference PP-H quartet.
const std::array<std::string, 4>& reference_quartet();

}  // namespace sicd
