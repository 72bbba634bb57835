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

#include "sicd/designs.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <unordered_set>

namespace sicd {
namespace {

long ipow(long b, int e) {
  long r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

}  // namespace

int Block::weight() const { return std::popcount(bits); }

std::string Block::str(int v) const {
  std::string s(v, '0');
  for (int n = 0; n < v; ++n)
    if (test(n)) s[n] = '1';
  return s;
}

Block Block::parse(const std::string& s, int origin) {
  if (s.size() > 64) throw std::invalid_argument("block string longer than 64");
  Block b;
  b.origin = origin;
  for (std::size_t n = 0; n < s.size(); ++n) {
    if (s[n] == '1')
      b.bits |= std::uint64_t{1} << n;
    else if (s[n] != '0')
      throw std::invalid_argument("block string may only contain 0 and 1");
  }
  return b;
}

std::uint64_t Design::mask() const {
  return v >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << v) - 1;
}

std::vector<ProbVector> cross_reps(const SicEnsemble& base, const SicEnsemble& other) {
  if (base.d() != other.d() || base.conductor() != other.conductor())
    throw std::invalid_argument("cross_reps: ensembles differ in dimension or conductor");
  std::vector<ProbVector> reps;
  reps.reserve(other.size());
  for (const auto& p : other.projectors()) reps.push_back(sic_rep(p, base));
  return reps;
}

Design design_from_twin(const SicEnsemble& base, const SicEnsemble& other) {
  if (base.size() > 64) throw std::invalid_argument("design_from_twin: at most 64 points");
  const long d = base.d();
  const CycNum level(base.conductor(), mpq_class(2, d * (d + 1)));
  Design out;
  out.v = static_cast<int>(base.size());
  const auto reps = cross_reps(base, other);
  for (std::size_t i = 0; i < reps.size(); ++i) {
    Block b;
    b.origin = static_cast<int>(i);
    for (std::size_t n = 0; n < reps[i].size(); ++n) {
      const CycNum& x = reps[i][n];
      if (x.is_zero()) continue;
      if (x != level)
        throw InvariantViolation("state " + std::to_string(i) + " has entry " + x.str() +
                                 " at outcome " + std::to_string(n) + ", expected 0 or " +
                                 level.str());
      b.bits |= std::uint64_t{1} << n;
    }
    out.blocks.push_back(b);
  }
  return out;
}

Design design_from_triples(int n, const std::vector<Triple>& triples) {
  if (n > 64) throw std::invalid_argument("design_from_triples: at most 64 points");
  Design out;
  out.v = n;
  out.blocks.reserve(triples.size());
  int i = 0;
  for (const auto& t : triples) {
    Block b;
    b.origin = i++;
    for (int x : t) b.bits |= std::uint64_t{1} << x;
    out.blocks.push_back(b);
  }
  return out;
}

BibdParams bibd_params(const Design& d) {
  BibdParams p;
  p.v = d.v;
  p.b = static_cast<long>(d.b());
  if (d.blocks.empty()) {
    p.failure = "no blocks";
    return p;
  }
  const std::uint64_t mask = d.mask();
  p.k = d.blocks.front().weight();
  for (const auto& b : d.blocks) {
    if (b.bits & ~mask) {
      p.failure = "block " + std::to_string(b.origin) + " has points outside the point set";
      return p;
    }
    if (b.weight() != p.k) {
      p.failure = "block size not constant: block " + std::to_string(b.origin) + " has " +
                  std::to_string(b.weight()) + ", expected " + std::to_string(p.k);
      return p;
    }
  }
  std::vector<long> rep(d.v, 0);
  std::vector<long> pairs(static_cast<std::size_t>(d.v) * d.v, 0);
  for (const auto& b : d.blocks) {
    std::vector<int> pts;
    for (int n = 0; n < d.v; ++n)
      if (b.test(n)) pts.push_back(n);
    for (std::size_t a = 0; a < pts.size(); ++a) {
      ++rep[pts[a]];
      for (std::size_t c = a + 1; c < pts.size(); ++c) ++pairs[static_cast<std::size_t>(pts[a]) * d.v + pts[c]];
    }
  }
  p.r = rep[0];
  for (int n = 0; n < d.v; ++n)
    if (rep[n] != p.r) {
      p.failure = "replication not constant: point " + std::to_string(n) + " lies in " +
                  std::to_string(rep[n]) + " blocks, expected " + std::to_string(p.r);
      return p;
    }
  p.lambda = d.v > 1 ? pairs[1] : 0;
  for (int x = 0; x < d.v; ++x)
    for (int y = x + 1; y < d.v; ++y)
      if (pairs[static_cast<std::size_t>(x) * d.v + y] != p.lambda) {
        p.failure = "pair count not constant: points (" + std::to_string(x) + "," + std::to_string(y) +
                    ") lie together in " + std::to_string(pairs[static_cast<std::size_t>(x) * d.v + y]) +
                    " blocks, expected " + std::to_string(p.lambda);
        return p;
      }
  if (p.b * p.k != p.v * p.r) {
    p.failure = "bk != vr";
    return p;
  }
  if (p.lambda * (p.v - 1) != p.r * (p.k - 1)) {
    p.failure = "lambda(v-1) != r(k-1)";
    return p;
  }
  p.ok = true;
  return p;
}

Design complement(const Design& d) {
  Design out = d;
  const std::uint64_t mask = d.mask();
  for (auto& b : out.blocks) b.bits = ~b.bits & mask;
  return out;
}

bool complement_law(const BibdParams& before, const BibdParams& after) {
  return before.ok && after.ok && after.v == before.v && after.b == before.b &&
         after.k == before.v - before.k && after.r == before.b - before.r &&
         after.lambda == before.lambda + before.b - 2 * before.r;
}

std::array<long, 3> symplectic_params(int m, int eps) {
  const long half = ipow(2, m - 1);
  return {ipow(2, 2 * m), ipow(2, 2 * m - 1) + eps * half, ipow(2, 2 * m - 2) + eps * half};
}

std::array<long, 3> hadamard_family(long u) { return {4 * u * u, 2 * u * u - u, u * u - u}; }

SdpReport sdp_check(const Design& d) {
  SdpReport rep;
  const std::uint64_t mask = d.mask();
  std::unordered_set<std::uint64_t> blocks, comps;
  for (const auto& b : d.blocks) {
    blocks.insert(b.bits);
    comps.insert(~b.bits & mask);
  }
  const std::size_t nb = d.b();
  rep.holds = true;
  for (std::size_t i = 0; i < nb; ++i)
    for (std::size_t j = i + 1; j < nb; ++j) {
      const std::uint64_t ij = d.blocks[i].bits ^ d.blocks[j].bits;
      for (std::size_t k = j + 1; k < nb; ++k) {
        const std::uint64_t x = ij ^ d.blocks[k].bits;
        ++rep.triples_checked;
        if (blocks.count(x))
          ++rep.as_block;
        else if (comps.count(x))
          ++rep.as_complement;
        else
          rep.holds = false;
      }
    }
  const BibdParams p = bibd_params(d);
  const BibdParams q = bibd_params(complement(d));
  for (int m = 1; m <= 3; ++m) {
    const auto want = symplectic_params(m, -1);
    auto match = [&](const BibdParams& x) {
      return x.ok && x.v == want[0] && x.k == want[1] && x.lambda == want[2];
    };
    if (match(p) || match(q)) {
      rep.parameter_condition = true;
      rep.m = m;
    }
  }
  return rep;
}

HadamardConstruction hadamard_construction(int m) {
  if (m < 1 || m > 3) throw std::invalid_argument("hadamard_construction: need 1 <= m <= 3");
  const ExactMatrix h2 =
      ExactMatrix::from_integers(1, {{-1, 1, 1, 1}, {1, -1, 1, 1}, {1, 1, -1, 1}, {1, 1, 1, -1}});
  ExactMatrix h = h2;
  for (int i = 1; i < m; ++i) h = mat_kron(h, h2);
  const std::size_t v = h.rows();
  Design inc;
  inc.v = static_cast<int>(v);
  const CycNum one(1, 1L);
  for (std::size_t r = 0; r < v; ++r) {
    Block b;
    b.origin = static_cast<int>(r);
    for (std::size_t c = 0; c < v; ++c)
      if (h(r, c) == one) b.bits |= std::uint64_t{1} << c;
    inc.blocks.push_back(b);
  }
  return {std::move(h), std::move(inc)};
}

bool same_row_multiset(const Design& a, const Design& b) {
  if (a.v != b.v || a.b() != b.b()) return false;
  std::vector<std::uint64_t> x, y;
  for (const auto& blk : a.blocks) x.push_back(blk.bits);
  for (const auto& blk : b.blocks) y.push_back(blk.bits);
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  return x == y;
}

bool regular_hadamard(const Design& d) {
  if (d.b() != static_cast<std::size_t>(d.v)) return false;
  const int row_sum = 2 * d.blocks.front().weight() - d.v;
  for (const auto& b : d.blocks)
    if (2 * b.weight() - d.v != row_sum) return false;
  const std::uint64_t mask = d.mask();
  for (std::size_t i = 0; i < d.b(); ++i)
    for (std::size_t j = 0; j < d.b(); ++j) {
      const int agree = d.v - std::popcount((d.blocks[i].bits ^ d.blocks[j].bits) & mask);
      const int dot = agree - (d.v - agree);
      if (dot != (i == j ? d.v : 0)) return false;
    }
  return true;
}

HyperplaneReport hyperplanes(const Design& d) {
  HyperplaneReport rep;
  for (std::size_t i = 0; i < d.b(); ++i)
    for (std::size_t j = i + 1; j < d.b(); ++j) {
      const std::uint64_t x = d.blocks[i].bits ^ d.blocks[j].bits;
      rep.distinct.insert(x);
      ++rep.multiplicity[x];
    }
  for (auto x : rep.distinct) rep.weights.insert(std::popcount(x));
  for (const auto& [x, m] : rep.multiplicity) rep.multiplicities.insert(m);
  return rep;
}

int kantor_value(const Design& d, int i, int j, int k) {
  if (i == j || k == i || k == j) throw std::invalid_argument("kantor_value: need i != j, k not in {i, j}");
  const auto& b = d.blocks;
  return std::popcount((b.at(i).bits ^ b.at(j).bits) & b.at(k).bits);
}

KantorReport kantor_sweep(const Design& d) {
  KantorReport rep;
  const std::uint64_t mask = d.mask();
  std::unordered_set<std::uint64_t> blocks, comps;
  for (const auto& b : d.blocks) {
    blocks.insert(b.bits);
    comps.insert(~b.bits & mask);
  }
  const int nb = static_cast<int>(d.b());
  for (int i = 0; i < nb; ++i)
    for (int j = i + 1; j < nb; ++j) {
      std::size_t n16 = 0;
      for (int k = 0; k < nb; ++k) {
        if (k == i || k == j) continue;
        const int v = kantor_value(d, i, j, k);
        ++rep.admissible;
        rep.values.insert(v);
        const std::uint64_t x = d.blocks[i].bits ^ d.blocks[j].bits ^ d.blocks[k].bits;
        if (v == 16) {
          ++rep.count16;
          ++n16;
          if (!blocks.count(x)) rep.xor_consistent = false;
        } else if (v == 20) {
          ++rep.count20;
          if (!comps.count(x)) rep.xor_consistent = false;
        }
      }
      rep.per_pair16.insert(n16);
    }
  return rep;
}

void write_blocks(std::ostream& os, const Design& d) {
  for (const auto& b : d.blocks) os << b.str(d.v) << '\n';
}

Design read_blocks(std::istream& is) {
  Design d;
  d.v = -1;
  std::string line;
  int i = 0;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (d.v < 0) d.v = static_cast<int>(line.size());
    if (static_cast<int>(line.size()) != d.v)
      throw std::invalid_argument("block file: line " + std::to_string(i + 1) + " has a different length");
    d.blocks.push_back(Block::parse(line, i++));
  }
  if (d.v < 0) d.v = 0;
  return d;
}

const std::array<std::string, 4>& reference_quartet() {
  static const std::array<std::string, 4> rows = {
      "1110111011100001111011101110000111101110111000010001000100011110",
      "1101110111010010110111011101001011011101110100100010001000101101",
      "1011101110110100101110111011010010111011101101000100010001001011",
      "0111011101111000011101110111100001110111011110001000100010000111"};
  return rows;
}

}  // namespace sicd
