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

#include "sicd/triples.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "sicd/parallel.hpp"

namespace sicd {
namespace {


// Sorts (j, k, l) in place and returns the parity of the permutation used.
bool sort3(int& a, int& b, int& c) {
  bool odd = false;
  if (a > b) { std::swap(a, b); odd = !odd; }
  if (b > c) { std::swap(b, c); odd = !odd; }
  if (a > b) { std::swap(a, b); odd = !odd; }
  return odd;
}

}  // namespace

TripleProduct triple_product(const SicEnsemble& e, int j, int k, int l) {
  const int n = static_cast<int>(e.size());
  if (j < 0 || k < 0 || l < 0 || j >= n || k >= n || l >= n)
    throw std::out_of_range("triple_product: index out of range");
  const ExactMatrix jk = e.projector(j) * e.projector(k);
  CycNum t = trace_of_product(jk, e.projector(l));
  CycNum c = t.real_part();
  return {std::move(t), std::move(c)};
}

TripleTable TripleTable::build(const SicEnsemble& e, int jobs) {
  TripleTable tt;
  const int n = static_cast<int>(e.size());
  tt.n_ = n;
  tt.d_ = e.d();
  tt.conductor_ = e.conductor();
  const std::size_t nn = static_cast<std::size_t>(n);

  std::vector<CycNum> inv_norm;
  for (std::size_t j = 0; j < nn; ++j) inv_norm.push_back(e.norm(j).inverse());

  tt.pair_.assign(nn * nn, CycNum(tt.conductor_));
  for (std::size_t j = 0; j < nn; ++j)
    for (std::size_t k = 0; k < nn; ++k)
      tt.pair_[j * nn + k] = e.overlap(j, k) * e.overlap(k, j) * inv_norm[j] * inv_norm[k];

  tt.offset_.assign(nn * nn, 0);
  std::vector<std::size_t> start(nn, 0);
  std::size_t r = 0;
  for (int j = 0; j < n; ++j) {
    start[j] = r;
    for (int k = j + 1; k < n; ++k) {
      tt.offset_[static_cast<std::size_t>(j) * nn + k] = r;
      for (int l = k + 1; l < n; ++l) {
        tt.triples_.push_back({j, k, l});
        ++r;
      }
    }
  }
  tt.t_.assign(r, CycNum(tt.conductor_));
  tt.c_.assign(r, CycNum(tt.conductor_));

  parallel_for(nn, jobs, [&](std::size_t j) {
    std::size_t pos = start[j];
    for (std::size_t k = j + 1; k < nn; ++k) {
      const CycNum jk = e.overlap(j, k) * inv_norm[j] * inv_norm[k];
      for (std::size_t l = k + 1; l < nn; ++l, ++pos) {
        CycNum t = jk * e.overlap(k, l) * e.overlap(l, j) * inv_norm[l];
        tt.c_[pos] = t.real_part();
        tt.t_[pos] = std::move(t);
      }
    }
  });

  tt.rational_ = true;
  for (const auto& c : tt.c_) tt.rational_ = tt.rational_ && c.is_rational();
  for (const auto& p : tt.pair_) tt.rational_ = tt.rational_ && p.is_rational();
  if (tt.rational_) {
    for (const auto& c : tt.c_) tt.c_rational_.push_back(c.rational());
    for (const auto& p : tt.pair_) tt.pair_rational_.push_back(p.rational());
  }
  return tt;
}

std::size_t TripleTable::rank(int j, int k, int l) const {
  sort3(j, k, l);
  if (j < 0 || l >= n_ || j == k || k == l)
    throw std::invalid_argument("TripleTable::rank: need distinct indices in range");
  return offset_[static_cast<std::size_t>(j) * n_ + k] + static_cast<std::size_t>(l - k - 1);
}

CycNum TripleTable::complex_value(int j, int k, int l) const {
  int a = j, b = k, c = l;
  const bool odd = sort3(a, b, c);
  const CycNum& t = t_[rank(a, b, c)];
  return odd ? t.conj() : t;
}

CycNum TripleTable::value(int j, int k, int l) const {
  if (j == k && k == l) return CycNum(conductor_, 1L);
  if (j == k || j == l) return pair(j, j == k ? l : k);
  if (k == l) return pair(j, k);
  return c_[rank(j, k, l)];
}

TripleClass classify(const TripleTable& table) {
  if (table.d() != 8 || table.n() != 64)
    throw InvariantViolation("classify: expects the d = 8 Hoggar table");
  const CycNum plus(table.conductor(), mpq_class(1, 27));
  const CycNum minus(table.conductor(), mpq_class(-1, 27));
  TripleClass out;
  out.n = table.n();
  for (std::size_t r = 0; r < table.triple_count(); ++r) {
    const CycNum& c = table.sorted_value(r);
    const Triple& t = table.triples()[r];
    if (c.is_zero())
      out.s_zero.push_back(t);
    else if (c == plus)
      out.s_plus.push_back(t);
    else if (c == minus)
      out.s_minus.push_back(t);
    else
      throw InvariantViolation("triple (" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," +
                               std::to_string(t[2]) + ") has value " + c.str() +
                               ", expected 0 or +-1/27");
  }
  return out;
}

std::vector<long> point_counts(const std::vector<Triple>& triples, int n) {
  std::vector<long> c(n, 0);
  for (const auto& t : triples)
    for (int x : t) ++c.at(x);
  return c;
}

std::vector<long> pair_counts(const std::vector<Triple>& triples, int n) {
  std::vector<long> c(static_cast<std::size_t>(n) * n, 0);
  auto bump = [&](int a, int b) {
    ++c.at(static_cast<std::size_t>(a) * n + b);
    ++c.at(static_cast<std::size_t>(b) * n + a);
  };
  for (const auto& t : triples) {
    bump(t[0], t[1]);
    bump(t[0], t[2]);
    bump(t[1], t[2]);
  }
  return c;
}

TripleSet::TripleSet(int n, const std::vector<Triple>& triples)
    : n_(n), bits_((static_cast<std::size_t>(n) * n * n + 63) / 64, 0) {
  for (const auto& t : triples) {
    int a = t[0], b = t[1], c = t[2];
    sort3(a, b, c);
    if (a < 0 || c >= n || a == b || b == c)
      throw std::invalid_argument("TripleSet: triple out of range or with repeats");
    const std::size_t i = (static_cast<std::size_t>(a) * n + b) * n + c;
    if (!((bits_[i / 64] >> (i % 64)) & 1U)) ++size_;
    bits_[i / 64] |= std::uint64_t{1} << (i % 64);
  }
}

bool TripleSet::contains(int a, int b, int c) const {
  sort3(a, b, c);
  if (a < 0 || c >= n_ || a == b || b == c) return false;
  const std::size_t i = (static_cast<std::size_t>(a) * n_ + b) * n_ + c;
  return (bits_[i / 64] >> (i % 64)) & 1U;
}

std::size_t two_graph_violations(const TripleSet& t) {
  const int n = t.n();
  std::size_t bad = 0;
  for (int p = 0; p < n; ++p)
    for (int q = p + 1; q < n; ++q)
      for (int r = q + 1; r < n; ++r)
        for (int s = r + 1; s < n; ++s) {
          const std::array<int, 4> v = {p, q, r, s};
          bool ok = true;
          for (int a = 0; a < 4 && ok; ++a) {
            // a plays the role of p in the axiom; x, y, z are the others.
            const int x = v[(a + 1) % 4], y = v[(a + 2) % 4], z = v[(a + 3) % 4];
            const bool t1 = t.contains(v[a], x, y);
            const bool t2 = t.contains(v[a], x, z);
            const bool t3 = t.contains(v[a], y, z);
            const bool opp = t.contains(x, y, z);
            if (t1 && t2 && t3 && !opp) ok = false;
            if (!t1 && !t2 && !t3 && opp) ok = false;
          }
          if (!ok) ++bad;
        }
  return bad;
}

bool two_graph_check(const TripleSet& t) { return two_graph_violations(t) == 0; }

std::map<std::string, int> C01Cube::histogram() const {
  std::map<std::string, int> h;
  for (const auto& v : values) ++h[to_string(v)];
  return h;
}

std::string C01Cube::text_art() const {
  std::ostringstream os;
  const mpq_class r(1, 9), plus(1, 27), minus(-1, 27);
  for (int s1 = 0; s1 < 4; ++s1) {
    os << "s1=" << s1 << "\n";
    for (int s2 = 0; s2 < 4; ++s2) {
      for (int s3 = 0; s3 < 4; ++s3) {
        const mpq_class& v = at(s1, s2, s3);
        char ch = '?';
        if (v == r) ch = 'R';
        else if (v == plus) ch = '+';
        else if (v == minus) ch = '-';
        else if (v == 0) ch = '0';
        os << ch << (s3 < 3 ? " " : "");
      }
      os << "\n";
    }
  }
  return os.str();
}

C01Cube cube_c01(const TripleTable& hoggar) {
  if (hoggar.n() != 64) throw std::invalid_argument("cube_c01: expects 64 elements");
  C01Cube cube;
  for (int k = 0; k < 64; ++k) {
    const CycNum v = hoggar.value(0, 1, k);
    if (!v.is_rational())
      throw InvariantViolation("C_{0,1," + std::to_string(k) + "} is not rational: " + v.str());
    cube.values[k] = v.rational();
  }
  return cube;
}

int phase_sign_after_hermitize(const SicEnsemble& e, std::size_t k) {
  const bool qubits3 = e.d() == 8 && e.conductor() == 4;
  const ExactMatrix h = qubits3 ? qubit3_hermitized().at(k) : hermitize(e.index(k), e.conductor());
  const CycNum v = sesquilinear(e.fiducial(), h, e.fiducial());
  if (!v.is_real())
    throw InvariantViolation("<psi_0|Dhat_" + std::to_string(k) + "|psi_0> is not real: " + v.str());
  const int s = real_sign(v);
  if (s == 0)
    throw InvariantViolation("<psi_0|Dhat_" + std::to_string(k) + "|psi_0> vanishes");
  return s;
}

int symplectic_vanishing_agreement(const C01Cube& cube) {
  const PauliIndex k = PauliIndex::qubits3(1);
  int agree = 0;
  for (std::size_t l = 0; l < 64; ++l) {
    const bool odd = symplectic_value(k, PauliIndex::qubits3(l)) == 1;
    if (odd == (cube.values[l] == 0)) ++agree;
  }
  return agree;
}

SeidelMatrix::SeidelMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, 0) {}

void SeidelMatrix::set(int u, int w, int value) {
  if (u == w || (value != 1 && value != -1))
    throw std::invalid_argument("SeidelMatrix: off-diagonal entries must be +-1");
  a_.at(static_cast<std::size_t>(u) * n_ + w) = value;
  a_.at(static_cast<std::size_t>(w) * n_ + u) = value;
}

bool SeidelMatrix::well_formed() const {
  for (int u = 0; u < n_; ++u)
    for (int w = 0; w < n_; ++w) {
      const int x = (*this)(u, w);
      if (x != (*this)(w, u)) return false;
      if (u == w ? x != 0 : (x != 1 && x != -1)) return false;
    }
  return true;
}

ExactMatrix SeidelMatrix::to_exact(int conductor) const {
  std::vector<CycNum> e;
  e.reserve(a_.size());
  for (int x : a_) e.emplace_back(conductor, static_cast<long>(x));
  return ExactMatrix(n_, n_, conductor, std::move(e));
}

SeidelMatrix descendant_seidel(const TripleSet& t, int v) {
  const int n = t.n();
  if (v < 0 || v >= n) throw std::out_of_range("descendant_seidel: vertex out of range");
  SeidelMatrix a(n);
  for (int u = 0; u < n; ++u)
    for (int w = u + 1; w < n; ++w) {
      const bool edge = u != v && w != v && t.contains(u, v, w);
      a.set(u, w, edge ? -1 : 1);
    }
  return a;
}

ExactMatrix gram_from_seidel(const SeidelMatrix& a, const mpq_class& lambda) {
  if (lambda == 0) throw std::invalid_argument("gram_from_seidel: lambda must be nonzero");
  return ExactMatrix::identity(a.n(), 1) - mpq_class(1 / lambda) * a.to_exact(1);
}

}  // namespace sicd
