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

#include "sicd/report.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "sicd/compat.hpp"
#include "sicd/grouparith.hpp"

namespace sicd {

nlohmann::json to_json(const CycNum& x) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& c : x.coeffs()) coeffs.push_back(to_string(c));
  return {{"conductor", x.conductor()}, {"coeffs", coeffs}};
}

nlohmann::json to_json(const ExactMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    rows.push_back(row);
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"conductor", m.conductor()}, {"entries", rows}};
}

nlohmann::json to_json(const ProbVector& p) {
  nlohmann::json v = nlohmann::json::array();
  for (const auto& x : p.values()) {
    if (x.is_rational())
      v.push_back(to_string(x.rational()));
    else
      v.push_back(to_json(x));
  }
  return {{"d", p.d()}, {"p", v}};
}

void write_cube_text(std::ostream& os, const C01Cube& cube) { os << cube.text_art(); }

nlohmann::json cube_json(const C01Cube& cube) {
  nlohmann::json slices = nlohmann::json::array();
  for (int s1 = 0; s1 < 4; ++s1) {
    nlohmann::json slice = nlohmann::json::array();
    for (int s2 = 0; s2 < 4; ++s2) {
      nlohmann::json row = nlohmann::json::array();
      for (int s3 = 0; s3 < 4; ++s3) row.push_back(to_string(cube.at(s1, s2, s3)));
      slice.push_back(row);
    }
    slices.push_back(slice);
  }
  return {{"sigma", {"I", "Z", "X", "XZ"}}, {"values", slices}, {"histogram", cube.histogram()}};
}

void write_classification_csv(std::ostream& os, const TripleTable& table) {
  os << "j,k,l,class,C\n";
  for (std::size_t r = 0; r < table.triple_count(); ++r) {
    const auto& t = table.triples()[r];
    const CycNum& c = table.sorted_value(r);
    const char* cls = c.is_zero() ? "S0" : (real_sign(c) > 0 ? "S+" : "S-");
    os << t[0] << ',' << t[1] << ',' << t[2] << ',' << cls << ','
       << (c.is_rational() ? to_string(c.rational()) : c.str()) << '\n';
  }
}

void write_rational_csv(std::ostream& os, const ExactMatrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const CycNum& x = m(r, c);
      os << (c ? "," : "") << (x.is_rational() ? to_string(x.rational()) : x.str());
    }
    os << '\n';
  }
}

nlohmann::json fano_json() {
  nlohmann::json table = nlohmann::json::array();
  for (const auto& row : fano_table()) {
    nlohmann::json pts = nlohmann::json::array();
    for (const auto& p : row.points) pts.push_back(p.str());
    table.push_back({{"line", row.line.str()}, {"points", pts}});
  }
  nlohmann::json flags = nlohmann::json::array();
  for (const auto& [p, l] : anti_flags()) flags.push_back({{"point", p.str()}, {"line", l.str()}});
  return {{"point_coords", "(k0,k2,k4)"}, {"line_coords", "(k1,k3,k5)"},
          {"incidence", table}, {"anti_flags", flags}};
}

nlohmann::json gosset_json(const GossetPolytope& g) {
  nlohmann::json verts = nlohmann::json::array();
  for (const auto& v : g.vertices) verts.push_back(v);
  nlohmann::json lines = nlohmann::json::array();
  for (const auto& [a, b] : g.lines) lines.push_back({a, b});
  nlohmann::json cos2 = nlohmann::json::array();
  for (const auto& c : g.squared_cosines) cos2.push_back(to_string(c));
  return {{"vertices", verts},
          {"lines", lines},
          {"orthogonal_to_ones", g.orthogonal_to_ones},
          {"squared_cosines", cos2}};
}

std::optional<Target> parse_target(std::string_view name) {
  if (name == "sic") return Target::kSic;
  if (name == "triples") return Target::kTriples;
  if (name == "designs") return Target::kDesigns;
  if (name == "compat") return Target::kCompat;
  if (name == "geometry") return Target::kGeometry;
  if (name == "all") return Target::kAll;
  return std::nullopt;
}

VerifyContext::VerifyContext(VerifyOptions options) : options_(options) {}
VerifyContext::~VerifyContext() = default;

const SicEnsemble& VerifyContext::hoggar() const { return catalog(EnsembleLabel::kHoggar); }
const SicEnsemble& VerifyContext::twin() const { return catalog(EnsembleLabel::kHoggarTwin); }

const TripleTable& VerifyContext::hoggar_table() {
  if (!table_) table_ = std::make_unique<TripleTable>(TripleTable::build(hoggar(), options_.jobs));
  return *table_;
}

const TripleClass& VerifyContext::classification() {
  if (!cls_) cls_ = std::make_unique<TripleClass>(classify(hoggar_table()));
  return *cls_;
}

const Design& VerifyContext::twin_design() {
  if (!design_) design_ = std::make_unique<Design>(design_from_twin(hoggar(), twin()));
  return *design_;
}

const std::vector<ProbVector>& VerifyContext::twin_reps() {
  if (!twin_reps_) twin_reps_ = std::make_unique<std::vector<ProbVector>>(cross_reps(hoggar(), twin()));
  return *twin_reps_;
}

namespace {

struct Checker {
  std::vector<std::string> failures;
  std::ostringstream computed;

  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
  template <class A, class B>
  void expect_eq(const A& got, const B& want, const std::string& what) {
    if (!(got == want)) {
      std::ostringstream os;
      os << what << ": got " << got << ", expected " << want;
      failures.push_back(os.str());
    }
  }
};

std::string q(long num, long den = 1) {
  mpq_class x(num, den);
  x.canonicalize();
  return to_string(x);
}

bool all_equal(const std::vector<long>& v, long want, bool skip_diagonal = false, int n = 0) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (skip_diagonal && n > 0 && i / n == i % n) continue;
    if (v[i] != want) return false;
  }
  return true;
}

void criterion_equiangularity(VerifyContext&, Checker& c, std::string& expected) {
  expected = "tr(Pi_j Pi_k) = (d delta_jk + 1)/(d + 1) exactly for all 5 ensembles";
  std::size_t pairs = 0;
  for (auto label : kAllLabels) {
    const SicEnsemble e = build_catalog(label);
    const int d = e.d();
    const CycNum off(e.conductor(), mpq_class(1, d + 1));
    const CycNum one(e.conductor(), 1L);
    ExactMatrix sum(d, d, e.conductor());
    for (std::size_t j = 0; j < e.size(); ++j) {
      sum = sum + e.projector(j);
      for (std::size_t k = 0; k < e.size(); ++k) {
        ++pairs;
        const CycNum t = trace_of_product(e.projector(j), e.projector(k));
        if (t != (j == k ? one : off))
          c.failures.push_back(std::string(label_name(label)) + ": tr(Pi_" + std::to_string(j) + " Pi_" +
                               std::to_string(k) + ") = " + t.str());
      }
    }
    c.expect(mpq_class(1, d) * sum == ExactMatrix::identity(d, e.conductor()),
             std::string(label_name(label)) + ": sum Pi_j / d != I");
    c.computed << label_name(label) << " d=" << d << " n=" << e.size() << " overlap " << q(1, d + 1) << "; ";
  }
  c.computed << pairs << " ordered pairs checked";
}

void criterion_classification(VerifyContext& ctx, Checker& c, std::string& expected) {
  expected = "|S+| = 16128, |S-| = 4032, |S0| = 21504; N_k = 756/189; N_kl = 24/6";
  const TripleTable& table = ctx.hoggar_table();
  const TripleClass& cls = ctx.classification();
  c.expect_eq(table.triple_count(), std::size_t{41664}, "sorted triples");
  c.expect_eq(cls.s_plus.size(), std::size_t{16128}, "|S+|");
  c.expect_eq(cls.s_minus.size(), std::size_t{4032}, "|S-|");
  c.expect_eq(cls.s_zero.size(), std::size_t{21504}, "|S0|");
  c.expect_eq(table.triple_count() - cls.s_plus.size() - cls.s_minus.size(), std::size_t{21504},
              "41664 - |S+| - |S-|");
  const auto pp = point_counts(cls.s_plus, 64);
  const auto pm = point_counts(cls.s_minus, 64);
  c.expect(all_equal(pp, 756), "N_k^+ not constantly 756");
  c.expect(all_equal(pm, 189), "N_k^- not constantly 189");
  c.expect(all_equal(pair_counts(cls.s_plus, 64), 24, true, 64), "N_kl^+ not constantly 24");
  c.expect(all_equal(pair_counts(cls.s_minus, 64), 6, true, 64), "N_kl^- not constantly 6");
  // Phases in {+-1, +-i}: (27 T)^4 = 1.
  std::size_t bad_phase = 0;
  for (std::size_t r = 0; r < table.triple_count(); ++r) {
    const CycNum x = table.sorted_complex(r) * mpq_class(27);
    const CycNum x2 = x * x;
    if (!(x2 * x2).is_one()) ++bad_phase;
  }
  c.expect_eq(bad_phase, std::size_t{0}, "triples with phase outside {+-1, +-i}");
  c.computed << "|S+|=" << cls.s_plus.size() << " |S-|=" << cls.s_minus.size() << " |S0|=" << cls.s_zero.size()
             << " N_k^+=" << pp.front() << " N_k^-=" << pm.front() << " phases ok=" << (bad_phase == 0);
}

void criterion_cube(VerifyContext& ctx, Checker& c, std::string& expected) {
  expected = "histogram {1/9: 2, 1/27: 24, -1/27: 6, 0: 32}; symplectic agreement 64/64";
  const C01Cube cube = cube_c01(ctx.hoggar_table());
  const auto h = cube.histogram();
  const std::map<std::string, int> want = {{"1/9", 2}, {"1/27", 24}, {"-1/27", 6}, {"0", 32}};
  c.expect(h == want, "cube histogram differs");
  const int agree = symplectic_vanishing_agreement(cube);
  c.expect_eq(agree, 64, "symplectic agreement");
  for (int k = 0; k < 64; ++k) {
    const PauliIndex idx = PauliIndex::qubits3(k);
    if (idx[4] == 1) c.expect(cube.values[k] == 0, "C_{0,1," + std::to_string(k) + "} != 0 with k4 = 1");
    if (idx[5] == 0) c.expect(cube.values[k] == cube.values[k + 1], "C_{0,1,k} not paired in k5 at " + std::to_string(k));
  }
  int plus = 0, minus = 0;
  for (std::size_t k = 0; k < 64; ++k) (phase_sign_after_hermitize(ctx.hoggar(), k) > 0 ? plus : minus)++;
  for (const auto& [k, v] : h) c.computed << k << ":" << v << " ";
  c.computed << "agreement " << agree << "/64; <psi0|Dhat_k|psi0> real for all k (+" << plus << "/-" << minus << ")";
}

void criterion_two_graph(VerifyContext& ctx, Checker& c, std::string& expected) {
  expected = "S0 two-graph over 635376 quadruples; (A-7I)(A+9I)=0, rank(A+9I)=36; M=I+A/9 rank 36, M(M-16/9 I)=0";
  const TripleSet s0(64, ctx.classification().s_zero);
  const std::size_t violations = two_graph_violations(s0);
  c.expect_eq(violations, std::size_t{0}, "two-graph violations");
  const SeidelMatrix a = descendant_seidel(s0, 0);
  c.expect(a.well_formed(), "Seidel matrix not well formed");
  const ExactMatrix ax = a.to_exact();
  const std::vector<mpq_class> roots = {7, -9};
  const bool ann = mat_annihilates(ax, roots);
  c.expect(ann, "(A - 7I)(A + 9I) != 0");
  const ExactMatrix id = ExactMatrix::identity(64, 1);
  const std::size_t r_plus9 = mat_rank(ax + mpq_class(9) * id);
  const std::size_t r_minus7 = mat_rank(ax - mpq_class(7) * id);
  c.expect_eq(r_plus9, std::size_t{36}, "rank(A + 9I)");
  c.expect_eq(r_minus7, std::size_t{28}, "rank(A - 7I)");
  c.expect(mat_trace(ax).is_zero() && 36 * 7 + 28 * (-9) == 0, "trace bookkeeping");
  const ExactMatrix m = gram_from_seidel(a, mpq_class(-9));
  const std::size_t rm = mat_rank(m);
  c.expect_eq(rm, std::size_t{36}, "rank(M)");
  const std::vector<mpq_class> mroots = {0, mpq_class(16, 9)};
  const bool mann = mat_annihilates(m, mroots);
  c.expect(mann, "M(M - 16/9 I) != 0");
  bool entries = true;
  for (std::size_t i = 0; i < 64; ++i)
    for (std::size_t j = 0; j < 64; ++j) {
      const CycNum& x = m(i, j);
      if (i == j) entries = entries && x.is_one();
      else entries = entries && x.is_rational() && abs(x.rational()) == mpq_class(1, 9);
    }
  c.expect(entries, "M entries are not 1 on the diagonal and +-1/9 elsewhere");
  c.computed << "violations " << violations << "/635376; annihilates " << ann << "; rank(A+9I)=" << r_plus9
             << " rank(A-7I)=" << r_minus7 << "; rank(M)=" << rm << " M(M-16/9 I)=0 " << mann;
}

void criterion_qbic(VerifyContext& ctx, Checker& c, std::string& expected) {
  expected = "128 catalog states give 11/648; twin: sum p^3 = 1/1296, bracket = 7/144; reduced <=> general on random states";
  const TripleClass& cls = ctx.classification();
  const TripleTable& table = ctx.hoggar_table();
  const SicEnsemble& h = ctx.hoggar();
  const CycNum cubes(4, mpq_class(1, 1296));
  const CycNum bracket(4, mpq_class(7, 144));
  int hoggar_ok = 0, twin_ok = 0;
  for (std::size_t k = 0; k < 64; ++k) {
    const ProbVector p = sic_rep(h.projector(k), h);
    if (qbic_check_hoggar(p, cls)) ++hoggar_ok;
    const ProbVector& t = ctx.twin_reps()[k];
    const HoggarQbicTerms terms = hoggar_qbic_terms(t, cls);
    if (qbic_check_hoggar(t, cls) && terms.sum_cubes == cubes && terms.bracket == bracket &&
        terms.plus_nonzero - terms.minus_nonzero == 2268)
      ++twin_ok;
  }
  c.expect_eq(hoggar_ok, 64, "Hoggar states passing the reduced QBic");
  c.expect_eq(twin_ok, 64, "twin states with 11/648, 1/1296, 7/144, 2268");
  std::mt19937_64 rng(ctx.options().seed);
  int agree = 0, pure_pass = 0;
  for (int s = 0; s < ctx.options().random_states; ++s) {
    const ProbVector p = sic_rep(random_pure_state(8, 4, rng), h);
    const bool reduced = qbic_check_hoggar(p, cls);
    const bool general = qbic_check_general(p, table);
    if (reduced == general) ++agree;
    if (reduced && general && quadratic_check(p, 8)) ++pure_pass;
  }
  c.expect_eq(agree, ctx.options().random_states, "random pure states where reduced == general");
  c.expect_eq(pure_pass, ctx.options().random_states, "random pure states passing both forms");
  int mixed_agree = 0;
  const int mixed = 10;
  for (int s = 0; s < mixed; ++s) {
    const ProbVector p = sic_rep(random_hermitian_trace_one(8, 4, rng), h);
    if (qbic_check_hoggar(p, cls) == qbic_check_general(p, table)) ++mixed_agree;
  }
  c.expect_eq(mixed_agree, mixed, "random mixed states where reduced == general");
  c.computed << "hoggar " << hoggar_ok << "/64, twin " << twin_ok << "/64 (sum p^3 1/1296, bracket 7/144, net 2268); "
             << "random pure agree " << agree << "/" << ctx.options().random_states << ", mixed agree "
             << mixed_agree << "/" << mixed;
}

void criterion_designs(VerifyContext& ctx, Checker& c, std::string& expected) {
  expected = "2-(64,36,20); complement 2-(64,28,12); SDP on 41664 triples; rows = (H2^3 + J)/2; 126 hyperplanes (32, x16); Kantor {16,20}";
  const Design& d = ctx.twin_design();
  const BibdParams p = bibd_params(d);
  c.expect(p.ok && p.v == 64 && p.b == 64 && p.k == 36 && p.r == 36 && p.lambda == 20,
           "twin design is not 2-(64,36,20): " + p.failure);
  const BibdParams q = bibd_params(complement(d));
  c.expect(q.ok && q.k == 28 && q.r == 28 && q.lambda == 12, "complement is not 2-(64,28,12): " + q.failure);
  c.expect(complement_law(p, q), "complement parameter law");
  const auto fam = hadamard_family(4);
  c.expect(q.v == fam[0] && q.k == fam[1] && q.lambda == fam[2], "complement not in the regular Hadamard family at u = 4");
  const auto symp = symplectic_params(3, 1);
  c.expect(p.v == symp[0] && p.k == symp[1] && p.lambda == symp[2], "twin design parameters differ from S^1(6)");
  std::size_t meet = 0;
  for (std::size_t i = 0; i < 64; ++i)
    for (std::size_t j = i + 1; j < 64; ++j)
      if (std::popcount(d.blocks[i].bits & d.blocks[j].bits) == 20) ++meet;
  c.expect_eq(meet, std::size_t{2016}, "block pairs meeting in 20 points");
  const SdpReport sdp = sdp_check(d);
  c.expect(sdp.holds && sdp.triples_checked == 41664, "symmetric difference property");
  c.expect(sdp.parameter_condition && sdp.m == 3, "SDP parameter condition with m = 3");
  const HadamardConstruction hc = hadamard_construction(3);
  const bool rows = same_row_multiset(hc.incidence, d);
  c.expect(rows, "row multiset differs from (H2^3 + J)/2");
  c.expect(regular_hadamard(d), "2N - J is not a regular Hadamard matrix");
  const HyperplaneReport hp = hyperplanes(d);
  c.expect_eq(hp.distinct.size(), std::size_t{126}, "distinct pairwise XORs");
  c.expect(hp.weights == std::set<int>{32}, "hyperplane weights not all 32");
  c.expect(hp.multiplicities == std::set<int>{16}, "hyperplane multiplicities not all 16");
  const KantorReport kr = kantor_sweep(d);
  c.expect(kr.values == std::set<int>{16, 20}, "Kantor values not {16, 20}");
  c.expect(kr.xor_consistent, "Kantor value does not match the three-block XOR");
  c.expect_eq(kr.admissible, std::size_t{124992}, "admissible Kantor triples");
  c.computed << "2-(" << p.v << "," << p.k << "," << p.lambda << "), complement 2-(" << q.v << "," << q.k << ","
             << q.lambda << "); SDP " << sdp.triples_checked << " triples (" << sdp.as_block << " blocks, "
             << sdp.as_complement << " complements); Hadamard rows " << rows << "; " << hp.distinct.size()
             << " hyperplanes; Kantor over " << kr.admissible << " triples: 16x" << kr.count16 << " 20x"
             << kr.count20;
}

void criterion_compat(VerifyContext& ctx, Checker& c, std::string& expected) {
  expected = "reference quartet PP-H incompatible, no 3-subset is; quartet <=> S0 bridge; Hesse triple one zero per column; inequalities for 3 <= d <= 8, not d = 2";
  const Design& d = ctx.twin_design();
  std::vector<int> qi;
  for (int i = 0; i < 4; ++i) {
    const std::string& row = reference_quartet()[i];
    const auto it = std::find_if(d.blocks.begin(), d.blocks.end(), [&](const Block& b) { return b.str() == row; });
    c.expect(it != d.blocks.end(), "reference row " + std::to_string(i) + " is not a twin block");
    if (it != d.blocks.end()) qi.push_back(static_cast<int>(it - d.blocks.begin()));
  }
  bool quartet_ok = false, subsets_ok = true;
  if (qi.size() == 4) {
    std::vector<ProbVector> reps;
    for (int i : qi) reps.push_back(ctx.twin_reps()[i]);
    quartet_ok = pp_incompatible(HypothesisSet(reps));
    for (int skip = 0; skip < 4; ++skip) {
      std::vector<ProbVector> sub;
      for (int a = 0; a < 4; ++a)
        if (a != skip) sub.push_back(reps[a]);
      subsets_ok = subsets_ok && !pp_incompatible(HypothesisSet(sub));
    }
  }
  c.expect(quartet_ok, "reference quartet is not PP-H incompatible");
  c.expect(subsets_ok, "some 3-subset of the reference quartet is PP-H incompatible");
  std::size_t covering_triples = 0;
  for (int i = 0; i < 64; ++i)
    for (int j = i + 1; j < 64; ++j)
      for (int k = j + 1; k < 64; ++k) {
        const int idx[3] = {i, j, k};
        if (blocks_cover(d, idx)) ++covering_triples;
      }
  c.expect_eq(covering_triples, std::size_t{0}, "PP-H incompatible twin triples");
  const auto quartets = pph_quartets(d);
  std::size_t scan_bad = 0;
  for (const auto& qq : quartets)
    if (!quartet_covers(d, qq)) ++scan_bad;
  c.expect_eq(scan_bad, std::size_t{0}, "quartets failing the column scan");
  const BridgeReport br = quartet_triple_product_bridge(quartets, ctx.classification());
  c.expect(br.forward, "a quartet contains a triple outside S0");
  c.expect(br.reverse, "some S0 triple does not extend to a quartet");
  c.expect(br.plus_extended == 0 && br.minus_extended == 0, "an S+ or S- triple extends to a quartet");
  const HypothesisSet hesse = hesse_example_states();
  const auto zeros = zeros_per_outcome(hesse);
  c.expect(pp_incompatible(hesse), "Hesse triple is not PP incompatible");
  c.expect(std::all_of(zeros.begin(), zeros.end(), [](int z) { return z == 1; }), "Hesse triple: not one zero per column");
  bool ineq = true;
  for (int dd = 3; dd <= 8; ++dd) {
    const auto [a, b] = sic_triple_inequalities(dd);
    ineq = ineq && a && b;
  }
  c.expect(ineq, "SIC triple inequalities fail for some 3 <= d <= 8");
  c.expect(!sic_triple_inequalities(2).first, "first SIC triple inequality holds at d = 2");
  c.computed << "reference quartet " << quartet_ok << ", 3-subsets compatible " << subsets_ok << "; " << quartets.size()
             << " quartets (derived), bridge forward " << br.forward << " reverse " << br.reverse << " ("
             << br.s0_extended << " S0 triples); Hesse zeros per column all 1; inequalities ok " << ineq;
}

void criterion_entropy(VerifyContext& ctx, Checker& c, std::string& expected) {
  expected = "d=2: 4 minimizers (dual tetrahedron); d=3: 12 minimizers in 4 MUBs; d=8: 64 twin states verified; 28 zeros";
  const SicEnsemble& tet = catalog(EnsembleLabel::kTetrahedron);
  const SicEnsemble& dual = catalog(EnsembleLabel::kTetrahedronDual);
  const auto m2 = enumerate_min_entropy(tet);
  c.expect_eq(m2.size(), std::size_t{4}, "d = 2 minimizers");
  const auto dual_reps = cross_reps(tet, dual);
  bool is_dual = m2.size() == 4;
  for (const auto& p : m2)
    is_dual = is_dual && std::find(dual_reps.begin(), dual_reps.end(), p) != dual_reps.end();
  c.expect(is_dual, "d = 2 minimizers are not the dual tetrahedron");
  const SicEnsemble& hesse = catalog(EnsembleLabel::kHesse);
  const auto m3 = enumerate_min_entropy(hesse);
  c.expect_eq(m3.size(), std::size_t{12}, "d = 3 minimizers");
  const MubReport mub = mub_check(m3, hesse);
  c.expect(mub.ok && mub.bases.size() == 4, "d = 3 minimizers are not 4 mutually unbiased bases: " + mub.failure);
  const auto& twin = ctx.twin_reps();
  c.expect(verify_min_entropy(ctx.hoggar(), twin), "d = 8 verification mode failed");
  bool saturate = true;
  for (const auto& p : twin) saturate = saturate && p.zero_count() == 28 && zero_count_bound(p, 8);
  c.expect(saturate, "twin states do not saturate the zero-count bound 28");
  c.computed << "d=2: " << m2.size() << " (dual tetrahedron " << is_dual << "); d=3: " << m3.size() << " in "
             << mub.bases.size() << " bases, cross overlaps ";
  for (const auto& s : mub.cross_values) c.computed << s << " ";
  c.computed << "; d=8: 64 twin states verified, entropy " << std::setprecision(6) << shannon_entropy(twin.front())
             << " (float); zeros 28 = C(8,2)";
}

void criterion_geometry(VerifyContext& ctx, Checker& c, std::string& expected) {
  expected = "28 anti-flags = 28 antisymmetric D_k = 28 zeros of B_0, index by index; Gosset 56 vertices, 28 lines, cos^2 = 1/9";
  const ZeroPatternReport zp = zero_pattern_correspondence(ctx.twin_design().blocks.at(0));
  c.expect(zp.agree, "zero-pattern characterizations disagree");
  c.expect(zp.block_zeros == 28 && zp.odd_parity == 28 && zp.antisymmetric == 28 && zp.anti_flags == 28,
           "counts are not all 28");
  c.expect_eq(anti_flags().size(), std::size_t{28}, "Fano anti-flags");
  const GossetPolytope g = gosset_polytope();
  c.expect_eq(g.vertices.size(), std::size_t{56}, "Gosset vertices");
  c.expect_eq(g.lines.size(), std::size_t{28}, "Gosset lines");
  c.expect(g.orthogonal_to_ones, "a Gosset vertex is not orthogonal to (1,...,1)");
  c.expect(g.squared_cosines == std::set<mpq_class>{mpq_class(1, 9)}, "Gosset squared cosines are not {1/9}");
  c.computed << "zeros " << zp.block_zeros << ", odd parity " << zp.odd_parity << ", antisymmetric " << zp.antisymmetric
             << ", anti-flags " << zp.anti_flags << ", agree " << zp.agree << "; Gosset " << g.vertices.size()
             << " vertices, " << g.lines.size() << " lines, cos^2 {";
  for (const auto& x : g.squared_cosines) c.computed << to_string(x);
  c.computed << "}";
}

void criterion_arithmetic(VerifyContext& ctx, Checker& c, std::string& expected) {
  expected = "clifford(2,3) = 2^15 * 3^4 * 5 * 7 = 2^9 3^2 (|S+|+|S-|); 24|S+| = 96|S-| = 387072; b = 672 lambda";
  const OrderReport r = order_identities(ctx.classification());
  const std::string f = factorization_string(r.clifford_order);
  c.expect_eq(f, std::string("2^15 * 3^4 * 5 * 7"), "Clifford order factorization");
  c.expect(r.clifford_order == 92897280, "Clifford order value");
  c.computed << "clifford(2,3) = " << r.clifford_order.get_str() << " = " << f << "; " << r.identities.size()
             << " identities hold";
}

}  // namespace

std::string_view criterion_name(int id) {
  static const std::array<std::string_view, kCriterionCount> names = {
      "equiangularity", "triple-classification", "c01-cube", "two-graph-seidel", "qbic",
      "designs", "compatibility", "entropy", "finite-geometry", "arithmetic"};
  if (id < 1 || id > kCriterionCount) throw std::out_of_range("criterion id");
  return names[id - 1];
}

std::vector<int> criteria_for(Target target) {
  switch (target) {
    case Target::kSic: return {1, 5, 8};
    case Target::kTriples: return {2, 3, 4, 10};
    case Target::kDesigns: return {6};
    case Target::kCompat: return {7};
    case Target::kGeometry: return {9};
    case Target::kAll: return {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
  }
  return {};
}

CriterionResult run_criterion(int id, VerifyContext& ctx) {
  CriterionResult r;
  r.id = id;
  r.name = std::string(criterion_name(id));
  Checker c;
  const auto start = std::chrono::steady_clock::now();
  try {
    switch (id) {
      case 1: criterion_equiangularity(ctx, c, r.expected); break;
      case 2: criterion_classification(ctx, c, r.expected); break;
      case 3: criterion_cube(ctx, c, r.expected); break;
      case 4: criterion_two_graph(ctx, c, r.expected); break;
      case 5: criterion_qbic(ctx, c, r.expected); break;
      case 6: criterion_designs(ctx, c, r.expected); break;
      case 7: criterion_compat(ctx, c, r.expected); break;
      case 8: criterion_entropy(ctx, c, r.expected); break;
      case 9: criterion_geometry(ctx, c, r.expected); break;
      case 10: criterion_arithmetic(ctx, c, r.expected); break;
      default: throw std::out_of_range("criterion id");
    }
  } catch (const std::exception& e) {
    c.failures.push_back(std::string("exception: ") + e.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  r.computed = c.computed.str();
  r.failures = std::move(c.failures);
  r.pass = r.failures.empty();
  return r;
}

void ReportBundle::add(CriterionResult r) {
  for (const auto& x : results_)
    if (x.id == r.id) throw std::logic_error("criterion " + r.name + " reported twice");
  results_.push_back(std::move(r));
}

bool ReportBundle::all_pass() const {
  return std::all_of(results_.begin(), results_.end(), [](const auto& r) { return r.pass; });
}

nlohmann::json ReportBundle::to_json() const {
  nlohmann::json sections = nlohmann::json::object();
  for (const auto& r : results_)
    sections[r.name] = {{"id", r.id},
                        {"status", r.pass ? "pass" : "fail"},
                        {"expected", r.expected},
                        {"computed", r.computed},
                        {"runtime_seconds", r.seconds},
                        {"failures", r.failures}};
  return {{"all_pass", all_pass()}, {"sections", sections}};
}

void ReportBundle::write_csv(const std::filesystem::path& dir) const {
  std::filesystem::create_directories(dir);
  std::ofstream os(dir / "summary.csv");
  if (!os) throw std::runtime_error("cannot write " + (dir / "summary.csv").string());
  auto quote = [](const std::string& s) {
    std::string out = "\"";
    for (char ch : s) out += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    return out + "\"";
  };
  os << "id,name,status,expected,computed,runtime_seconds\n";
  for (const auto& r : results_)
    os << r.id << ',' << r.name << ',' << (r.pass ? "pass" : "fail") << ',' << quote(r.expected) << ','
       << quote(r.computed) << ',' << r.seconds << '\n';
}

void ReportBundle::print(std::ostream& os, bool details) const {
  for (const auto& r : results_) {
    os << (r.pass ? "PASS" : "FAIL") << "  " << std::setw(2) << r.id << " " << std::left << std::setw(22) << r.name
       << std::right << " (" << std::fixed << std::setprecision(2) << r.seconds << "s)";
    os.unsetf(std::ios::fixed);
    os << '\n';
    if (details || !r.pass) os << "      computed: " << r.computed << '\n';
    for (const auto& f : r.failures) os << "      failure: " << f << '\n';
  }
}

ReportBundle run_verify(Target target, const VerifyOptions& options) {
  VerifyContext ctx(options);
  ReportBundle bundle;
  for (int id : criteria_for(target)) bundle.add(run_criterion(id, ctx));
  return bundle;
}

}  // namespace sicd
