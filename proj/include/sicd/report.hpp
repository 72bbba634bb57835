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

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "sicd/designs.hpp"
#include "sicd/finitegeo.hpp"
#include "sicd/triples.hpp"

namespace sicd {

nlohmann::json to_json(const CycNum& x);
nlohmann::json to_json(const ExactMatrix& m);
nlohmann::json to_json(const ProbVector& p);

/// Text form: four 4x4 slices. JSON form: values as rational strings, [s1][s2][s3].
void write_cube_text(std::ostream& os, const C01Cube& cube);
nlohmann::json cube_json(const C01Cube& cube);
/// "j,k,l,class,C" for every sorted triple.
void write_classification_csv(std::ostream& os, const TripleTable& table);
/// One row per matrix row, rational entries.
void write_rational_csv(std::ostream& os, const ExactMatrix& m);
nlohmann::json fano_json();
nlohmann::json gosset_json(const GossetPolytope& g);

enum class Target { kSic, kTriples, kDesigns, kCompat, kGeometry, kAll };
std::optional<Target> parse_target(std::string_view name);

struct VerifyOptions {
  int jobs = 1;
  std::uint64_t seed = 20260101;
  int random_states = 50;
};

/// Shared, lazily computed inputs for the criteria.
class VerifyContext {
 public:
  explicit VerifyContext(VerifyOptions options);
  ~VerifyContext();
  const VerifyOptions& options() const noexcept { return options_; }
  const SicEnsemble& hoggar() const;
  const SicEnsemble& twin() const;
  const TripleTable& hoggar_table();
  const TripleClass& classification();
  const Design& twin_design();
  const std::vector<ProbVector>& twin_reps();

 private:
  VerifyOptions options_;
  std::unique_ptr<TripleTable> table_;
  std::unique_ptr<TripleClass> cls_;
  std::unique_ptr<Design> design_;
  std::unique_ptr<std::vector<ProbVector>> twin_reps_;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string expected;
  std::string computed;
  double seconds = 0.0;
  std::vector<std::string> failures;
};

inline constexpr int kCriterionCount = 10;
std::string_view criterion_name(int id);
/// Criterion ids run by a target, ascending.
std::vector<int> criteria_for(Target target);
/// Runs one criterion; exceptions become failures.
CriterionResult run_criterion(int id, VerifyContext& ctx);

class ReportBundle {
 public:
  /// Throws std::logic_error if the criterion is already present.
  void add(CriterionResult r);
  const std::vector<CriterionResult>& results() const noexcept { return results_; }
  bool all_pass() const;
  nlohmann::json to_json() const;
  void write_csv(const std::filesystem::path& dir) const;
  /// One "PASS"/"FAIL" line per criterion.
  void print(std::ostream& os, bool details = false) const;

 private:
  std::vector<CriterionResult> results_;
};

ReportBundle run_verify(Target target, const VerifyOptions& options);

}  // namespace sicd
