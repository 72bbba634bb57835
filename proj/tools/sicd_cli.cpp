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

#include <fstream>
#include <iomanip>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "sicd/report.hpp"

using namespace sicd;

namespace {

int cmd_catalog() {
  std::cout << std::left;
  for (auto label : kAllLabels) {
    const SicEnsemble& e = catalog(label);
    std::cout << std::setw(18) << label_name(label) << " d=" << e.d() << "  projectors=" << e.size()
              << "  conductor=" << e.conductor() << "  fiducial=(";
    for (std::size_t i = 0; i < e.fiducial().size(); ++i)
      std::cout << (i ? ", " : "") << e.fiducial()[i].str();
    std::cout << ")\n";
  }
  return 0;
}

int cmd_verify(const std::string& target_name, const VerifyOptions& opts, const std::string& json_path,
               const std::string& csv_dir, bool details) {
  const auto target = parse_target(target_name);
  if (!target) {
    std::cerr << "unknown verify target: " << target_name << "\n";
    return 2;
  }
  const ReportBundle bundle = run_verify(*target, opts);
  bundle.print(std::cout, details);
  if (!json_path.empty()) {
    std::ofstream os(json_path);
    if (!os) throw std::runtime_error("cannot write " + json_path);
    os << bundle.to_json().dump(2) << '\n';
  }
  if (!csv_dir.empty()) bundle.write_csv(csv_dir);
  for (const auto& r : bundle.results())
    if (!r.pass) {
      std::cerr << "first failure: " << r.name << (r.failures.empty() ? "" : ": " + r.failures.front()) << "\n";
      return 1;
    }
  std::cout << "all " << bundle.results().size() << " checks passed\n";
  return 0;
}

int cmd_export(const std::string& what, const std::string& path, int jobs, bool json) {
  std::ofstream file;
  std::ostream* os = &std::cout;
  if (path != "-") {
    file.open(path);
    if (!file) throw std::runtime_error("cannot write " + path);
    os = &file;
  }
  const SicEnsemble& hoggar = catalog(EnsembleLabel::kHoggar);
  if (what == "cube") {
    const C01Cube cube = cube_c01(TripleTable::build(hoggar, jobs));
    if (json)
      *os << cube_json(cube).dump(2) << '\n';
    else
      write_cube_text(*os, cube);
  } else if (what == "blocks") {
    write_blocks(*os, design_from_twin(hoggar, catalog(EnsembleLabel::kHoggarTwin)));
  } else if (what == "classification") {
    write_classification_csv(*os, TripleTable::build(hoggar, jobs));
  } else if (what == "gram") {
    const TripleTable table = TripleTable::build(hoggar, jobs);
    const TripleSet s0(64, classify(table).s_zero);
    write_rational_csv(*os, gram_from_seidel(descendant_seidel(s0, 0), mpq_class(-9)));
  } else if (what == "fano") {
    *os << fano_json().dump(2) << '\n';
  } else if (what == "gosset") {
    *os << gosset_json(gosset_polytope()).dump(2) << '\n';
  } else {
    std::cerr << "unknown export: " << what << "\n";
    return 2;
  }
  if (!*os) throw std::runtime_error("write failed");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact construction and verification of the doubly transitive SICs"};
  app.require_subcommand(1);

  VerifyOptions opts;
  std::string json_path, csv_dir, target = "all", what, path = "-";
  bool details = false, export_json = false;

  app.add_subcommand("catalog", "List the available ensembles");

  auto* verify = app.add_subcommand("verify", "Run verification checks");
  verify->add_option("target", target, "sic, triples, designs, compat, geometry or all")
      ->check(CLI::IsMember({"sic", "triples", "designs", "compat", "geometry", "all"}));
  verify->add_option("--json", json_path, "Write the report bundle as JSON");
  verify->add_option("--csv", csv_dir, "Write summary.csv into this directory");
  verify->add_option("--jobs,-j", opts.jobs, "Worker threads")->check(CLI::PositiveNumber);
  verify->add_option("--seed", opts.seed, "Seed for randomized checks");
  verify->add_flag("--details", details, "Print computed values for passing checks too");

  auto* exp = app.add_subcommand("export", "Write data files");
  exp->add_option("what", what, "cube, blocks, classification, gram, fano or gosset")
      ->required()
      ->check(CLI::IsMember({"cube", "blocks", "classification", "gram", "fano", "gosset"}));
  exp->add_option("path", path, "Output file, - for stdout");
  exp->add_option("--jobs,-j", opts.jobs, "Worker threads")->check(CLI::PositiveNumber);
  exp->add_flag("--json", export_json, "JSON form of the cube");

  CLI11_PARSE(app, argc, argv);
  try {
    if (app.got_subcommand("catalog")) return cmd_catalog();
    if (app.got_subcommand("verify")) return cmd_verify(target, opts, json_path, csv_dir, details);
    if (app.got_subcommand("export")) return cmd_export(what, path, opts.jobs, export_json);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
