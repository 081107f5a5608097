// Copyright 2026 The cvsep Authors
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

#include <CLI11.hpp>

#include <atomic>
#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "cvsep/cm_file.hpp"
#include "cvsep/invariants.hpp"
#include "cvsep/report.hpp"
#include "cvsep/separability.hpp"
#include "cvsep/states.hpp"
#include "cvsep/symplectic.hpp"
#include "cvsep/version.hpp"

namespace {

namespace fs = std::filesystem;
using namespace cvsep;

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitEntangled = 3;
constexpr int kExitUnphysical = 4;
constexpr int kExitInconclusive = 5;

int exit_code_for(Status status) {
  switch (status) {
    case Status::Separable:
      return kExitOk;
    case Status::Entangled:
      return kExitEntangled;
    case Status::Unphysical:
      return kExitUnphysical;
    case Status::PptInconclusive:
      return kExitInconclusive;
  }
  return kExitParse;
}

struct OutputOptions {
  std::string format = "text";
  std::string out_path;
};

void add_output_flags(CLI::App* cmd, OutputOptions* opts) {
  cmd->add_option("--format", opts->format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  cmd->add_option("--out", opts->out_path, "Write the report to a file");
}

void emit(const OutputOptions& opts, const std::string& text_body,
          const std::string& json_body) {
  const std::string& body = opts.format == "json" ? json_body : text_body;
  if (opts.out_path.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream out(opts.out_path);
  if (!out) {
    throw std::runtime_error("cannot write '" + opts.out_path + "'");
  }
  out << body;
}

Report base_report(const std::string& path, const LoadedCm& loaded,
                   double tol_phys, double tol_symp) {
  Report report;
  report.input = path;
  report.label = loaded.cm.label();
  report.digest = matrix_digest(loaded.cm);
  report.modes = loaded.cm.modes();
  report.tool_version = kVersion;
  report.tol_phys = tol_phys;
  report.tol_symp = tol_symp;
  report.warnings = loaded.warnings;
  return report;
}

std::string render_text(const Report& report) {
  std::ostringstream out;
  write_text(out, report);
  return out.str();
}

// validate: exit 0 physical, 4 unphysical, 2 parse error.
int run_validate(const std::string& path, double tol_phys,
                 const OutputOptions& opts) {
  const LoadedCm loaded = load_cm_file(path);
  Report report = base_report(path, loaded, tol_phys, tol::symplectic);
  report.full_check = check_full_uncertainty(loaded.cm, tol_phys);
  report.symplectic_check = check_symplectic_uncertainty(loaded.cm, tol_phys);
  emit(opts, render_text(report), to_json_string(report) + "\n");
  return report.full_check->pass ? kExitOk : kExitUnphysical;
}

// invariants: exit 4 only when the spectrum cannot be computed (input
// not positive definite); the invariants themselves always print.
int run_invariants(const std::string& path, double tol_phys,
                   const OutputOptions& opts) {
  const LoadedCm loaded = load_cm_file(path);
  Report report = base_report(path, loaded, tol_phys, tol::symplectic);
  report.invariants = principal_invariants(loaded.cm);
  bool spectrum_ok = false;
  if (is_positive_definite(loaded.cm.matrix())) {
    report.spectrum = symplectic_eigenvalues(loaded.cm);
    spectrum_ok = true;
  } else {
    report.warnings.push_back(
        "input is not positive definite; spectrum unavailable");
  }
  emit(opts, render_text(report), to_json_string(report) + "\n");
  return spectrum_ok ? kExitOk : kExitUnphysical;
}

PartitionResult analyze_partition(const CovarianceMatrix& cm,
                                  const Bipartition& part, bool gaussian,
                                  double tol_phys) {
  PartitionResult result;
  result.partition = part.to_string();
  result.verdict = separability_verdict(cm, part, gaussian, tol_phys);
  if (is_positive_definite(cm.matrix())) {
    result.nu_tilde = ppt_spectrum(cm, part).values();
  }
  return result;
}

// ppt: exit 0 separable, 3 entangled, 4 unphysical, 5 inconclusive.
int run_ppt(const std::string& path, const std::string& partition_text,
            bool gaussian, double tol_phys, const OutputOptions& opts) {
  const LoadedCm loaded = load_cm_file(path);
  const Bipartition part = Bipartition::parse(partition_text, loaded.cm.modes());
  Report report = base_report(path, loaded, tol_phys, tol::symplectic);
  report.full_check = check_full_uncertainty(loaded.cm, tol_phys);
  report.partitions.push_back(
      analyze_partition(loaded.cm, part, gaussian, tol_phys));
  emit(opts, render_text(report), to_json_string(report) + "\n");
  return exit_code_for(report.partitions.front().verdict.status);
}

struct BuildOptions {
  std::string kind;
  int modes = 4;
  double r = 0.0;
  double q = 1.0;
  std::vector<double> q_list;
  double tol_symp = tol::symplectic;
  std::string out_path;
  std::string label;
};

int run_build(const BuildOptions& opts) {
  CovarianceMatrix cm = vacuum(1);
  if (opts.kind == "ghz") {
    cm = ghz_type(GhzSpec{opts.modes, opts.r, opts.q}, opts.tol_symp);
  } else if (opts.kind == "thermal") {
    cm = thermal(opts.q_list.empty() ? std::vector<double>{opts.q}
                                     : opts.q_list);
  } else if (opts.kind == "tms") {
    cm = two_mode_squeezed(opts.r);
  } else if (opts.kind == "vacuum") {
    cm = vacuum(opts.modes);
  } else {
    throw std::invalid_argument("unknown state kind '" + opts.kind + "'");
  }
  if (!opts.label.empty()) {
    cm = CovarianceMatrix(cm.matrix(), opts.label);
  }
  save_cm_file(opts.out_path, cm);
  return kExitOk;
}

std::vector<std::string> collect_batch_inputs(const std::string& path) {
  std::vector<std::string> inputs;
  if (fs::is_directory(path)) {
    for (const auto& entry : fs::directory_iterator(path)) {
      if (entry.is_regular_file() && entry.path().extension() == ".cm") {
        inputs.push_back(entry.path().string());
      }
    }
    std::sort(inputs.begin(), inputs.end());
    return inputs;
  }
  std::ifstream manifest(path);
  if (!manifest) {
    throw ParseError("cannot open batch input '" + path + "'");
  }
  const fs::path base = fs::path(path).parent_path();
  std::string line;
  while (std::getline(manifest, line)) {
    const auto begin = line.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos || line[begin] == '#') {
      continue;
    }
    const auto end = line.find_last_not_of(" \t\r\n");
    const fs::path item = line.substr(begin, end - begin + 1);
    inputs.push_back(item.is_absolute() ? item.string()
                                        : (base / item).string());
  }
  return inputs;
}

Report analyze_batch_file(const std::string& path,
                          const std::vector<std::string>& partition_specs,
                          bool gaussian, double tol_phys) {
  Report report;
  report.input = path;
  report.tool_version = kVersion;
  report.tol_phys = tol_phys;
  try {
    const LoadedCm loaded = load_cm_file(path);
    report = base_report(path, loaded, tol_phys, tol::symplectic);
    report.full_check = check_full_uncertainty(loaded.cm, tol_phys);
    std::vector<Bipartition> parts;
    if (partition_specs.empty()) {
      // Default policy: every single mode against the rest.
      for (int k = 0; k < loaded.cm.modes() && loaded.cm.modes() > 1; ++k) {
        parts.push_back(Bipartition::versus_rest({k}, loaded.cm.modes()));
      }
    } else {
      for (const std::string& spec : partition_specs) {
        parts.push_back(Bipartition::parse(spec, loaded.cm.modes()));
      }
    }
    for (const Bipartition& part : parts) {
      report.partitions.push_back(
          analyze_partition(loaded.cm, part, gaussian, tol_phys));
    }
  } catch (const std::exception& e) {
    report.errors.push_back(e.what());
  }
  return report;
}

// batch: per-file errors are recorded, never abort the run; exit 2 if
// any file failed, 0 otherwise.
int run_batch(const std::string& path,
              const std::vector<std::string>& partition_specs, bool gaussian,
              double tol_phys, unsigned jobs, const OutputOptions& opts) {
  const std::vector<std::string> inputs = collect_batch_inputs(path);
  std::vector<Report> rows(inputs.size());

  const unsigned worker_count = std::max(
      1u, std::min({jobs == 0 ? std::thread::hardware_concurrency() : jobs,
                    static_cast<unsigned>(inputs.size()), 16u}));
  std::atomic<size_t> next{0};
  auto work = [&]() {
    for (size_t i = next.fetch_add(1); i < inputs.size();
         i = next.fetch_add(1)) {
      rows[i] = analyze_batch_file(inputs[i], partition_specs, gaussian,
                                   tol_phys);
    }
  };
  if (worker_count <= 1 || inputs.size() <= 1) {
    work();
  } else {
    std::vector<std::thread> workers;
    for (unsigned w = 0; w < worker_count; ++w) {
      workers.emplace_back(work);
    }
    for (std::thread& t : workers) {
      t.join();
    }
  }

  std::stable_sort(rows.begin(), rows.end(),
                   [](const Report& a, const Report& b) {
                     return std::tie(a.label, a.input) <
                            std::tie(b.label, b.input);
                   });
  std::ostringstream text;
  write_batch_text(text, rows);
  emit(opts, text.str(), batch_json_string(rows) + "\n");
  const bool any_error = std::any_of(rows.begin(), rows.end(),
                                     [](const Report& r) {
                                       return !r.errors.empty();
                                     });
  return any_error ? kExitParse : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Covariance-matrix analysis for continuous-variable states: "
               "uncertainty-relation validation, symplectic invariants and "
               "PPT separability verdicts"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  double tol_phys = tol::physical;

  // validate
  auto* validate_cmd = app.add_subcommand(
      "validate", "Check the uncertainty relations for a covariance matrix");
  std::string validate_file;
  OutputOptions validate_out;
  validate_cmd->add_option("file", validate_file, "Covariance-matrix file")
      ->required();
  validate_cmd->add_option("--tol-phys", tol_phys, "Physicality tolerance")
      ->capture_default_str();
  add_output_flags(validate_cmd, &validate_out);

  // invariants
  auto* invariants_cmd = app.add_subcommand(
      "invariants", "Print Delta_0..Delta_n, Sigma_n and the spectrum");
  std::string invariants_file;
  OutputOptions invariants_out;
  invariants_cmd->add_option("file", invariants_file, "Covariance-matrix file")
      ->required();
  invariants_cmd->add_option("--tol-phys", tol_phys, "Physicality tolerance")
      ->capture_default_str();
  add_output_flags(invariants_cmd, &invariants_out);

  // ppt
  auto* ppt_cmd = app.add_subcommand(
      "ppt", "Partial-transpose separability analysis of one bipartition");
  std::string ppt_file;
  std::string partition_text;
  bool gaussian = false;
  OutputOptions ppt_out;
  ppt_cmd->add_option("file", ppt_file, "Covariance-matrix file")->required();
  ppt_cmd->add_option("--partition", partition_text,
                      "Bipartition, e.g. \"1,2|3,4\" (1-based)")
      ->required();
  ppt_cmd->add_flag("--gaussian", gaussian,
                    "Assert that the state is Gaussian (enables SEPARABLE "
                    "verdicts for (1+n) and bisymmetric states)");
  ppt_cmd->add_option("--tol-phys", tol_phys, "Physicality tolerance")
      ->capture_default_str();
  add_output_flags(ppt_cmd, &ppt_out);

  // build
  auto* build_cmd =
      app.add_subcommand("build", "Write a reference covariance matrix file");
  BuildOptions build_opts;
  build_cmd
      ->add_option("kind", build_opts.kind,
                   "State kind: ghz | thermal | tms | vacuum")
      ->required()
      ->check(CLI::IsMember({"ghz", "thermal", "tms", "vacuum"}));
  build_cmd->add_option("--modes", build_opts.modes, "Mode count")
      ->capture_default_str();
  build_cmd->add_option("--r", build_opts.r, "Squeezing parameter")
      ->capture_default_str();
  build_cmd
      ->add_option("--q", build_opts.q_list,
                   "Thermal factor(s) >= 1 (comma separated for thermal)")
      ->delimiter(',');
  build_cmd->add_option("--tol-symp", build_opts.tol_symp,
                        "Symplecticity tolerance for the build network")
      ->capture_default_str();
  build_cmd->add_option("--out", build_opts.out_path, "Output file")
      ->required();
  build_cmd->add_option("--label", build_opts.label, "Label for the file");

  // batch
  auto* batch_cmd = app.add_subcommand(
      "batch", "Analyze a directory of .cm files or a manifest listing them");
  std::string batch_path;
  std::vector<std::string> batch_partitions;
  bool batch_gaussian = false;
  unsigned batch_jobs = 0;
  OutputOptions batch_out;
  batch_cmd->add_option("path", batch_path, "Directory or manifest file")
      ->required();
  batch_cmd->add_option("--partition", batch_partitions,
                        "Bipartition(s) to analyze; default: each single "
                        "mode versus the rest");
  batch_cmd->add_flag("--gaussian", batch_gaussian,
                      "Assert Gaussian states throughout");
  batch_cmd->add_option("--tol-phys", tol_phys, "Physicality tolerance")
      ->capture_default_str();
  batch_cmd->add_option("--jobs", batch_jobs,
                        "Worker threads (0 = hardware concurrency)")
      ->capture_default_str();
  add_output_flags(batch_cmd, &batch_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitParse;
  }

  try {
    if (validate_cmd->parsed()) {
      return run_validate(validate_file, tol_phys, validate_out);
    }
    if (invariants_cmd->parsed()) {
      return run_invariants(invariants_file, tol_phys, invariants_out);
    }
    if (ppt_cmd->parsed()) {
      return run_ppt(ppt_file, partition_text, gaussian, tol_phys, ppt_out);
    }
    if (build_cmd->parsed()) {
      if (!build_opts.q_list.empty()) {
        build_opts.q = build_opts.q_list.front();
      }
      return run_build(build_opts);
    }
    if (batch_cmd->parsed()) {
      return run_batch(batch_path, batch_partitions, batch_gaussian, tol_phys,
                       batch_jobs, batch_out);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  }
  return kExitParse;
}
