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

#ifndef CVSEP_REPORT_HPP
#define CVSEP_REPORT_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cvsep/invariants.hpp"
#include "cvsep/separability.hpp"
#include "cvsep/types.hpp"

namespace cvsep {

/// One analyzed bipartition with its verdict and, when computable, the
/// full PPT spectrum.
struct PartitionResult {
  std::string partition;  // "1,2|3,4", 1-based
  Verdict verdict;
  std::vector<double> nu_tilde;
};

/// Machine-readable analysis report. Every number it carries is
/// reproducible by re-running the tool on the same input with the same
/// tolerances.
struct Report {
  std::string input;   // file path, "-" for stdin
  std::string label;
  std::string digest;  // fnv1a-64 of the canonical matrix serialization
  int modes = 0;
  std::string tool_version;
  double tol_phys = tol::physical;
  double tol_symp = tol::symplectic;

  std::optional<FullUncertaintyReport> full_check;
  std::optional<SymplecticUncertaintyReport> symplectic_check;
  std::optional<InvariantVector> invariants;
  std::optional<SymplecticSpectrum> spectrum;
  std::vector<PartitionResult> partitions;

  std::vector<std::string> warnings;
  std::vector<std::string> errors;
};

/// FNV-1a 64-bit digest of the matrix serialized at full precision.
std::string matrix_digest(const CovarianceMatrix& cm);

void write_text(std::ostream& out, const Report& report);
std::string to_json_string(const Report& report);

/// Aggregate batch output: one row per file x bipartition, rows sorted
/// by label then input path.
void write_batch_text(std::ostream& out, const std::vector<Report>& rows);
std::string batch_json_string(const std::vector<Report>& rows);

}  // namespace cvsep

#endif  // CVSEP_REPORT_HPP
