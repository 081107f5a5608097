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

#ifndef CVSEP_CM_FILE_HPP
#define CVSEP_CM_FILE_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "cvsep/types.hpp"

namespace cvsep {

/// Convention tag recorded in covariance-matrix files. Inputs declared
/// vacuum_half (vacuum covariance = I/2) are rescaled by 2 on load so
/// that the in-memory convention is always vacuum_identity.
enum class Convention {
  VacuumIdentity,
  VacuumHalf,
};

/// A loaded covariance matrix plus any loader warnings (currently only
/// "asymmetric input symmetrized").
struct LoadedCm {
  CovarianceMatrix cm;
  std::vector<std::string> warnings;
};

/// Reads the structured-text covariance-matrix format:
///
///   modes 2
///   convention vacuum_identity
///   label optional free text
///   matrix
///   <2n rows of 2n whitespace-separated reals>
///
/// Asymmetric inputs within 1e-9 (relative to the largest entry) are
/// symmetrized with a warning; larger asymmetry is rejected. Throws
/// ParseError on any malformed input.
LoadedCm load_cm(std::istream& in);
LoadedCm load_cm_file(const std::string& path);

/// Writes the format above with 17 significant digits, which round
/// trips IEEE doubles exactly. Always writes convention
/// vacuum_identity.
void save_cm(std::ostream& out, const CovarianceMatrix& cm);
void save_cm_file(const std::string& path, const CovarianceMatrix& cm);

}  // namespace cvsep

#endif  // CVSEP_CM_FILE_HPP
