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

#include "cvsep/cm_file.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "internal.hpp"

namespace cvsep {

namespace {

constexpr double kAsymmetryTolerance = 1e-9;  // relative to largest entry

std::string trim(const std::string& text) {
  const auto begin = text.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return {};
  const auto end = text.find_last_not_of(" \t\r\n");
  return text.substr(begin, end - begin + 1);
}

std::string format_double(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

}  // namespace

LoadedCm load_cm(std::istream& in) {
  int modes = -1;
  Convention convention = Convention::VacuumIdentity;
  std::string label;
  bool matrix_seen = false;

  std::string line;
  while (std::getline(in, line)) {
    const std::string stripped = trim(line);
    if (stripped.empty() || stripped[0] == '#') {
      continue;
    }
    if (stripped == "matrix") {
      matrix_seen = true;
      break;
    }
    const auto space = stripped.find_first_of(" \t");
    const std::string key =
        space == std::string::npos ? stripped : stripped.substr(0, space);
    const std::string value =
        space == std::string::npos ? "" : trim(stripped.substr(space + 1));
    if (key == "modes") {
      try {
        size_t pos = 0;
        modes = std::stoi(value, &pos);
        if (pos != value.size()) throw std::invalid_argument(value);
      } catch (const std::exception&) {
        throw ParseError("bad mode count '" + value + "'");
      }
      if (modes < 1) {
        throw ParseError("mode count must be at least 1");
      }
    } else if (key == "convention") {
      if (value == "vacuum_identity") {
        convention = Convention::VacuumIdentity;
      } else if (value == "vacuum_half") {
        convention = Convention::VacuumHalf;
      } else {
        throw ParseError("unknown convention '" + value + "'");
      }
    } else if (key == "label") {
      label = value;
    } else {
      throw ParseError("unknown key '" + key + "'");
    }
  }
  if (modes < 1) {
    throw ParseError("missing 'modes' declaration");
  }
  if (!matrix_seen) {
    throw ParseError("missing 'matrix' section");
  }

  const int dim = 2 * modes;
  Eigen::MatrixXd m(dim, dim);
  // Row-major numeric array; newlines are just whitespace here.
  std::string token;
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      if (!(in >> token)) {
        throw ParseError("matrix data ended early: expected " +
                         std::to_string(dim * dim) + " entries");
      }
      try {
        size_t pos = 0;
        m(i, j) = std::stod(token, &pos);
        if (pos != token.size()) throw std::invalid_argument(token);
      } catch (const std::exception&) {
        throw ParseError("bad matrix entry '" + token + "'");
      }
      if (!std::isfinite(m(i, j))) {
        throw ParseError("non-finite matrix entry '" + token + "'");
      }
    }
  }
  if (in >> token) {
    throw ParseError("trailing data after matrix entries");
  }

  std::vector<std::string> warnings;
  const double scale = std::max(1.0, detail::max_abs(m));
  const double asymmetry = detail::max_abs(m - m.transpose());
  if (asymmetry > kAsymmetryTolerance * scale) {
    throw ParseError("matrix is not symmetric (max asymmetry " +
                     format_double(asymmetry) + ")");
  }
  if (asymmetry > 0.0) {
    warnings.push_back("asymmetric input symmetrized (max asymmetry " +
                       format_double(asymmetry) + ")");
  }
  if (convention == Convention::VacuumHalf) {
    m *= 2.0;
  }
  return LoadedCm{CovarianceMatrix(std::move(m), label), std::move(warnings)};
}

LoadedCm load_cm_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot open '" + path + "'");
  }
  return load_cm(in);
}

void save_cm(std::ostream& out, const CovarianceMatrix& cm) {
  out << "modes " << cm.modes() << "\n";
  out << "convention vacuum_identity\n";
  if (!cm.label().empty()) {
    out << "label " << cm.label() << "\n";
  }
  out << "matrix\n";
  for (int i = 0; i < cm.dim(); ++i) {
    for (int j = 0; j < cm.dim(); ++j) {
      if (j > 0) out << " ";
      out << format_double(cm.matrix()(i, j));
    }
    out << "\n";
  }
}

void save_cm_file(const std::string& path, const CovarianceMatrix& cm) {
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("cannot write '" + path + "'");
  }
  save_cm(out, cm);
  if (!out.good()) {
    throw std::runtime_error("write failed for '" + path + "'");
  }
}

}  // namespace cvsep
