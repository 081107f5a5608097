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

#include "cvsep/separability.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <sstream>
#include <utility>

#include "cvsep/invariants.hpp"
#include "cvsep/symplectic.hpp"
#include "internal.hpp"

namespace cvsep {

namespace {

void validate_part(std::vector<int>& modes, int total, const char* name) {
  if (modes.empty()) {
    throw std::invalid_argument(std::string(name) + " must be non-empty");
  }
  std::sort(modes.begin(), modes.end());
  if (std::adjacent_find(modes.begin(), modes.end()) != modes.end()) {
    throw std::invalid_argument(std::string(name) + " has duplicate modes");
  }
  if (modes.front() < 0 || modes.back() >= total) {
    throw std::invalid_argument(std::string(name) + " has out-of-range modes");
  }
}

std::vector<int> parse_index_list(const std::string& text) {
  std::vector<int> indices;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    size_t pos = 0;
    int value = 0;
    try {
      value = std::stoi(item, &pos);
    } catch (const std::exception&) {
      throw ParseError("bad mode index '" + item + "'");
    }
    while (pos < item.size() && std::isspace(static_cast<unsigned char>(item[pos]))) {
      ++pos;
    }
    if (pos != item.size()) {
      throw ParseError("bad mode index '" + item + "'");
    }
    indices.push_back(value);
  }
  if (indices.empty()) {
    throw ParseError("empty mode list in partition");
  }
  return indices;
}

std::string join_one_based(const std::vector<int>& modes) {
  std::string out;
  for (size_t i = 0; i < modes.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(modes[i] + 1);
  }
  return out;
}

// Covariance matrix with two modes exchanged.
Eigen::MatrixXd swap_modes(const Eigen::MatrixXd& m, int a, int b) {
  Eigen::MatrixXd out = m;
  out.row(2 * a).swap(out.row(2 * b));
  out.row(2 * a + 1).swap(out.row(2 * b + 1));
  out.col(2 * a).swap(out.col(2 * b));
  out.col(2 * a + 1).swap(out.col(2 * b + 1));
  return out;
}

}  // namespace

Bipartition::Bipartition(std::vector<int> modes_a, std::vector<int> modes_b)
    : modes_a_(std::move(modes_a)), modes_b_(std::move(modes_b)) {
  const int total = static_cast<int>(modes_a_.size() + modes_b_.size());
  validate_part(modes_a_, total, "subsystem A");
  validate_part(modes_b_, total, "subsystem B");
  std::vector<int> all;
  all.reserve(static_cast<size_t>(total));
  std::merge(modes_a_.begin(), modes_a_.end(), modes_b_.begin(), modes_b_.end(),
             std::back_inserter(all));
  for (int i = 0; i < total; ++i) {
    if (all[static_cast<size_t>(i)] != i) {
      throw std::invalid_argument(
          "subsystems must be disjoint and cover every mode");
    }
  }
}

Bipartition Bipartition::versus_rest(std::vector<int> modes_a,
                                     int total_modes) {
  std::sort(modes_a.begin(), modes_a.end());
  std::vector<int> modes_b;
  for (int i = 0; i < total_modes; ++i) {
    if (!std::binary_search(modes_a.begin(), modes_a.end(), i)) {
      modes_b.push_back(i);
    }
  }
  return Bipartition(std::move(modes_a), std::move(modes_b));
}

Bipartition Bipartition::parse(const std::string& text, int total_modes) {
  const size_t bar = text.find('|');
  if (bar == std::string::npos || text.find('|', bar + 1) != std::string::npos) {
    throw ParseError("partition must be 'i,j,...|k,l,...'");
  }
  std::vector<int> a = parse_index_list(text.substr(0, bar));
  std::vector<int> b = parse_index_list(text.substr(bar + 1));
  for (int& v : a) --v;  // 1-based on the wire
  for (int& v : b) --v;
  if (static_cast<int>(a.size() + b.size()) != total_modes) {
    throw ParseError("partition must cover all " +
                     std::to_string(total_modes) + " modes exactly once");
  }
  try {
    return Bipartition(std::move(a), std::move(b));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

Bipartition Bipartition::swapped() const {
  return Bipartition(modes_b_, modes_a_);
}

std::string Bipartition::to_string() const {
  return join_one_based(modes_a_) + "|" + join_one_based(modes_b_);
}

const char* to_string(Status status) {
  switch (status) {
    case Status::Entangled:
      return "ENTANGLED";
    case Status::Separable:
      return "SEPARABLE";
    case Status::PptInconclusive:
      return "PPT_INCONCLUSIVE";
    case Status::Unphysical:
      return "UNPHYSICAL";
  }
  return "UNKNOWN";
}

CovarianceMatrix partial_transpose(const CovarianceMatrix& sigma,
                                   const Bipartition& part) {
  if (part.total_modes() != sigma.modes()) {
    throw std::invalid_argument("partition does not match the mode count");
  }
  // T is diagonal with -1 on the momentum rows of subsystem A, so
  // T sigma T only flips signs; the involution is bit-exact.
  Eigen::VectorXd t = Eigen::VectorXd::Ones(sigma.dim());
  for (int mode : part.modes_a()) {
    t(2 * mode + 1) = -1.0;
  }
  Eigen::MatrixXd out = sigma.matrix();
  for (int i = 0; i < sigma.dim(); ++i) {
    for (int j = 0; j < sigma.dim(); ++j) {
      if (t(i) * t(j) < 0.0) {
        out(i, j) = -out(i, j);
      }
    }
  }
  return CovarianceMatrix(std::move(out), sigma.label());
}

SymplecticSpectrum ppt_spectrum(const CovarianceMatrix& sigma,
                                const Bipartition& part) {
  return symplectic_eigenvalues(partial_transpose(sigma, part));
}

double sigma_tilde(const CovarianceMatrix& sigma, const Bipartition& part) {
  return principal_invariants(partial_transpose(sigma, part)).sigma_n;
}

bool is_bisymmetric(const CovarianceMatrix& sigma, const Bipartition& part,
                    double tol) {
  if (part.total_modes() != sigma.modes()) {
    throw std::invalid_argument("partition does not match the mode count");
  }
  const Eigen::MatrixXd& m = sigma.matrix();
  const double threshold = tol * std::max(detail::max_abs(m),
                                          std::numeric_limits<double>::min());
  auto part_is_symmetric = [&](const std::vector<int>& modes) {
    for (size_t i = 0; i < modes.size(); ++i) {
      for (size_t j = i + 1; j < modes.size(); ++j) {
        const Eigen::MatrixXd swapped = swap_modes(m, modes[i], modes[j]);
        if (detail::max_abs(swapped - m) > threshold) {
          return false;
        }
      }
    }
    return true;
  };
  return part_is_symmetric(part.modes_a()) && part_is_symmetric(part.modes_b());
}

Verdict separability_verdict(const CovarianceMatrix& sigma,
                             const Bipartition& part, bool assume_gaussian,
                             double tol_phys) {
  if (part.total_modes() != sigma.modes()) {
    throw std::invalid_argument("partition does not match the mode count");
  }
  Verdict verdict;
  const CovarianceMatrix transposed = partial_transpose(sigma, part);
  const InvariantVector inv_tilde = principal_invariants(transposed);
  verdict.sigma_tilde = inv_tilde.sigma_n;
  verdict.deltas_tilde = inv_tilde.deltas;
  verdict.min_nu_tilde = std::numeric_limits<double>::quiet_NaN();

  const FullUncertaintyReport full = check_full_uncertainty(sigma, tol_phys);
  if (full.positive_definite) {
    verdict.min_nu_tilde = symplectic_eigenvalues(transposed).min();
  }
  if (!full.pass) {
    verdict.status = Status::Unphysical;
    verdict.basis = "full uncertainty relation violated";
    return verdict;
  }

  const bool sigma_violation = verdict.sigma_tilde < -tol_phys;
  const bool nu_violation = verdict.min_nu_tilde < 1.0 - tol_phys;
  if (sigma_violation || nu_violation) {
    verdict.status = Status::Entangled;
    if (sigma_violation && nu_violation) {
      verdict.basis = "PPT violated: sigma_tilde < 0 and min nu_tilde < 1";
    } else if (sigma_violation) {
      verdict.basis = "PPT violated: sigma_tilde < 0";
    } else {
      verdict.basis = "PPT violated: min nu_tilde < 1";
    }
    return verdict;
  }

  if (assume_gaussian) {
    if (std::min(part.size_a(), part.size_b()) == 1) {
      verdict.status = Status::Separable;
      verdict.basis = "PPT holds; sufficient for (1+n)-mode Gaussian states";
      return verdict;
    }
    if (is_bisymmetric(sigma, part)) {
      verdict.status = Status::Separable;
      verdict.basis = "PPT holds; sufficient for bisymmetric Gaussian states";
      return verdict;
    }
  }
  verdict.status = Status::PptInconclusive;
  verdict.basis = assume_gaussian
                      ? "PPT holds but is not sufficient for general "
                        "(m+n)-mode states with m, n >= 2"
                      : "PPT holds but sufficiency requires a Gaussian state";
  return verdict;
}

int little_lemma_violation_count(const CovarianceMatrix& sigma,
                                 const Bipartition& part, double tol_phys) {
  if (!check_full_uncertainty(sigma, tol_phys).pass) {
    throw UnphysicalMatrixError(
        "little-lemma count requires a physical covariance matrix");
  }
  const SymplecticSpectrum spectrum = ppt_spectrum(sigma, part);
  int count = 0;
  for (double nu : spectrum.values()) {
    if (nu < 1.0 - tol_phys) {
      ++count;
    }
  }
  return count;
}

CovarianceMatrix reduced_state(const CovarianceMatrix& sigma,
                               const std::vector<int>& modes) {
  std::vector<int> kept = modes;
  std::sort(kept.begin(), kept.end());
  if (kept.empty() ||
      std::adjacent_find(kept.begin(), kept.end()) != kept.end() ||
      kept.front() < 0 || kept.back() >= sigma.modes()) {
    throw std::invalid_argument("invalid mode list for reduction");
  }
  const int n = static_cast<int>(kept.size());
  Eigen::MatrixXd out(2 * n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      out.block<2, 2>(2 * i, 2 * j) =
          sigma.matrix().block<2, 2>(2 * kept[static_cast<size_t>(i)],
                                     2 * kept[static_cast<size_t>(j)]);
    }
  }
  return CovarianceMatrix(std::move(out), sigma.label());
}

}  // namespace cvsep
