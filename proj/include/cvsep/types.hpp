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

#ifndef CVSEP_TYPES_HPP
#define CVSEP_TYPES_HPP

#include <Eigen/Dense>

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cvsep {

/// Default tolerances. Every check that uses one of these accepts an
/// override per call.
namespace tol {
inline constexpr double symplectic = 1e-9;  // ||S^T Omega S - Omega||_max
inline constexpr double numerical = 1e-8;   // decomposition residuals
inline constexpr double physical = 1e-9;    // nu >= 1 and Sigma_n >= 0 slack
inline constexpr double root = 1e-7;        // root recovery, relative
}  // namespace tol

/// Input matrix cannot describe a physical state where one is required
/// (typically: not positive definite).
class UnphysicalMatrixError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invariants handed to spectrum recovery do not come from a positive
/// matrix (complex or negative squared eigenvalues).
class InconsistentInvariantsError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed covariance-matrix file or partition string.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Real symmetric 2n x 2n matrix of second moments in the convention
/// where the vacuum state has unit covariance (nu_j >= 1 for physical
/// states). Quadratures are ordered (x1, p1, ..., xn, pn).
///
/// Symmetry is enforced on construction: the stored matrix is exactly
/// (M + M^T)/2. Physicality is a property to be checked, never assumed.
class CovarianceMatrix {
 public:
  explicit CovarianceMatrix(Eigen::MatrixXd matrix, std::string label = {});

  int modes() const { return modes_; }
  int dim() const { return 2 * modes_; }
  const Eigen::MatrixXd& matrix() const { return matrix_; }
  const std::string& label() const { return label_; }

  /// 2x2 submatrix describing mode i, or the correlations between
  /// modes i and j (0-based).
  Eigen::Matrix2d block(int i, int j) const;

 private:
  int modes_;
  Eigen::MatrixXd matrix_;
  std::string label_;
};

/// The n symplectic eigenvalues of a covariance matrix, sorted in
/// descending order.
class SymplecticSpectrum {
 public:
  SymplecticSpectrum() = default;
  explicit SymplecticSpectrum(std::vector<double> values);

  int size() const { return static_cast<int>(values_.size()); }
  const std::vector<double>& values() const { return values_; }
  double operator[](int j) const { return values_.at(static_cast<size_t>(j)); }
  double min() const;
  double max() const;

 private:
  std::vector<double> values_;  // descending
};

/// The symplectic invariants Delta_0 = 1, Delta_1, ..., Delta_n of an
/// n-mode covariance matrix, together with the derived alternating sum
/// Sigma_n = sum_j (-1)^{n+j} Delta_j.
struct InvariantVector {
  std::vector<double> deltas;  // size n+1, deltas[0] == 1
  double sigma_n = 0.0;

  int modes() const { return static_cast<int>(deltas.size()) - 1; }
};

}  // namespace cvsep

#endif  // CVSEP_TYPES_HPP
