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

#ifndef CVSEP_SYMPLECTIC_HPP
#define CVSEP_SYMPLECTIC_HPP

#include <cstdint>

#include "cvsep/types.hpp"

namespace cvsep {

/// The symplectic form Omega = omega (+) ... (+) omega with
/// omega = [[0, 1], [-1, 0]], in (x1, p1, ..., xn, pn) ordering.
/// Antisymmetric, Omega^2 = -I, det Omega = 1.
class SymplecticForm {
 public:
  explicit SymplecticForm(int n_modes);

  int modes() const { return modes_; }
  const Eigen::MatrixXd& matrix() const { return matrix_; }

 private:
  int modes_;
  Eigen::MatrixXd matrix_;
};

SymplecticForm build_omega(int n_modes);

/// true iff ||S^T Omega S - Omega||_max <= tol. Throws on odd dimension.
bool is_symplectic(const Eigen::MatrixXd& s, double tol = tol::symplectic);

/// A real 2n x 2n matrix with S^T Omega S = Omega: the phase-space
/// action of a Gaussian unitary. The constructor verifies symplecticity
/// at the given tolerance and throws std::invalid_argument otherwise.
class SymplecticMatrix {
 public:
  explicit SymplecticMatrix(Eigen::MatrixXd matrix,
                            double tolerance = tol::symplectic);

  int modes() const { return modes_; }
  const Eigen::MatrixXd& matrix() const { return matrix_; }

  /// Congruence action on a covariance matrix: sigma -> S sigma S^T.
  CovarianceMatrix apply_to(const CovarianceMatrix& sigma) const;

  SymplecticMatrix operator*(const SymplecticMatrix& rhs) const;

 private:
  int modes_;
  Eigen::MatrixXd matrix_;
};

/// Two-mode mixing with cos(theta)/sin(theta) weights acting identically
/// on the x and p quadratures of modes a and b (0-based), identity
/// elsewhere. theta = 0 is the identity.
SymplecticMatrix beam_splitter(double theta, int mode_a, int mode_b,
                               int n_modes);

/// Single-mode squeezer diag(e^{-r}, e^{r}) on the (x, p) block of the
/// given mode (x-squeezed for r > 0), identity elsewhere.
SymplecticMatrix squeezer(double r, int mode, int n_modes);

/// Phase-space rotation by angle phi on one mode (phi = pi flips the
/// signs of both quadratures), identity elsewhere.
SymplecticMatrix phase_rotation(double phi, int mode, int n_modes);

/// Random symplectic matrix exp(Omega H) for a seeded random symmetric H
/// with bounded entries. Deterministic for a fixed seed.
SymplecticMatrix random_symplectic(int n_modes, std::uint64_t seed);

struct WilliamsonResult {
  SymplecticMatrix transform;    // S with S^T sigma S = diag(nu (x) I_2)
  SymplecticSpectrum spectrum;   // nu sorted descending
};

/// Williamson normal form of a positive definite covariance matrix:
/// S^T sigma S = (+)_j diag(nu_j, nu_j) with S symplectic and the nu_j
/// sorted descending. S is not unique; only the stated residuals are
/// promised. Throws UnphysicalMatrixError if sigma is not positive
/// definite.
WilliamsonResult williamson(const CovarianceMatrix& sigma,
                            double tol_num = tol::numerical,
                            double tol_symp = tol::symplectic);

/// Positive definiteness via a symmetric triangular factorization with
/// pivot threshold 1e-12 relative to the largest diagonal entry.
bool is_positive_definite(const Eigen::MatrixXd& m);

}  // namespace cvsep

#endif  // CVSEP_SYMPLECTIC_HPP
