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

#ifndef CVSEP_INVARIANTS_HPP
#define CVSEP_INVARIANTS_HPP

#include "cvsep/types.hpp"

namespace cvsep {

/// Symplectic eigenvalues of a positive definite covariance matrix,
/// sorted descending: the moduli of the conjugate eigenvalue pairs of
/// Omega sigma, computed through the symmetric matrix -(Omega sigma)^2
/// brought to explicitly symmetric form. Throws UnphysicalMatrixError
/// if sigma is not positive definite.
SymplecticSpectrum symplectic_eigenvalues(const CovarianceMatrix& sigma);

/// The invariants Delta_j = M_{2j}(Omega sigma) (sums of principal
/// minors of order 2j), computed as characteristic-polynomial
/// coefficients of Omega sigma by the Faddeev-LeVerrier recursion.
/// Also fills Sigma_n. Requires only symmetry of sigma, not
/// physicality. The odd-order minor sums are verified to vanish.
InvariantVector principal_invariants(const CovarianceMatrix& sigma);

/// Sigma_n = sum_{j=0}^{n} (-1)^{n+j} Delta_j. Equals the product of
/// (nu_j^2 - 1) over the symplectic spectrum.
double sigma_n(const CovarianceMatrix& sigma);

/// Outcome of the invariant-based uncertainty check Sigma_n >= 0.
/// Necessary for physicality; for n >= 2 it is not sufficient (an even
/// number of symplectic eigenvalues below 1 goes undetected), which the
/// necessary_only flag records.
struct SymplecticUncertaintyReport {
  bool pass = false;
  double sigma_n = 0.0;
  bool necessary_only = false;  // n >= 2
};

SymplecticUncertaintyReport check_symplectic_uncertainty(
    const CovarianceMatrix& sigma, double tol_phys = tol::physical);

/// Outcome of the full uncertainty relation sigma + i Omega >= 0,
/// decided as: sigma positive definite and min_j nu_j >= 1 - tol.
/// When sigma is not positive definite the spectrum is left empty.
struct FullUncertaintyReport {
  bool pass = false;
  bool positive_definite = false;
  SymplecticSpectrum spectrum;
  double min_nu = 0.0;  // meaningful only if positive_definite
};

FullUncertaintyReport check_full_uncertainty(const CovarianceMatrix& sigma,
                                             double tol_phys = tol::physical);

/// The two-mode equivalent set of conditions:
///   Delta_2 - Delta_1 + Delta_0 >= 0,  Delta_2 >= 1,  sigma > 0.
/// Agrees with check_full_uncertainty on every two-mode input. Throws
/// std::invalid_argument unless sigma has exactly two modes.
struct TwoModeReport {
  bool pass = false;
  bool sigma2_nonnegative = false;  // Delta_2 - Delta_1 + Delta_0 >= 0
  bool det_at_least_one = false;    // Delta_2 >= 1
  bool positive_definite = false;
  double sigma2 = 0.0;
  double det = 0.0;
};

TwoModeReport check_two_mode_full(const CovarianceMatrix& sigma,
                                  double tol_phys = tol::physical);

/// Reconstructs the symplectic spectrum from the invariants: the nu_j^2
/// are the roots of t^n - Delta_1 t^{n-1} + ... + (-1)^n Delta_n, found
/// as eigenvalues of the companion matrix. Throws
/// InconsistentInvariantsError if any root is complex or negative
/// beyond tol_root relative to the largest root magnitude.
SymplecticSpectrum recover_spectrum_from_invariants(
    const InvariantVector& invariants, double tol_root = tol::root);

}  // namespace cvsep

#endif  // CVSEP_INVARIANTS_HPP
