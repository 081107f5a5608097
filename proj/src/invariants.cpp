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

#include "cvsep/invariants.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "cvsep/symplectic.hpp"
#include "internal.hpp"

namespace cvsep {

namespace {

// Coefficients a_1..a_m of det(tI - A) = t^m + a_1 t^{m-1} + ... + a_m
// by the Faddeev-LeVerrier recursion. The sum of principal minors of
// order k is (-1)^k a_k.
std::vector<double> char_poly_coefficients(const Eigen::MatrixXd& a) {
  const Eigen::Index m = a.rows();
  std::vector<double> coeffs(static_cast<size_t>(m) + 1, 0.0);
  coeffs[0] = 1.0;
  Eigen::MatrixXd work = a;
  for (Eigen::Index k = 1; k <= m; ++k) {
    if (k > 1) {
      work = (a * (work + coeffs[static_cast<size_t>(k) - 1] *
                              Eigen::MatrixXd::Identity(m, m)))
                 .eval();
    }
    coeffs[static_cast<size_t>(k)] = -work.trace() / static_cast<double>(k);
  }
  return coeffs;
}

}  // namespace

SymplecticSpectrum symplectic_eigenvalues(const CovarianceMatrix& sigma) {
  const int n = sigma.modes();
  const Eigen::MatrixXd sqrt_sigma = detail::spd_sqrt(sigma.matrix());
  const Eigen::MatrixXd omega = detail::omega_matrix(n);
  const Eigen::MatrixXd k = sqrt_sigma * omega * sqrt_sigma;
  // -(Omega sigma)^2 is similar to K^T K, symmetric positive
  // semidefinite with each nu_j^2 appearing twice.
  Eigen::MatrixXd gram = k.transpose() * k;
  gram = 0.5 * (gram + gram.transpose()).eval();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(gram);
  if (es.info() != Eigen::Success) {
    throw std::runtime_error("symmetric eigendecomposition failed");
  }
  std::vector<double> nu(static_cast<size_t>(n));
  for (int j = 0; j < n; ++j) {
    const double pair_mean =
        0.5 * (es.eigenvalues()(2 * j) + es.eigenvalues()(2 * j + 1));
    nu[static_cast<size_t>(j)] = std::sqrt(std::max(pair_mean, 0.0));
  }
  return SymplecticSpectrum(std::move(nu));
}

InvariantVector principal_invariants(const CovarianceMatrix& sigma) {
  const int n = sigma.modes();
  const Eigen::MatrixXd a = detail::omega_matrix(n) * sigma.matrix();
  const std::vector<double> coeffs = char_poly_coefficients(a);

  InvariantVector result;
  result.deltas.resize(static_cast<size_t>(n) + 1);
  result.deltas[0] = 1.0;
  for (int j = 1; j <= n; ++j) {
    result.deltas[static_cast<size_t>(j)] = coeffs[static_cast<size_t>(2 * j)];
  }
  // Odd-order principal-minor sums of Omega sigma vanish identically;
  // a large residue would mean the recursion broke down.
  for (int j = 0; 2 * j + 1 <= 2 * n; ++j) {
    const double odd = -coeffs[static_cast<size_t>(2 * j + 1)];
    const double scale =
        std::max({1.0, std::abs(result.deltas[static_cast<size_t>(j)]),
                  j + 1 <= n
                      ? std::abs(result.deltas[static_cast<size_t>(j) + 1])
                      : 0.0});
    if (std::abs(odd) > 1e-9 * scale) {
      throw std::runtime_error(
          "odd-order principal minor sums failed to vanish");
    }
  }
  double sum = 0.0;
  for (int j = 0; j <= n; ++j) {
    const double term = result.deltas[static_cast<size_t>(j)];
    sum += ((n + j) % 2 == 0) ? term : -term;
  }
  result.sigma_n = sum;
  return result;
}

double sigma_n(const CovarianceMatrix& sigma) {
  return principal_invariants(sigma).sigma_n;
}

SymplecticUncertaintyReport check_symplectic_uncertainty(
    const CovarianceMatrix& sigma, double tol_phys) {
  const InvariantVector inv = principal_invariants(sigma);
  SymplecticUncertaintyReport report;
  report.sigma_n = inv.sigma_n;
  report.pass = inv.sigma_n >= -tol_phys;
  report.necessary_only = sigma.modes() >= 2;
  return report;
}

FullUncertaintyReport check_full_uncertainty(const CovarianceMatrix& sigma,
                                             double tol_phys) {
  FullUncertaintyReport report;
  report.positive_definite = is_positive_definite(sigma.matrix());
  if (!report.positive_definite) {
    report.pass = false;
    report.min_nu = std::numeric_limits<double>::quiet_NaN();
    return report;
  }
  report.spectrum = symplectic_eigenvalues(sigma);
  report.min_nu = report.spectrum.min();
  report.pass = report.min_nu >= 1.0 - tol_phys;
  return report;
}

TwoModeReport check_two_mode_full(const CovarianceMatrix& sigma,
                                  double tol_phys) {
  if (sigma.modes() != 2) {
    throw std::invalid_argument("two-mode check requires exactly two modes");
  }
  const InvariantVector inv = principal_invariants(sigma);
  TwoModeReport report;
  report.sigma2 = inv.sigma_n;  // Delta_2 - Delta_1 + Delta_0
  report.det = inv.deltas[2];
  report.sigma2_nonnegative = report.sigma2 >= -tol_phys;
  report.det_at_least_one = report.det >= 1.0 - tol_phys;
  report.positive_definite = is_positive_definite(sigma.matrix());
  report.pass = report.sigma2_nonnegative && report.det_at_least_one &&
                report.positive_definite;
  return report;
}

SymplecticSpectrum recover_spectrum_from_invariants(
    const InvariantVector& invariants, double tol_root) {
  const int n = invariants.modes();
  if (n < 1) {
    throw std::invalid_argument("need at least Delta_0 and Delta_1");
  }
  if (invariants.deltas[0] != 1.0) {
    throw std::invalid_argument("Delta_0 must be exactly 1");
  }
  // nu_j^2 are the roots of t^n - Delta_1 t^{n-1} + ... + (-1)^n Delta_n.
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(n, n);
  for (int i = 1; i < n; ++i) {
    companion(i, i - 1) = 1.0;
  }
  for (int j = 1; j <= n; ++j) {
    // coefficient of t^{n-j} is (-1)^j Delta_j; companion carries the
    // negated coefficients in its last column.
    const double coeff =
        (j % 2 == 0 ? 1.0 : -1.0) * invariants.deltas[static_cast<size_t>(j)];
    companion(n - j, n - 1) = -coeff;
  }
  Eigen::EigenSolver<Eigen::MatrixXd> es(companion);
  if (es.info() != Eigen::Success) {
    throw std::runtime_error("companion eigendecomposition failed");
  }
  double max_mag = 0.0;
  for (int j = 0; j < n; ++j) {
    max_mag = std::max(max_mag, std::abs(es.eigenvalues()(j)));
  }
  const double slack = tol_root * std::max(1.0, max_mag);
  std::vector<double> nu(static_cast<size_t>(n));
  for (int j = 0; j < n; ++j) {
    const std::complex<double> root = es.eigenvalues()(j);
    if (std::abs(root.imag()) > slack || root.real() < -slack) {
      throw InconsistentInvariantsError(
          "invariants are not those of a positive matrix");
    }
    nu[static_cast<size_t>(j)] = std::sqrt(std::max(root.real(), 0.0));
  }
  return SymplecticSpectrum(std::move(nu));
}

}  // namespace cvsep
