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

#include "cvsep/symplectic.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <utility>

#include "internal.hpp"

namespace cvsep {

namespace detail {

Eigen::MatrixXd omega_matrix(int n_modes) {
  Eigen::MatrixXd omega = Eigen::MatrixXd::Zero(2 * n_modes, 2 * n_modes);
  for (int k = 0; k < n_modes; ++k) {
    omega(2 * k, 2 * k + 1) = 1.0;
    omega(2 * k + 1, 2 * k) = -1.0;
  }
  return omega;
}

Eigen::MatrixXd spd_sqrt(const Eigen::MatrixXd& m, Eigen::MatrixXd* inv_sqrt) {
  if (!is_positive_definite(m)) {
    throw UnphysicalMatrixError("matrix is not positive definite");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m);
  if (es.info() != Eigen::Success) {
    throw std::runtime_error("symmetric eigendecomposition failed");
  }
  const Eigen::VectorXd roots = es.eigenvalues().cwiseSqrt();
  const Eigen::MatrixXd& q = es.eigenvectors();
  if (inv_sqrt != nullptr) {
    *inv_sqrt = q * roots.cwiseInverse().asDiagonal() * q.transpose();
  }
  return q * roots.asDiagonal() * q.transpose();
}

}  // namespace detail

namespace {

// Canonical 2x2-block form of a real antisymmetric matrix K:
// orth^T K orth = (+)_j kappa_j * [[0, 1], [-1, 0]] with kappa_j > 0
// sorted descending. K must have no (numerically) real eigenvalues,
// which holds for K = sigma^{1/2} Omega sigma^{1/2} with sigma > 0.
struct AntisymmetricCanonical {
  Eigen::MatrixXd orth;
  std::vector<double> kappas;
};

AntisymmetricCanonical antisymmetric_canonical_form(const Eigen::MatrixXd& k) {
  const Eigen::Index dim = k.rows();
  Eigen::RealSchur<Eigen::MatrixXd> schur(k);
  if (schur.info() != Eigen::Success) {
    throw std::runtime_error("Schur decomposition failed");
  }
  const Eigen::MatrixXd& t = schur.matrixT();
  Eigen::MatrixXd u = schur.matrixU();

  std::vector<double> kappas;
  std::vector<Eigen::Index> starts;
  for (Eigen::Index i = 0; i < dim;) {
    if (i + 1 >= dim || t(i + 1, i) == 0.0) {
      throw std::runtime_error(
          "antisymmetric matrix has a numerically real eigenvalue");
    }
    if (t(i, i + 1) < 0.0) {
      u.col(i).swap(u.col(i + 1));  // transposes the block in the new basis
      kappas.push_back(0.5 * (t(i + 1, i) - t(i, i + 1)));
    } else {
      kappas.push_back(0.5 * (t(i, i + 1) - t(i + 1, i)));
    }
    starts.push_back(i);
    i += 2;
  }

  std::vector<size_t> order(kappas.size());
  std::iota(order.begin(), order.end(), size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    return kappas[a] > kappas[b];
  });

  AntisymmetricCanonical result;
  result.orth.resize(dim, dim);
  result.kappas.resize(kappas.size());
  for (size_t j = 0; j < order.size(); ++j) {
    result.orth.col(2 * static_cast<Eigen::Index>(j)) = u.col(starts[order[j]]);
    result.orth.col(2 * static_cast<Eigen::Index>(j) + 1) =
        u.col(starts[order[j]] + 1);
    result.kappas[j] = kappas[order[j]];
  }
  return result;
}

}  // namespace

SymplecticForm::SymplecticForm(int n_modes) : modes_(n_modes) {
  if (n_modes < 1) {
    throw std::invalid_argument("n_modes must be at least 1");
  }
  matrix_ = detail::omega_matrix(n_modes);
}

SymplecticForm build_omega(int n_modes) { return SymplecticForm(n_modes); }

bool is_symplectic(const Eigen::MatrixXd& s, double tol) {
  if (s.rows() == 0 || s.rows() != s.cols() || s.rows() % 2 != 0) {
    throw std::invalid_argument(
        "symplectic candidate must be square with even dimension");
  }
  const Eigen::MatrixXd omega =
      detail::omega_matrix(static_cast<int>(s.rows() / 2));
  return detail::max_abs(s.transpose() * omega * s - omega) <= tol;
}

SymplecticMatrix::SymplecticMatrix(Eigen::MatrixXd matrix, double tolerance)
    : matrix_(std::move(matrix)) {
  if (!is_symplectic(matrix_, tolerance)) {
    throw std::invalid_argument("matrix is not symplectic at the tolerance");
  }
  modes_ = static_cast<int>(matrix_.rows() / 2);
}

CovarianceMatrix SymplecticMatrix::apply_to(const CovarianceMatrix& sigma) const {
  if (sigma.modes() != modes_) {
    throw std::invalid_argument("mode count mismatch");
  }
  return CovarianceMatrix(matrix_ * sigma.matrix() * matrix_.transpose(),
                          sigma.label());
}

SymplecticMatrix SymplecticMatrix::operator*(const SymplecticMatrix& rhs) const {
  if (rhs.modes_ != modes_) {
    throw std::invalid_argument("mode count mismatch");
  }
  return SymplecticMatrix(matrix_ * rhs.matrix_);
}

SymplecticMatrix beam_splitter(double theta, int mode_a, int mode_b,
                               int n_modes) {
  if (n_modes < 1) {
    throw std::invalid_argument("n_modes must be at least 1");
  }
  if (mode_a == mode_b || mode_a < 0 || mode_b < 0 || mode_a >= n_modes ||
      mode_b >= n_modes) {
    throw std::invalid_argument("beam splitter needs two distinct valid modes");
  }
  Eigen::MatrixXd s = Eigen::MatrixXd::Identity(2 * n_modes, 2 * n_modes);
  const double c = std::cos(theta);
  const double sn = std::sin(theta);
  const Eigen::Matrix2d id2 = Eigen::Matrix2d::Identity();
  s.block<2, 2>(2 * mode_a, 2 * mode_a) = c * id2;
  s.block<2, 2>(2 * mode_a, 2 * mode_b) = sn * id2;
  s.block<2, 2>(2 * mode_b, 2 * mode_a) = -sn * id2;
  s.block<2, 2>(2 * mode_b, 2 * mode_b) = c * id2;
  return SymplecticMatrix(std::move(s));
}

SymplecticMatrix squeezer(double r, int mode, int n_modes) {
  if (n_modes < 1) {
    throw std::invalid_argument("n_modes must be at least 1");
  }
  if (mode < 0 || mode >= n_modes) {
    throw std::invalid_argument("squeezer mode index out of range");
  }
  Eigen::MatrixXd s = Eigen::MatrixXd::Identity(2 * n_modes, 2 * n_modes);
  s(2 * mode, 2 * mode) = std::exp(-r);
  s(2 * mode + 1, 2 * mode + 1) = std::exp(r);
  return SymplecticMatrix(std::move(s));
}

SymplecticMatrix phase_rotation(double phi, int mode, int n_modes) {
  if (n_modes < 1) {
    throw std::invalid_argument("n_modes must be at least 1");
  }
  if (mode < 0 || mode >= n_modes) {
    throw std::invalid_argument("rotation mode index out of range");
  }
  Eigen::MatrixXd s = Eigen::MatrixXd::Identity(2 * n_modes, 2 * n_modes);
  const double c = std::cos(phi);
  const double sn = std::sin(phi);
  s(2 * mode, 2 * mode) = c;
  s(2 * mode, 2 * mode + 1) = sn;
  s(2 * mode + 1, 2 * mode) = -sn;
  s(2 * mode + 1, 2 * mode + 1) = c;
  return SymplecticMatrix(std::move(s));
}

SymplecticMatrix random_symplectic(int n_modes, std::uint64_t seed) {
  if (n_modes < 1) {
    throw std::invalid_argument("n_modes must be at least 1");
  }
  const int dim = 2 * n_modes;
  std::mt19937_64 engine(seed);
  // Platform-stable uniform in [-1, 1).
  auto draw = [&engine]() {
    return 2.0 * (static_cast<double>(engine() >> 11) * 0x1.0p-53) - 1.0;
  };
  const double scale = 0.35;
  Eigen::MatrixXd h(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = i; j < dim; ++j) {
      const double value = scale * draw();
      h(i, j) = value;
      h(j, i) = value;
    }
  }
  const Eigen::MatrixXd generator = detail::omega_matrix(n_modes) * h;
  return SymplecticMatrix(generator.exp());
}

bool is_positive_definite(const Eigen::MatrixXd& m) {
  const Eigen::Index dim = m.rows();
  if (dim == 0 || dim != m.cols()) {
    return false;
  }
  const double max_diag = m.diagonal().maxCoeff();
  if (!(max_diag > 0.0)) {
    return false;
  }
  const double pivot_floor = 1e-12 * max_diag;
  Eigen::MatrixXd l = Eigen::MatrixXd::Zero(dim, dim);
  for (Eigen::Index k = 0; k < dim; ++k) {
    double pivot = m(k, k);
    for (Eigen::Index j = 0; j < k; ++j) {
      pivot -= l(k, j) * l(k, j);
    }
    if (!(pivot > pivot_floor)) {
      return false;
    }
    l(k, k) = std::sqrt(pivot);
    for (Eigen::Index i = k + 1; i < dim; ++i) {
      double value = m(i, k);
      for (Eigen::Index j = 0; j < k; ++j) {
        value -= l(i, j) * l(k, j);
      }
      l(i, k) = value / l(k, k);
    }
  }
  return true;
}

WilliamsonResult williamson(const CovarianceMatrix& sigma, double tol_num,
                            double tol_symp) {
  const int n = sigma.modes();
  Eigen::MatrixXd inv_sqrt;
  const Eigen::MatrixXd sqrt_sigma = detail::spd_sqrt(sigma.matrix(), &inv_sqrt);
  const Eigen::MatrixXd omega = detail::omega_matrix(n);

  Eigen::MatrixXd k = sqrt_sigma * omega * sqrt_sigma;
  k = 0.5 * (k - k.transpose()).eval();

  const AntisymmetricCanonical canon = antisymmetric_canonical_form(k);

  Eigen::VectorXd f(2 * n);
  for (int j = 0; j < n; ++j) {
    const double root = std::sqrt(canon.kappas[static_cast<size_t>(j)]);
    f(2 * j) = root;
    f(2 * j + 1) = root;
  }
  Eigen::MatrixXd s = inv_sqrt * canon.orth * f.asDiagonal();

  Eigen::MatrixXd normal_form = Eigen::MatrixXd::Zero(2 * n, 2 * n);
  for (int j = 0; j < n; ++j) {
    normal_form(2 * j, 2 * j) = canon.kappas[static_cast<size_t>(j)];
    normal_form(2 * j + 1, 2 * j + 1) = canon.kappas[static_cast<size_t>(j)];
  }
  const double scale = std::max(1.0, detail::max_abs(sigma.matrix()));
  const double residual =
      detail::max_abs(s.transpose() * sigma.matrix() * s - normal_form);
  if (residual > tol_num * scale) {
    throw std::runtime_error("Williamson decomposition residual too large");
  }

  return WilliamsonResult{SymplecticMatrix(std::move(s), tol_symp),
                          SymplecticSpectrum(canon.kappas)};
}

}  // namespace cvsep
