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

#include "cvsep/states.hpp"

#include <cmath>
#include <random>
#include <sstream>
#include <utility>

#include "cvsep/symplectic.hpp"
#include "internal.hpp"

namespace cvsep {

namespace {

std::string format_params(const char* name, std::initializer_list<double> vals) {
  std::ostringstream out;
  out << name << "(";
  bool first = true;
  for (double v : vals) {
    if (!first) out << ",";
    out << v;
    first = false;
  }
  out << ")";
  return out.str();
}

}  // namespace

CovarianceMatrix vacuum(int n_modes) {
  if (n_modes < 1) {
    throw std::invalid_argument("n_modes must be at least 1");
  }
  return CovarianceMatrix(Eigen::MatrixXd::Identity(2 * n_modes, 2 * n_modes),
                          format_params("vacuum", {double(n_modes)}));
}

CovarianceMatrix thermal(const std::vector<double>& q_list) {
  if (q_list.empty()) {
    throw std::invalid_argument("thermal state needs at least one mode");
  }
  const int n = static_cast<int>(q_list.size());
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(2 * n, 2 * n);
  std::ostringstream label;
  label << "thermal(";
  for (int j = 0; j < n; ++j) {
    const double q = q_list[static_cast<size_t>(j)];
    if (q < 1.0) {
      throw std::invalid_argument("thermal factor q must be >= 1");
    }
    m(2 * j, 2 * j) = q;
    m(2 * j + 1, 2 * j + 1) = q;
    label << (j > 0 ? "," : "") << q;
  }
  label << ")";
  return CovarianceMatrix(std::move(m), label.str());
}

CovarianceMatrix thermal(int n_modes, double q) {
  if (n_modes < 1) {
    throw std::invalid_argument("n_modes must be at least 1");
  }
  return thermal(std::vector<double>(static_cast<size_t>(n_modes), q));
}

CovarianceMatrix two_mode_squeezed(double r) {
  const double c = std::cosh(2.0 * r);
  const double s = std::sinh(2.0 * r);
  Eigen::MatrixXd m(4, 4);
  m << c, 0, s, 0,
       0, c, 0, -s,
       s, 0, c, 0,
       0, -s, 0, c;
  return CovarianceMatrix(std::move(m), format_params("tms", {r}));
}

CovarianceMatrix ghz_type(const GhzSpec& spec, double tol_symp) {
  const int n = spec.n_modes;
  if (n < 2 || spec.r < 0.0 || spec.q < 1.0) {
    throw std::invalid_argument(
        "GHZ spec needs n_modes >= 2, r >= 0 and q >= 1");
  }
  // Mode 0 momentum-squeezed, the rest position-squeezed.
  Eigen::MatrixXd net = squeezer(-spec.r, 0, n).matrix();
  for (int k = 1; k < n; ++k) {
    net = squeezer(spec.r, k, n).matrix() * net;
  }
  // N-splitter cascade: mode k mixed into mode k+1 with
  // cos(theta_k) = 1/sqrt(N - k).
  for (int k = 0; k + 1 < n; ++k) {
    const double theta = std::acos(1.0 / std::sqrt(double(n - k)));
    net = beam_splitter(theta, k, k + 1, n).matrix() * net;
  }
  if (!is_symplectic(net, tol_symp)) {
    throw std::runtime_error("GHZ network failed the symplecticity check");
  }
  Eigen::MatrixXd m = spec.q * (net * net.transpose());

  // The cascade distributes the first mode with alternating signs;
  // a pi rotation on every other mode makes the output exactly
  // permutation-symmetric. Applied as exact sign flips.
  for (int i = 0; i < 2 * n; ++i) {
    for (int j = 0; j < 2 * n; ++j) {
      const bool flip_i = (i / 2) % 2 == 1;
      const bool flip_j = (j / 2) % 2 == 1;
      if (flip_i != flip_j) {
        m(i, j) = -m(i, j);
      }
    }
  }

  std::ostringstream label;
  label << "ghz(n=" << n << ",r=" << spec.r << ",q=" << spec.q << ")";
  return CovarianceMatrix(std::move(m), label.str());
}

CovarianceMatrix random_physical_cm(int n_modes, double max_nu,
                                    std::uint64_t seed) {
  if (n_modes < 1) {
    throw std::invalid_argument("n_modes must be at least 1");
  }
  if (max_nu < 1.0) {
    throw std::invalid_argument("max_nu must be >= 1");
  }
  std::mt19937_64 engine(seed);
  auto uniform = [&engine]() {
    return static_cast<double>(engine() >> 11) * 0x1.0p-53;
  };
  Eigen::VectorXd d(2 * n_modes);
  for (int j = 0; j < n_modes; ++j) {
    const double nu = 1.0 + uniform() * (max_nu - 1.0);
    d(2 * j) = nu;
    d(2 * j + 1) = nu;
  }
  const SymplecticMatrix s = random_symplectic(n_modes, engine());
  Eigen::MatrixXd m =
      s.matrix().transpose() * d.asDiagonal() * s.matrix();
  std::ostringstream label;
  label << "random(n=" << n_modes << ",seed=" << seed << ")";
  return CovarianceMatrix(std::move(m), label.str());
}

}  // namespace cvsep
