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

#ifndef CVSEP_SRC_INTERNAL_HPP
#define CVSEP_SRC_INTERNAL_HPP

#include <Eigen/Dense>

#include "cvsep/types.hpp"

namespace cvsep::detail {

inline double max_abs(const Eigen::MatrixXd& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

/// Dense symplectic form for n modes, (x1, p1, ..., xn, pn) ordering.
Eigen::MatrixXd omega_matrix(int n_modes);

/// Symmetric square root of a positive definite matrix; optionally also
/// its inverse. Throws UnphysicalMatrixError when the input fails the
/// pivoted-factorization positivity test.
Eigen::MatrixXd spd_sqrt(const Eigen::MatrixXd& m,
                         Eigen::MatrixXd* inv_sqrt = nullptr);

}  // namespace cvsep::detail

#endif  // CVSEP_SRC_INTERNAL_HPP
