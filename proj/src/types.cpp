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

#include "cvsep/types.hpp"

#include <algorithm>

namespace cvsep {

CovarianceMatrix::CovarianceMatrix(Eigen::MatrixXd matrix, std::string label)
    : label_(std::move(label)) {
  const Eigen::Index rows = matrix.rows();
  if (rows == 0 || rows != matrix.cols()) {
    throw std::invalid_argument("covariance matrix must be square and non-empty");
  }
  if (rows % 2 != 0) {
    throw std::invalid_argument("covariance matrix dimension must be even");
  }
  modes_ = static_cast<int>(rows / 2);
  matrix_ = 0.5 * (matrix + matrix.transpose()).eval();
}

Eigen::Matrix2d CovarianceMatrix::block(int i, int j) const {
  if (i < 0 || i >= modes_ || j < 0 || j >= modes_) {
    throw std::invalid_argument("mode index out of range");
  }
  return matrix_.block<2, 2>(2 * i, 2 * j);
}

SymplecticSpectrum::SymplecticSpectrum(std::vector<double> values)
    : values_(std::move(values)) {
  std::sort(values_.begin(), values_.end(), std::greater<double>());
}

double SymplecticSpectrum::min() const {
  if (values_.empty()) {
    throw std::logic_error("empty symplectic spectrum");
  }
  return values_.back();
}

double SymplecticSpectrum::max() const {
  if (values_.empty()) {
    throw std::logic_error("empty symplectic spectrum");
  }
  return values_.front();
}

}  // namespace cvsep
