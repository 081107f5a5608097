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

// Independent test oracles. Everything here deliberately avoids the
// code paths it is used to check: spectra come from a complex
// eigensolver on Omega sigma, minor sums from explicit enumeration,
// and symmetric functions from direct polynomial expansion.

#ifndef CVSEP_TESTS_ORACLES_HPP
#define CVSEP_TESTS_ORACLES_HPP

#include <Eigen/Dense>

#include <cstdint>
#include <vector>

#include "cvsep/types.hpp"

namespace cvsep::oracles {

/// Moduli of the upper-half-plane eigenvalues of Omega sigma, sorted
/// descending (complex general eigendecomposition, no symmetric
/// reformulation).
std::vector<double> brute_force_spectrum(const Eigen::MatrixXd& sigma);

/// Sum of all order-k principal minors of a, by explicit enumeration
/// of index subsets and LU determinants.
double principal_minor_sum(const Eigen::MatrixXd& a, int order);

/// Elementary symmetric polynomials e_0..e_n of the given values, by
/// incremental expansion of prod_j (t + v_j).
std::vector<double> elementary_symmetric(const std::vector<double>& values);

double binomial(int n, int k);

/// Paper closed form for the 4-mode GHZ-type state under the 2+2
/// partial transpose: Delta~_j = q^{2j} (1 + g cosh 4r) (C(4,j) - 2g)
/// with g = min(j, 4-j).
double ghz4_delta_tilde(int j, double r, double q);

/// Separability threshold of the same bipartition: separable iff
/// cosh 4r <= (q^4 + 1) / (2 q^2).
double ghz4_threshold_cosh4r(double q);

/// S^T D S with a seeded random symplectic S and the given (not
/// necessarily physical) symplectic spectrum planted in D.
CovarianceMatrix planted_cm(const std::vector<double>& nus,
                            std::uint64_t seed);

/// Deterministic uniform double in [0, 1) from a raw engine output.
double uniform01(std::uint64_t word);

}  // namespace cvsep::oracles

#endif  // CVSEP_TESTS_ORACLES_HPP
