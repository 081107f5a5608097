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

#ifndef CVSEP_STATES_HPP
#define CVSEP_STATES_HPP

#include <cstdint>
#include <vector>

#include "cvsep/types.hpp"

namespace cvsep {

/// Parameters of the GHZ-type multimode state: squeezed vacua fed into
/// a beam-splitter cascade, then uniform thermal noise q (mean photon
/// number q - 1) multiplying the covariance matrix.
struct GhzSpec {
  int n_modes = 2;   // >= 2
  double r = 0.0;    // squeezing, >= 0
  double q = 1.0;    // thermal noise factor, >= 1
};

/// Identity covariance matrix (vacuum of n modes).
CovarianceMatrix vacuum(int n_modes);

/// Product thermal state (+)_j diag(q_j, q_j). Every q_j must be >= 1.
CovarianceMatrix thermal(const std::vector<double>& q_list);
CovarianceMatrix thermal(int n_modes, double q);

/// Two-mode squeezed state [[c I, s Z], [s Z, c I]] with c = cosh 2r,
/// s = sinh 2r, Z = diag(1, -1).
CovarianceMatrix two_mode_squeezed(double r);

/// GHZ-type state: mode 0 momentum-squeezed with r, modes 1..N-1
/// position-squeezed with r, mixed by the N-splitter cascade of beam
/// splitters with theta_k = arccos(1/sqrt(N - k)) on modes (k, k+1),
/// k = 0..N-2, then the covariance matrix multiplied by q. The output
/// is fully permutation-symmetric. Throws std::invalid_argument on an
/// invalid spec.
CovarianceMatrix ghz_type(const GhzSpec& spec,
                          double tol_symp = tol::symplectic);

/// S^T D S for a seeded random symplectic S and D with symplectic
/// eigenvalues drawn uniformly from [1, max_nu]: always a physical
/// state, deterministic per seed.
CovarianceMatrix random_physical_cm(int n_modes, double max_nu,
                                    std::uint64_t seed);

}  // namespace cvsep

#endif  // CVSEP_STATES_HPP
