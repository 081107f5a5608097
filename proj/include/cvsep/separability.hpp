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

#ifndef CVSEP_SEPARABILITY_HPP
#define CVSEP_SEPARABILITY_HPP

#include <string>
#include <vector>

#include "cvsep/types.hpp"

namespace cvsep {

/// A split of the modes 0..(m+n-1) into a subsystem A of m modes and a
/// subsystem B of n modes. Both parts are non-empty, disjoint, sorted,
/// and together cover every mode.
class Bipartition {
 public:
  Bipartition(std::vector<int> modes_a, std::vector<int> modes_b);

  /// Complement bipartition ({all modes} \ modes_a serves as B).
  static Bipartition versus_rest(std::vector<int> modes_a, int total_modes);

  /// Parses "1,2|3,4" (1-based mode indices) against a known mode
  /// count. Throws ParseError on bad syntax, overlap, out-of-range
  /// indices or incomplete cover.
  static Bipartition parse(const std::string& text, int total_modes);

  const std::vector<int>& modes_a() const { return modes_a_; }
  const std::vector<int>& modes_b() const { return modes_b_; }
  int size_a() const { return static_cast<int>(modes_a_.size()); }
  int size_b() const { return static_cast<int>(modes_b_.size()); }
  int total_modes() const { return size_a() + size_b(); }

  /// Bipartition with the roles of A and B exchanged.
  Bipartition swapped() const;

  /// "1,2|3,4" with 1-based indices.
  std::string to_string() const;

 private:
  std::vector<int> modes_a_;
  std::vector<int> modes_b_;
};

enum class Status {
  Entangled,
  Separable,
  PptInconclusive,
  Unphysical,
};

const char* to_string(Status status);

/// Decision outcome with the evidence that produced it. sigma_tilde and
/// deltas_tilde are always filled; min_nu_tilde is NaN when the PPT
/// spectrum could not be computed (non positive definite input).
struct Verdict {
  Status status = Status::PptInconclusive;
  double sigma_tilde = 0.0;
  double min_nu_tilde = 0.0;
  std::vector<double> deltas_tilde;
  std::string basis;  // which rule fired
};

/// Partial transpose on phase space: sigma -> T sigma T with T flipping
/// the momentum signs of the modes in subsystem A. Applying it twice
/// returns the input bit-exactly.
CovarianceMatrix partial_transpose(const CovarianceMatrix& sigma,
                                   const Bipartition& part);

/// Symplectic eigenvalues of the partially transposed covariance
/// matrix. Throws UnphysicalMatrixError if sigma is not positive
/// definite (T sigma T > 0 iff sigma > 0).
SymplecticSpectrum ppt_spectrum(const CovarianceMatrix& sigma,
                                const Bipartition& part);

/// Sigma~ = sum_j (-1)^{m+n+j} Delta~_j computed from the invariants of
/// the partially transposed matrix. Nonnegative for every separable
/// state; negative values witness entanglement.
double sigma_tilde(const CovarianceMatrix& sigma, const Bipartition& part);

/// true iff sigma is invariant, entrywise within tol relative to its
/// largest entry, under every transposition of two modes inside A and
/// inside B. Pairwise swaps generate the full internal permutation
/// groups, so checking them suffices.
bool is_bisymmetric(const CovarianceMatrix& sigma, const Bipartition& part,
                    double tol = 1e-8);

/// Decision ladder:
///   (a) full uncertainty check fails            -> Unphysical
///   (b) Sigma~ < -tol or min nu~ < 1 - tol      -> Entangled
///   (c) gaussian and (min(m,n) == 1 or
///       bisymmetric)                            -> Separable
///   (d) otherwise                               -> PptInconclusive
/// Separable is only issued when the caller asserts Gaussianity: the
/// PPT criterion is sufficient for separability only for Gaussian
/// states of class (c).
Verdict separability_verdict(const CovarianceMatrix& sigma,
                             const Bipartition& part, bool assume_gaussian,
                             double tol_phys = tol::physical);

/// Number of partially transposed symplectic eigenvalues below
/// 1 - tol_phys. For every physical sigma this is at most min(m, n).
/// Throws UnphysicalMatrixError on unphysical input.
int little_lemma_violation_count(const CovarianceMatrix& sigma,
                                 const Bipartition& part,
                                 double tol_phys = tol::physical);

/// Reduced state of the listed modes (principal submatrix, original
/// mode order). Extension beyond bipartite analysis: useful for
/// inspecting marginals.
CovarianceMatrix reduced_state(const CovarianceMatrix& sigma,
                               const std::vector<int>& modes);

}  // namespace cvsep

#endif  // CVSEP_SEPARABILITY_HPP
