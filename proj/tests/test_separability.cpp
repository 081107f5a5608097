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

#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <vector>

#include "cvsep/invariants.hpp"
#include "cvsep/separability.hpp"
#include "cvsep/states.hpp"
#include "cvsep/symplectic.hpp"
#include "oracles.hpp"

using namespace cvsep;

namespace {

Eigen::MatrixXd direct_sum(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  Eigen::MatrixXd out =
      Eigen::MatrixXd::Zero(a.rows() + b.rows(), a.cols() + b.cols());
  out.topLeftCorner(a.rows(), a.cols()) = a;
  out.bottomRightCorner(b.rows(), b.cols()) = b;
  return out;
}

}  // namespace

TEST_CASE("Bipartition validation and parsing") {
  const Bipartition part({0, 1}, {2, 3});
  CHECK(part.size_a() == 2);
  CHECK(part.size_b() == 2);
  CHECK(part.to_string() == "1,2|3,4");

  CHECK_THROWS_AS(Bipartition({0, 1}, {1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Bipartition({0}, {2}), std::invalid_argument);
  CHECK_THROWS_AS(Bipartition({}, {0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Bipartition({0, 0}, {1, 2}), std::invalid_argument);

  const Bipartition parsed = Bipartition::parse("1,3|2,4", 4);
  CHECK(parsed.modes_a() == std::vector<int>{0, 2});
  CHECK(parsed.modes_b() == std::vector<int>{1, 3});

  CHECK_THROWS_AS(Bipartition::parse("1,2", 2), ParseError);
  CHECK_THROWS_AS(Bipartition::parse("1,2|2,3", 4), ParseError);
  CHECK_THROWS_AS(Bipartition::parse("1|2,x", 3), ParseError);
  CHECK_THROWS_AS(Bipartition::parse("1|2", 3), ParseError);
  CHECK_THROWS_AS(Bipartition::parse("0|1,2", 3), ParseError);

  const Bipartition rest = Bipartition::versus_rest({1}, 3);
  CHECK(rest.modes_a() == std::vector<int>{1});
  CHECK(rest.modes_b() == std::vector<int>{0, 2});
}

TEST_CASE("partial transpose flips the momentum signs of A") {
  const Bipartition part({0}, {1});
  const CovarianceMatrix vac = vacuum(2);
  CHECK((partial_transpose(vac, part).matrix() - vac.matrix())
            .cwiseAbs()
            .maxCoeff() == 0.0);

  const double r = 0.4;
  const CovarianceMatrix tms = two_mode_squeezed(r);
  const CovarianceMatrix transposed = partial_transpose(tms, part);
  const double s = std::sinh(2.0 * r);
  CHECK(transposed.matrix()(1, 3) == doctest::Approx(s).epsilon(1e-14));
  CHECK(transposed.matrix()(0, 2) == doctest::Approx(s).epsilon(1e-14));

  CHECK_THROWS_AS(partial_transpose(tms, Bipartition({0}, {1, 2})),
                  std::invalid_argument);
}

TEST_CASE("partial transpose is a bit-exact involution") {
  std::uint64_t seed = 345;
  for (int rep = 0; rep < 5; ++rep) {
    const CovarianceMatrix sigma = random_physical_cm(4, 2.5, seed++);
    const Bipartition part = Bipartition::parse("1,3|2,4", 4);
    const CovarianceMatrix twice =
        partial_transpose(partial_transpose(sigma, part), part);
    CHECK((twice.matrix() - sigma.matrix()).cwiseAbs().maxCoeff() == 0.0);
  }
}

TEST_CASE("ppt spectrum of the two-mode squeezed state") {
  const double r = 0.7;
  const SymplecticSpectrum nu =
      ppt_spectrum(two_mode_squeezed(r), Bipartition({0}, {1}));
  CHECK(nu[0] == doctest::Approx(std::exp(2.0 * r)).epsilon(1e-10));
  CHECK(nu[1] == doctest::Approx(std::exp(-2.0 * r)).epsilon(1e-10));

  // Against the brute-force oracle on T sigma T.
  const CovarianceMatrix transposed =
      partial_transpose(two_mode_squeezed(r), Bipartition({0}, {1}));
  const std::vector<double> oracle =
      oracles::brute_force_spectrum(transposed.matrix());
  CHECK(nu[0] == doctest::Approx(oracle[0]).epsilon(1e-10));
  CHECK(nu[1] == doctest::Approx(oracle[1]).epsilon(1e-10));
}

TEST_CASE("ppt spectrum of a product state stays above one") {
  const CovarianceMatrix a = random_physical_cm(1, 2.0, 50);
  const CovarianceMatrix b = random_physical_cm(2, 2.0, 51);
  const CovarianceMatrix product =
      CovarianceMatrix(direct_sum(a.matrix(), b.matrix()));
  const SymplecticSpectrum nu =
      ppt_spectrum(product, Bipartition({0}, {1, 2}));
  CHECK(nu.min() >= 1.0 - 1e-9);

  // Union of the subsystem spectra.
  const SymplecticSpectrum nu_a = symplectic_eigenvalues(a);
  const SymplecticSpectrum nu_b = symplectic_eigenvalues(b);
  std::vector<double> expected = nu_a.values();
  for (double v : nu_b.values()) {
    expected.push_back(v);
  }
  std::sort(expected.begin(), expected.end(), std::greater<double>());
  for (int j = 0; j < 3; ++j) {
    CHECK(nu[j] ==
          doctest::Approx(expected[static_cast<size_t>(j)]).epsilon(1e-9));
  }
}

TEST_CASE("ppt spectrum is independent of the transposed side") {
  std::uint64_t seed = 7000;
  for (int rep = 0; rep < 6; ++rep) {
    const CovarianceMatrix sigma = random_physical_cm(5, 2.5, seed++);
    const Bipartition part = Bipartition::parse("1,4|2,3,5", 5);
    const SymplecticSpectrum left = ppt_spectrum(sigma, part);
    const SymplecticSpectrum right = ppt_spectrum(sigma, part.swapped());
    for (int j = 0; j < 5; ++j) {
      CHECK(left[j] == doctest::Approx(right[j]).epsilon(1e-9));
    }
  }
}

TEST_CASE("sigma_tilde closed forms") {
  CHECK(sigma_tilde(vacuum(3), Bipartition({0}, {1, 2})) ==
        doctest::Approx(0.0).scale(1.0).epsilon(1e-12));

  for (double r : {0.1, 0.3, 0.8}) {
    const double expected = 2.0 - 2.0 * std::cosh(4.0 * r);
    CHECK(sigma_tilde(two_mode_squeezed(r), Bipartition({0}, {1})) ==
          doctest::Approx(expected).epsilon(1e-11));
  }
}

TEST_CASE("sigma_tilde vanishes exactly at the GHZ threshold") {
  for (double q : {1.1, 1.5, 2.0}) {
    const double r_star =
        0.25 * std::acosh(oracles::ghz4_threshold_cosh4r(q));
    const CovarianceMatrix at_threshold = ghz_type(GhzSpec{4, r_star, q});
    const double value =
        sigma_tilde(at_threshold, Bipartition::parse("1,2|3,4", 4));
    CHECK(std::abs(value) <= 1e-8 * std::pow(q, 8));
  }
}

TEST_CASE("bisymmetry detection") {
  CHECK(is_bisymmetric(vacuum(4), Bipartition::parse("1,2|3,4", 4)));
  CHECK(is_bisymmetric(ghz_type(GhzSpec{4, 0.6, 1.2}),
                       Bipartition::parse("1,2|3,4", 4), 1e-9));
  CHECK(is_bisymmetric(ghz_type(GhzSpec{5, 0.4, 1.0}),
                       Bipartition::parse("1,3|2,4,5", 5), 1e-9));

  // Two-mode squeezing on modes (1,2) plus two vacua: swapping modes 1
  // and 3 changes the correlations, so A = {1,3} is not symmetric.
  const CovarianceMatrix mixed = CovarianceMatrix(
      direct_sum(two_mode_squeezed(0.5).matrix(),
                 Eigen::MatrixXd::Identity(4, 4)));
  CHECK_FALSE(is_bisymmetric(mixed, Bipartition::parse("1,3|2,4", 4)));
}

TEST_CASE("verdicts on reference states") {
  const Verdict vac =
      separability_verdict(vacuum(3), Bipartition({0}, {1, 2}), true);
  CHECK(vac.status == Status::Separable);

  const Verdict tms = separability_verdict(two_mode_squeezed(0.3),
                                           Bipartition({0}, {1}), true);
  CHECK(tms.status == Status::Entangled);
  CHECK(tms.sigma_tilde ==
        doctest::Approx(2.0 - 2.0 * std::cosh(1.2)).epsilon(1e-12));

  // Unphysical input.
  const Verdict bad = separability_verdict(oracles::planted_cm({0.5, 0.5}, 3),
                                           Bipartition({0}, {1}), true);
  CHECK(bad.status == Status::Unphysical);

  // PPT holds, no sufficiency class applies: 2+2 non-bisymmetric.
  const CovarianceMatrix product = CovarianceMatrix(direct_sum(
      random_physical_cm(2, 1.8, 60).matrix(),
      random_physical_cm(2, 1.4, 61).matrix()));
  const Verdict inconclusive =
      separability_verdict(product, Bipartition::parse("1,2|3,4", 4), true);
  CHECK(inconclusive.status == Status::PptInconclusive);

  // Same state without the Gaussian assertion: separable single-mode
  // split becomes inconclusive.
  const Verdict no_flag =
      separability_verdict(vacuum(2), Bipartition({0}, {1}), false);
  CHECK(no_flag.status == Status::PptInconclusive);
}

TEST_CASE("GHZ verdict crosses the paper threshold") {
  for (double q : {1.1, 1.5, 2.0}) {
    const double r_star =
        0.25 * std::acosh(oracles::ghz4_threshold_cosh4r(q));
    const Bipartition part = Bipartition::parse("1,2|3,4", 4);
    const Verdict below = separability_verdict(
        ghz_type(GhzSpec{4, r_star - 1e-3, q}), part, true);
    CHECK(below.status == Status::Separable);
    const Verdict above = separability_verdict(
        ghz_type(GhzSpec{4, r_star + 1e-3, q}), part, true);
    CHECK(above.status == Status::Entangled);
  }
}

TEST_CASE("pure GHZ 2+2 entanglement is caught by the spectrum rule") {
  // For q = 1 the product Sigma~ vanishes identically (a nu~ sits at 1),
  // so detection rests on min nu~ < 1.
  const Verdict pure = separability_verdict(
      ghz_type(GhzSpec{4, 0.5, 1.0}), Bipartition::parse("1,2|3,4", 4), true);
  CHECK(pure.status == Status::Entangled);
  CHECK(std::abs(pure.sigma_tilde) <= 1e-9);
  CHECK(pure.min_nu_tilde < 1.0);
}

TEST_CASE("little lemma count") {
  CHECK(little_lemma_violation_count(vacuum(3), Bipartition({0}, {1, 2})) == 0);
  CHECK(little_lemma_violation_count(two_mode_squeezed(0.5),
                                     Bipartition({0}, {1})) == 1);
  CHECK_THROWS_AS(little_lemma_violation_count(two_mode_squeezed(0.3),
                                               Bipartition({0}, {1, 2})),
                  std::invalid_argument);

  std::uint64_t seed = 15000;
  for (int rep = 0; rep < 60; ++rep) {
    const CovarianceMatrix sigma = random_physical_cm(5, 2.5, seed++);
    const Bipartition part = Bipartition::parse("1,2|3,4,5", 5);
    CHECK(little_lemma_violation_count(sigma, part) <= 2);
  }

  CHECK_THROWS_AS(little_lemma_violation_count(oracles::planted_cm({0.5, 0.5}, 4),
                                               Bipartition({0}, {1})),
                  UnphysicalMatrixError);
}

TEST_CASE("sigma_tilde and min nu_tilde agree on (1+n) states") {
  std::uint64_t seed = 20000;
  for (int rep = 0; rep < 60; ++rep) {
    const CovarianceMatrix sigma = random_physical_cm(4, 2.5, seed++);
    const Bipartition part = Bipartition({0}, {1, 2, 3});
    const double st = sigma_tilde(sigma, part);
    const double min_nu = ppt_spectrum(sigma, part).min();
    if (std::abs(st) <= 1e-9 || std::abs(min_nu - 1.0) <= 1e-9) {
      continue;  // boundary band
    }
    CHECK((st < 0.0) == (min_nu < 1.0));
  }
}

TEST_CASE("reduced states are principal submatrices") {
  const CovarianceMatrix tms = two_mode_squeezed(0.6);
  const CovarianceMatrix mode0 = reduced_state(tms, {0});
  CHECK(mode0.modes() == 1);
  CHECK(mode0.matrix()(0, 0) ==
        doctest::Approx(std::cosh(1.2)).epsilon(1e-14));
  CHECK(mode0.matrix()(0, 1) == 0.0);
  CHECK_THROWS_AS(reduced_state(tms, {0, 2}), std::invalid_argument);
  CHECK_THROWS_AS(reduced_state(tms, {}), std::invalid_argument);
}
