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

#include <sstream>

#include "cvsep/cm_file.hpp"
#include "cvsep/report.hpp"
#include "cvsep/states.hpp"

using namespace cvsep;

TEST_CASE("save/load round trip is bit exact") {
  const CovarianceMatrix original = two_mode_squeezed(0.73);
  std::stringstream buffer;
  save_cm(buffer, original);
  const LoadedCm loaded = load_cm(buffer);
  CHECK(loaded.warnings.empty());
  CHECK(loaded.cm.label() == original.label());
  CHECK((loaded.cm.matrix() - original.matrix()).cwiseAbs().maxCoeff() == 0.0);
  CHECK(matrix_digest(loaded.cm) == matrix_digest(original));
}

TEST_CASE("vacuum_half convention is rescaled by two") {
  std::stringstream in(
      "modes 1\n"
      "convention vacuum_half\n"
      "matrix\n"
      "0.5 0\n"
      "0 0.5\n");
  const LoadedCm loaded = load_cm(in);
  CHECK(loaded.cm.matrix()(0, 0) == 1.0);
  CHECK(loaded.cm.matrix()(1, 1) == 1.0);
}

TEST_CASE("mild asymmetry is symmetrized with a warning") {
  std::stringstream in(
      "modes 1\n"
      "matrix\n"
      "1.0 1e-11\n"
      "0 1.0\n");
  const LoadedCm loaded = load_cm(in);
  CHECK(loaded.warnings.size() == 1);
  CHECK(loaded.cm.matrix()(0, 1) == loaded.cm.matrix()(1, 0));
}

TEST_CASE("gross asymmetry is rejected") {
  std::stringstream in(
      "modes 1\n"
      "matrix\n"
      "1.0 0.1\n"
      "0 1.0\n");
  CHECK_THROWS_AS(load_cm(in), ParseError);
}

TEST_CASE("malformed inputs are rejected with ParseError") {
  {
    std::stringstream in("matrix\n1 0\n0 1\n");
    CHECK_THROWS_AS(load_cm(in), ParseError);  // missing modes
  }
  {
    std::stringstream in("modes 2\nmatrix\n1 0\n0 1\n");
    CHECK_THROWS_AS(load_cm(in), ParseError);  // too few entries
  }
  {
    std::stringstream in("modes 1\nmatrix\n1 0\n0 1\n7\n");
    CHECK_THROWS_AS(load_cm(in), ParseError);  // trailing data
  }
  {
    std::stringstream in("modes 1\nmatrix\n1 zebra\n0 1\n");
    CHECK_THROWS_AS(load_cm(in), ParseError);  // bad number
  }
  {
    std::stringstream in("modes 1\nmatrix\n1 nan\nnan 1\n");
    CHECK_THROWS_AS(load_cm(in), ParseError);  // non-finite entry
  }
  {
    std::stringstream in("modes 1\nshear 4\nmatrix\n1 0\n0 1\n");
    CHECK_THROWS_AS(load_cm(in), ParseError);  // unknown key
  }
  {
    std::stringstream in("modes 0\nmatrix\n");
    CHECK_THROWS_AS(load_cm(in), ParseError);  // bad mode count
  }
  {
    std::stringstream in("modes 1\nconvention metric\nmatrix\n1 0\n0 1\n");
    CHECK_THROWS_AS(load_cm(in), ParseError);  // unknown convention
  }
}

TEST_CASE("comments and blank lines are allowed in the header") {
  std::stringstream in(
      "# produced by hand\n"
      "\n"
      "modes 1\n"
      "label test state\n"
      "matrix\n"
      "2 0\n0 2\n");
  const LoadedCm loaded = load_cm(in);
  CHECK(loaded.cm.label() == "test state");
  CHECK(loaded.cm.matrix()(0, 0) == 2.0);
}

TEST_CASE("digest changes with the matrix") {
  CHECK(matrix_digest(vacuum(2)) != matrix_digest(vacuum(3)));
  CHECK(matrix_digest(two_mode_squeezed(0.5)) !=
        matrix_digest(two_mode_squeezed(0.6)));
  CHECK(matrix_digest(vacuum(2)) == matrix_digest(vacuum(2)));
}
