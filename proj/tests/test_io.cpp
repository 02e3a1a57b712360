// Copyright 2026 The qdsyn developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <cmath>
#include <cstring>
#include <sstream>
#include <vector>

#include "qdsyn/decompose.hpp"
#include "qdsyn/io.hpp"

using namespace qdsyn;

namespace {

bool bitwise_equal(const CMat& a, const CMat& b) {
  return a.rows() == b.rows() && a.cols() == b.cols() &&
         std::memcmp(a.data(), b.data(),
                     sizeof(Complex) * static_cast<std::size_t>(a.size())) == 0;
}

}  // namespace

TEST_CASE("doubles survive the 17-digit round trip") {
  const std::vector<double> values = {0.0,   1.0 / 3.0,  M_PI,   -2.5e-17,
                                      1e300, -7.1e-300, 0.1, 123456789.123456789};
  for (double v : values) {
    CHECK(std::strtod(format_double(v).c_str(), nullptr) == v);
  }
}

TEST_CASE("matrix files round-trip bit for bit") {
  const HybridDims dims({2, 3});
  const CMat w = random_unitary(6, 19);
  std::ostringstream out;
  print_matrix(out, dims, w);
  std::istringstream in(out.str());
  const MatrixFile parsed = parse_matrix(in);
  CHECK(parsed.dims == dims);
  CHECK(bitwise_equal(parsed.matrix, w));
}

TEST_CASE("matrix parsing skips comments and blank lines") {
  std::istringstream in(
      "# a 2x2 identity\n"
      "\n"
      "dims 2\n"
      "# rows follow\n"
      "1,0 0,0\n"
      "\n"
      "0,0 1,0\n");
  const MatrixFile parsed = parse_matrix(in);
  CHECK(parsed.dims == HybridDims({2}));
  CHECK((parsed.matrix - CMat::Identity(2, 2)).norm() == 0.0);
}

TEST_CASE("matrix parsing reports malformed input") {
  {
    std::istringstream in("2 3\n");
    CHECK_THROWS_AS(parse_matrix(in), ParseError);
  }
  {
    std::istringstream in("dims 2\n1,0 0,0\n");
    CHECK_THROWS_AS(parse_matrix(in), ParseError);  // missing row
  }
  {
    std::istringstream in("dims 2\n1,0 0,0\n0,0 o,0\n");
    CHECK_THROWS_AS(parse_matrix(in), ParseError);  // bad number
  }
  {
    std::istringstream in("dims 2\n1,0 0,0 0,0\n0,0 1,0 0,0\n");
    CHECK_THROWS_AS(parse_matrix(in), ParseError);  // row length
  }
  {
    std::istringstream in("dims 2\n1,0 nan,0\n0,0 1,0\n");
    CHECK_THROWS_AS(parse_matrix(in), ParseError);  // non-finite entry
  }
  {
    std::istringstream in("dims 1\n1,0\n");
    CHECK_THROWS_AS(parse_matrix(in), ParseError);  // dimension below 2
  }
}

TEST_CASE("circuit files round-trip bit for bit across all gate kinds") {
  const HybridDims dims({2, 3, 2});
  Circuit c{dims, {}};
  c.gates.push_back(SingleQuditGate{1, random_unitary(3, 1)});
  c.gates.push_back(ShiftGate{2, -1});
  c.gates.push_back(ControlledUnitary{1, 2, 0, random_unitary(6, 2)});
  c.gates.push_back(ControlledGivens{1, 0, 2, 1.0 / 3.0, {{0, 1}, {2, 0}}});
  c.gates.push_back(ControlledGivens{0, 0, 1, 0.25, {}});
  c.gates.push_back(
      UniformlyControlledGivens{0, 0, 1, {M_PI / 4, 0.2, 0.3, 0.4, 0.5, 0.6}});
  c.gates.push_back(Multiplexer{
      {0}, {random_unitary(6, 3), random_unitary(6, 4)}});
  c.gates.push_back(Multiplexer{
      {0, 2},
      {random_unitary(3, 5), random_unitary(3, 6), random_unitary(3, 7),
       random_unitary(3, 8)}});

  std::ostringstream out;
  print_circuit(out, c);
  std::istringstream in(out.str());
  const Circuit parsed = parse_circuit(in);
  REQUIRE(parsed.gates.size() == c.gates.size());
  CHECK(parsed.dims == dims);

  std::ostringstream again;
  print_circuit(again, parsed);
  CHECK(again.str() == out.str());
}

TEST_CASE("circuit parsing validates the gates") {
  std::istringstream in(
      "CIRCUIT dims=2,2\n"
      "UCG q=0 plane=0,1 thetas=0.5\n");  // wrong angle count
  CHECK_THROWS_AS(parse_circuit(in), ParseError);
  std::istringstream unknown(
      "CIRCUIT dims=2,2\n"
      "ROT q=0\n");
  CHECK_THROWS_AS(parse_circuit(unknown), ParseError);
}

TEST_CASE("state files round-trip bit for bit") {
  const HybridDims dims({3, 2});
  const CMat u = random_unitary(6, 33);
  const StateVector s{dims, u.col(2)};
  std::ostringstream out;
  print_state(out, s);
  std::istringstream in(out.str());
  const StateVector parsed = parse_state(in);
  CHECK(parsed.dims == dims);
  CHECK(std::memcmp(parsed.amplitudes.data(), s.amplitudes.data(),
                    sizeof(Complex) * 6) == 0);
}

TEST_CASE("empty circuits print and parse") {
  const Circuit c{HybridDims({2, 3}), {}};
  std::ostringstream out;
  print_circuit(out, c);
  std::istringstream in(out.str());
  const Circuit parsed = parse_circuit(in);
  CHECK(parsed.gates.empty());
  CHECK(parsed.dims == c.dims);
}
