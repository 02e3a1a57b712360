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
#include <vector>

#include "qdsyn/decompose.hpp"
#include "qdsyn/gates.hpp"
#include "qdsyn/linalg.hpp"

using namespace qdsyn;

TEST_CASE("shift on a single qubit is the inverter") {
  const HybridDims dims({2});
  const CMat u = gate_unitary(ShiftGate{0, 1}, dims);
  CHECK(u(0, 0) == Complex(0.0, 0.0));
  CHECK(u(0, 1) == Complex(1.0, 0.0));
  CHECK(u(1, 0) == Complex(1.0, 0.0));
  CHECK(u(1, 1) == Complex(0.0, 0.0));
}

TEST_CASE("shift group law holds modulo the qudit dimension") {
  const HybridDims dims({3, 2});
  for (int k1 = -2; k1 <= 4; ++k1) {
    for (int k2 = -1; k2 <= 3; ++k2) {
      const CMat lhs = gate_unitary(ShiftGate{0, k1}, dims) *
                       gate_unitary(ShiftGate{0, k2}, dims);
      const CMat rhs = gate_unitary(ShiftGate{0, k1 + k2}, dims);
      CHECK((lhs - rhs).norm() == 0.0);
    }
  }
}

TEST_CASE("uniformly controlled rotation selects the angle per control state") {
  const HybridDims dims({2, 2, 2});
  const std::vector<double> thetas = {0.1, 0.2, 0.3, 0.4};
  const CMat u =
      gate_unitary(UniformlyControlledGivens{0, 0, 1, thetas}, dims);

  // Expected matrix by direct enumeration: control state k = 2*a1 + a2
  // selects theta_k for the rotation on a0.
  CMat expected = CMat::Zero(8, 8);
  for (Index col = 0; col < 8; ++col) {
    const int a0 = static_cast<int>(col / 4);
    const Index k = col % 4;
    const double c = std::cos(thetas[static_cast<std::size_t>(k)]);
    const double s = std::sin(thetas[static_cast<std::size_t>(k)]);
    expected(col, col) = c;
    if (a0 == 0) {
      expected(col + 4, col) = s;
    } else {
      expected(col - 4, col) = -s;
    }
  }
  CHECK((u - expected).norm() == 0.0);

  // Spot checks: control state (0,0) uses theta_0, (1,1) uses theta_3.
  CHECK(u(0, 0) == Complex(std::cos(0.1), 0.0));
  CHECK(u(4, 0) == Complex(std::sin(0.1), 0.0));
  CHECK(u(3, 3) == Complex(std::cos(0.4), 0.0));
  CHECK(u(7, 3) == Complex(std::sin(0.4), 0.0));
}

TEST_CASE("multiplexer with identity blocks is the identity") {
  const HybridDims dims({2, 3});
  const Multiplexer mux{{0}, {CMat::Identity(3, 3), CMat::Identity(3, 3)}};
  CHECK((gate_unitary(mux, dims) - CMat::Identity(6, 6)).norm() == 0.0);
}

TEST_CASE("top-control multiplexer equals the block diagonal") {
  const HybridDims dims({2, 3});
  const std::vector<CMat> blocks = {random_unitary(3, 1), random_unitary(3, 2)};
  const CMat u = gate_unitary(Multiplexer{{0}, blocks}, dims);
  CHECK((u - block_diag(blocks)).norm() == 0.0);
}

TEST_CASE("non-top multiplexer is the reorder conjugate of the block diagonal") {
  const HybridDims dims({2, 3});
  const std::vector<CMat> blocks = {random_unitary(2, 3), random_unitary(2, 4),
                                    random_unitary(2, 5)};
  const CMat u = gate_unitary(Multiplexer{{1}, blocks}, dims);
  const BasisReorder reorder = reorder_to_control(dims, 1);
  const CMat p = permutation_matrix(reorder.perm);
  CHECK((u - p.adjoint() * block_diag(blocks) * p).norm() <= 1e-14);
}

TEST_CASE("multi-control multiplexer applies the block of the joint state") {
  const HybridDims dims({2, 3, 2});
  std::vector<CMat> blocks;
  for (int k = 0; k < 4; ++k) {
    blocks.push_back(random_unitary(3, 10 + static_cast<std::uint64_t>(k)));
  }
  const CMat u = gate_unitary(Multiplexer{{0, 2}, blocks}, dims);
  CHECK(is_unitary(u, 1e-12));
  for (Index col = 0; col < dims.total(); ++col) {
    const int a0 = dims.digit(col, 0);
    const int a1 = dims.digit(col, 1);
    const int a2 = dims.digit(col, 2);
    const Index k = 2 * a0 + a2;  // controls (q0, q2), q0 most significant
    for (int b = 0; b < 3; ++b) {
      const Index row = dims.state({a0, b, a2});
      CHECK(u(row, col) == blocks[static_cast<std::size_t>(k)](b, a1));
    }
  }
}

TEST_CASE("controlled unitary triggers only on the maximum control value") {
  const HybridDims dims({3, 2});
  const CMat x = random_unitary(2, 6);
  const CMat u = gate_unitary(ControlledUnitary{1, 1, 0, x}, dims);
  for (Index col = 0; col < 6; ++col) {
    const int ctrl = dims.digit(col, 0);
    if (ctrl != 2) {
      CHECK(u(col, col) == Complex(1.0, 0.0));
    } else {
      const int a1 = dims.digit(col, 1);
      CHECK(u(col, col) == x(a1, a1));
    }
  }
  CHECK(is_unitary(u, 1e-12));
}

TEST_CASE("every gate kind realizes a unitary") {
  const HybridDims dims({2, 3, 2});
  const std::vector<Gate> gates = {
      SingleQuditGate{1, random_unitary(3, 20)},
      ShiftGate{1, 2},
      ControlledUnitary{1, 2, 0, random_unitary(6, 21)},
      ControlledGivens{1, 0, 2, 0.7, {{0, 1}, {2, 0}}},
      UniformlyControlledGivens{2, 0, 1, {0.1, 0.2, 0.3, 0.4, 0.5, 0.6}},
      Multiplexer{{1}, {random_unitary(4, 22), random_unitary(4, 23),
                        random_unitary(4, 24)}},
  };
  for (const Gate& g : gates) {
    CHECK(is_unitary(gate_unitary(g, dims), 1e-10));
  }
}

TEST_CASE("count_gates tallies per kind") {
  const HybridDims dims({2, 2});
  Circuit c{dims, {}};
  GateCounts counts = count_gates(c);
  CHECK(counts.total() == 0);

  c.gates = {
      ShiftGate{0, 1},
      ControlledUnitary{1, 1, 0, CMat::Identity(2, 2)},
      ShiftGate{0, 1},
      ControlledUnitary{1, 1, 0, CMat::Identity(2, 2)},
  };
  counts = count_gates(c);
  CHECK(counts.shifts == 2);
  CHECK(counts.controlled_unitaries == 2);
  CHECK(counts.total() == 4);
}

TEST_CASE("predicted_level_count matches the closed form") {
  // Independent evaluation of
  // (2^(d-1)-1)[2(n-1)(d^(n-1)-d^(n-2)) + d^(n-1)] + d 2^d.
  const auto oracle = [](int d, int n) {
    const double value =
        (std::pow(2.0, d - 1) - 1.0) *
            (2.0 * (n - 1) * (std::pow(double(d), n - 1) -
                              std::pow(double(d), n - 2)) +
             std::pow(double(d), n - 1)) +
        d * std::pow(2.0, d);
    return static_cast<long long>(std::llround(value));
  };
  CHECK(predicted_level_count(2, 2) == 12);
  CHECK(predicted_level_count(3, 2) == 45);
  CHECK(predicted_level_count(2, 3) == 20);
  for (int d = 2; d <= 5; ++d) {
    for (int n = 2; n <= 4; ++n) {
      CHECK(predicted_level_count(d, n) == oracle(d, n));
    }
  }
  CHECK_THROWS_AS(predicted_level_count(1, 2), DimensionError);
  CHECK_THROWS_AS(predicted_level_count(2, 1), DimensionError);
}

TEST_CASE("gate validation rejects malformed gates") {
  const HybridDims dims({2, 3});
  CHECK_THROWS_AS(validate_gate(SingleQuditGate{2, CMat::Identity(2, 2)}, dims),
                  ValidationError);
  CHECK_THROWS_AS(validate_gate(SingleQuditGate{0, CMat::Zero(2, 2)}, dims),
                  ValidationError);
  CHECK_THROWS_AS(validate_gate(SingleQuditGate{0, CMat::Identity(3, 3)}, dims),
                  ValidationError);
  CHECK_THROWS_AS(
      validate_gate(ControlledGivens{1, 0, 3, 0.1, {{0, 0}}}, dims),
      ValidationError);
  CHECK_THROWS_AS(
      validate_gate(ControlledGivens{1, 0, 1, 0.1, {{1, 0}}}, dims),
      ValidationError);
  CHECK_THROWS_AS(
      validate_gate(ControlledGivens{1, 0, 1, 0.1, {{0, 2}}}, dims),
      ValidationError);
  CHECK_THROWS_AS(
      validate_gate(UniformlyControlledGivens{0, 0, 1, {0.1, 0.2}}, dims),
      ValidationError);
  CHECK_THROWS_AS(
      validate_gate(Multiplexer{{0}, {CMat::Identity(3, 3)}}, dims),
      ValidationError);
  CHECK_THROWS_AS(validate_gate(Multiplexer{{0, 1}, {}}, dims),
                  ValidationError);
  CHECK_THROWS_AS(
      validate_gate(ControlledUnitary{1, 1, 1, CMat::Identity(3, 3)}, dims),
      ValidationError);
}
