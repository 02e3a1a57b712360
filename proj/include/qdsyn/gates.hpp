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

#pragma once

#include <cstddef>
#include <utility>
#include <variant>
#include <vector>

#include "qdsyn/dims.hpp"
#include "qdsyn/linalg.hpp"

namespace qdsyn {

/// Arbitrary unitary on one qudit.
struct SingleQuditGate {
  int target = 0;
  CMat matrix;  // d_t x d_t
};

/// Cyclic increment |x> -> |x + amount mod d_t> on one qudit.
struct ShiftGate {
  int target = 0;
  int amount = 0;  // any integer, reduced mod d_t
};

/**
 * Muthukrishnan-Stroud style controlled gate: applies `matrix` to the
 * contiguous qudit range [first_target, last_target] exactly when the
 * control qudit carries its maximum value d_c - 1.
 */
struct ControlledUnitary {
  int first_target = 0;
  int last_target = 0;  // inclusive
  int control = 0;
  CMat matrix;  // square, size = product of target dims
};

/**
 * Givens rotation by `theta` in the (plane_i, plane_j) hyperplane of the
 * target qudit, applied when every (qudit, value) control matches.
 */
struct ControlledGivens {
  int target = 0;
  int plane_i = 0;
  int plane_j = 1;
  double theta = 0.0;
  std::vector<std::pair<int, int>> controls;  // (qudit, value), ascending by qudit
};

/**
 * Uniformly controlled Givens rotation: every other qudit acts as a
 * control; the joint control state selects the rotation angle. Angles are
 * indexed in mixed radix over the non-target qudits, lowest qudit index
 * most significant.
 */
struct UniformlyControlledGivens {
  int target = 0;
  int plane_i = 0;
  int plane_j = 1;
  std::vector<double> angles;  // prod_{l != target} d_l entries
};

/**
 * Quantum multiplexer: the joint basis state of the control qudits selects
 * which block unitary is applied to the remaining qudits. Blocks are
 * control-state-major (mixed radix over `controls`, lowest qudit index most
 * significant). A single control is the plain multiplexer; the synthesis
 * recursion produces multi-control multiplexers whose blocks act on one
 * qudit.
 */
struct Multiplexer {
  std::vector<int> controls;  // non-empty, strictly ascending
  std::vector<CMat> blocks;   // prod d_c blocks on the remaining qudits
};

using Gate = std::variant<SingleQuditGate, ShiftGate, ControlledUnitary,
                          ControlledGivens, UniformlyControlledGivens,
                          Multiplexer>;

/**
 * An ordered gate list over a hybrid register. Gates are stored in
 * application order: gates.front() acts on states first, so the matrix of
 * the circuit is the product of the gate matrices in reverse list order.
 */
struct Circuit {
  HybridDims dims;
  std::vector<Gate> gates;
};

/// Throws ValidationError unless the gate is well formed for `dims`.
void validate_gate(const Gate& g, const HybridDims& dims);

void validate_circuit(const Circuit& c);

/// Full-space unitary realized by one gate.
CMat gate_unitary(const Gate& g, const HybridDims& dims);

struct GateCounts {
  std::size_t single_qudit = 0;
  std::size_t shifts = 0;
  std::size_t controlled_unitaries = 0;
  std::size_t rotations = 0;  // controlled Givens
  std::size_t ucgs = 0;
  std::size_t multiplexers = 0;

  std::size_t total() const {
    return single_qudit + shifts + controlled_unitaries + rotations + ucgs +
           multiplexers;
  }
};

GateCounts count_gates(const Circuit& c);

/**
 * Worst-case one-qudit and controlled gate count of the level-(n-1)
 * circuit for a d-valued n-qudit gate:
 * (2^(d-1)-1) * (2(n-1)(d^(n-1)-d^(n-2)) + d^(n-1)) + d*2^d.
 */
long long predicted_level_count(int d, int n);

}  // namespace qdsyn
