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

#include "qdsyn/dims.hpp"
#include "qdsyn/gates.hpp"
#include "qdsyn/linalg.hpp"

namespace qdsyn {

/// Mixed-radix statevector, most significant qudit first.
struct StateVector {
  HybridDims dims;
  CVec amplitudes;
};

/// |k> as a state over `dims`.
StateVector basis_state(const HybridDims& dims, Index k);

/// | ||amplitudes|| - 1 |.
double norm_error(const StateVector& s);

/**
 * Applies one gate. Shifts permute amplitude indices and (uniformly)
 * controlled Givens rotations update two-amplitude subspaces in place;
 * other gate kinds multiply by the dense gate matrix.
 */
StateVector apply_gate(const StateVector& s, const Gate& g);

/// Left fold of apply_gate in circuit order.
StateVector apply_circuit(const StateVector& s, const Circuit& c);

/**
 * Matrix of the whole circuit: the product of gate matrices in reverse
 * list order (application order to matrix order).
 */
CMat reconstruct(const Circuit& c);

/// Frobenius distance ||A - B||_F; no global-phase allowance.
double equivalence(const CMat& a, const CMat& b);

}  // namespace qdsyn
