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

#include <optional>
#include <vector>

#include "qdsyn/dims.hpp"
#include "qdsyn/gates.hpp"
#include "qdsyn/linalg.hpp"

namespace qdsyn {

/**
 * One factor of a lateral decomposition. A BlockDiagonal factor carries
 * d_c blocks of size r0 = m / d_c. A CosineSine factor at iteration j
 * realizes diag(I_{j*r0}, [[C, -S], [S, C]], I_{m-(j+2)*r0}).
 */
struct LateralFactor {
  enum class Kind { BlockDiagonal, CosineSine };

  Kind kind = Kind::BlockDiagonal;
  std::vector<CMat> blocks;  // BlockDiagonal only
  int iteration = 0;         // CosineSine only
  RVec angles;               // CosineSine only, r0 entries

  /// Dense m x m matrix of this factor (r0 inferred from contents).
  CMat realize(Index m) const;
};

/**
 * Ordered factors whose left-to-right matrix product equals the decomposed
 * input. There are 2^(d_c) - 1 factors: 2^(d_c - 1) block-diagonal factors
 * interleaved with 2^(d_c - 1) - 1 cosine-sine factors.
 */
struct FactorSequence {
  std::vector<LateralFactor> factors;
  HybridDims dims;
  int control = 0;

  /// Left-to-right product of the realized factors.
  CMat product() const;
};

/// Index of a minimum-dimension qudit (ties broken by lowest index).
/// Throws DimensionError when there are fewer than two qudits.
int select_control(const HybridDims& dims);

struct BasisReorder {
  /// perm[old_state] = new_state once the control digit is most significant.
  std::vector<Index> perm;
  HybridDims reordered;
};

/**
 * Permutation moving the control qudit's digit to the most significant
 * position; the other qudits keep their relative order. Conjugating by the
 * permutation matrix (P W P†) moves W into the decomposition basis.
 */
BasisReorder reorder_to_control(const HybridDims& dims, int control);

/// Matrix P with P(perm[x], x) = 1, i.e. P e_x = e_perm[x].
CMat permutation_matrix(const std::vector<Index>& perm);

/**
 * Iterative lateral decomposition of W with respect to the highest-order
 * (first) qudit. `control` must be 0; reorder first if it is not. The
 * returned factor product reproduces W within 1e-9 * m, checked.
 */
FactorSequence lateral_decompose(const CMat& w, const HybridDims& dims,
                                 int control);

/**
 * Full recursive synthesis of W down to single-qudit leaves. The result
 * contains multiplexers whose blocks are single-qudit unitaries, uniformly
 * controlled Givens rotations, and (for a one-qudit register) a single
 * one-qudit gate. At each recursion level a minimum-dimension control is
 * chosen among the remaining qudits; `control_override` forces the
 * top-level choice.
 */
Circuit synthesize(const CMat& w, const HybridDims& dims,
                   std::optional<int> control_override = std::nullopt);

/**
 * Single-level decomposition: lateral factors converted directly to gates,
 * so multiplexer blocks stay as unitaries on all non-control qudits. This
 * is the circuit whose lowered gate count the level-count formula predicts.
 */
Circuit decompose_level(const CMat& w, const HybridDims& dims,
                        std::optional<int> control_override = std::nullopt);

/// Copy of `c` without rotation gates whose angles are all below `tol`.
Circuit prune_zero_angles(const Circuit& c, double tol = 1e-12);

}  // namespace qdsyn
