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

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <vector>

#include "qdsyn/dims.hpp"
#include "qdsyn/errors.hpp"

namespace qdsyn {

using Complex = std::complex<double>;
using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;
using RVec = Eigen::VectorXd;

/// Tolerance at which input matrices are accepted as unitary.
inline constexpr double kUnitaryInputTol = 1e-8;

/// Per-dimension factor of the reconstruction acceptance threshold.
inline constexpr double kReconTolPerDim = 1e-9;

/// ||M†M - I||_F. Throws DimensionError for non-square input.
double unitarity_residual(const CMat& m);

bool is_unitary(const CMat& m, double tol);

/// Throws PreconditionError (with context) if `m` fails is_unitary at `tol`.
void require_unitary(const CMat& m, double tol, const char* what);

/**
 * Seeded m x m unitary: QR orthonormalization of a complex Gaussian matrix
 * with the diagonal phases of R folded back into Q. Deterministic per seed.
 */
CMat random_unitary(Index m, std::uint64_t seed);

/// Block-diagonal matrix assembled from the given square blocks.
CMat block_diag(const std::vector<CMat>& blocks);

/// ||A - B||_F. Throws DimensionError on shape mismatch.
double frobenius_distance(const CMat& a, const CMat& b);

/**
 * One cosine-sine decomposition W = diag(U,V) * M(thetas) * diag(X,Y),
 * where M(thetas) = [[C, -S, 0], [S, C, 0], [0, 0, I]] with
 * C = diag(cos theta_i), S = diag(sin theta_i).
 */
struct CSDResult {
  Index r = 0;
  CMat u, v, x, y;  // u, x are r x r; v, y are (m-r) x (m-r)
  RVec thetas;      // ascending, each in [0, pi/2]

  Index m() const { return r + v.rows(); }
  /// The middle cosine-sine factor of size m x m.
  CMat cs_matrix() const;
  /// Product of the three factors (should reproduce the input).
  CMat reconstruct() const;
};

/**
 * Cosine-sine decomposition of a unitary W with partition size r, 2r <= m.
 *
 * U and X come from the SVD of the top-left r x r block; V is built from
 * the columns of W21 X† (orthonormalized in decreasing-sine order and
 * completed deterministically); Y is read off diag(U,V)† W row by row,
 * each row through whichever of the cosine or sine block is better
 * conditioned. Deterministic: identical inputs give identical results.
 *
 * Throws DimensionError (bad partition), PreconditionError (non-unitary
 * input) or NumericalError (reconstruction residual above 1e-9 * m).
 */
CSDResult csd(const CMat& w, Index r);

}  // namespace qdsyn
