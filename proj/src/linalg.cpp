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

#include "qdsyn/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

namespace qdsyn {

namespace {

// Sines at or below this are treated as exact zeros when building V; the
// freed columns contribute at most the threshold itself to the residual.
constexpr double kFreeColumnThreshold = 1e-12;

// Singular values closer than this are treated as one degenerate cluster.
constexpr double kClusterGap = 1e-12;

// A V column whose norm drops below this after orthogonalization carries
// no reliable direction; it is released to the basis completion.
constexpr double kCollapseThreshold = 1e-6;

std::string short_real(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

}  // namespace

double unitarity_residual(const CMat& m) {
  if (m.rows() != m.cols()) {
    throw DimensionError("unitarity check requires a square matrix");
  }
  const CMat gram = m.adjoint() * m;
  return (gram - CMat::Identity(m.rows(), m.cols())).norm();
}

bool is_unitary(const CMat& m, double tol) {
  return unitarity_residual(m) <= tol;
}

void require_unitary(const CMat& m, double tol, const char* what) {
  const double res = unitarity_residual(m);
  if (!(res <= tol)) {
    throw PreconditionError(std::string(what) + " is not unitary (residual " +
                            short_real(res) + ", tolerance " +
                            short_real(tol) + ")");
  }
}

CMat random_unitary(Index m, std::uint64_t seed) {
  if (m < 1) {
    throw DimensionError("random_unitary needs m >= 1");
  }
  std::mt19937_64 gen(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  CMat a(m, m);
  for (Index i = 0; i < m; ++i) {
    for (Index j = 0; j < m; ++j) {
      const double re = gauss(gen);
      const double im = gauss(gen);
      a(i, j) = Complex(re, im);
    }
  }
  Eigen::HouseholderQR<CMat> qr(a);
  CMat q = qr.householderQ() * CMat::Identity(m, m);
  const CMat r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Index j = 0; j < m; ++j) {
    const Complex d = r(j, j);
    const double mag = std::abs(d);
    q.col(j) *= mag > 0.0 ? d / mag : Complex(1.0, 0.0);
  }
  return q;
}

CMat block_diag(const std::vector<CMat>& blocks) {
  if (blocks.empty()) {
    throw DimensionError("block_diag needs at least one block");
  }
  Index total = 0;
  for (const CMat& b : blocks) {
    if (b.rows() != b.cols()) {
      throw DimensionError("block_diag blocks must be square");
    }
    total += b.rows();
  }
  CMat out = CMat::Zero(total, total);
  Index offset = 0;
  for (const CMat& b : blocks) {
    out.block(offset, offset, b.rows(), b.rows()) = b;
    offset += b.rows();
  }
  return out;
}

double frobenius_distance(const CMat& a, const CMat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError("frobenius_distance requires equal shapes");
  }
  return (a - b).norm();
}

CMat CSDResult::cs_matrix() const {
  const Index mm = m();
  CMat mid = CMat::Identity(mm, mm);
  for (Index i = 0; i < r; ++i) {
    const double c = std::cos(thetas(i));
    const double s = std::sin(thetas(i));
    mid(i, i) = c;
    mid(i, r + i) = -s;
    mid(r + i, i) = s;
    mid(r + i, r + i) = c;
  }
  return mid;
}

CMat CSDResult::reconstruct() const {
  const Index mm = m();
  CMat left = CMat::Zero(mm, mm);
  left.topLeftCorner(r, r) = u;
  left.bottomRightCorner(mm - r, mm - r) = v;
  CMat right = CMat::Zero(mm, mm);
  right.topLeftCorner(r, r) = x;
  right.bottomRightCorner(mm - r, mm - r) = y;
  return left * cs_matrix() * right;
}

CSDResult csd(const CMat& w, Index r) {
  const Index m = w.rows();
  if (w.cols() != m) {
    throw DimensionError("csd input must be square");
  }
  if (r < 1 || 2 * r > m) {
    throw DimensionError("csd partition requires 1 <= r and 2r <= m, got r=" +
                         std::to_string(r) + ", m=" + std::to_string(m));
  }
  require_unitary(w, kUnitaryInputTol, "csd input");

  const Index q = m - r;

  // U and X from the SVD of W11. The cosines are its singular values; the
  // matching sines are read off the columns of T = W21 X†, whose norms are
  // exactly sin(theta_i) and carry full absolute accuracy even when the
  // singular values cluster at 1 (where sqrt(1 - c^2) cancels badly).
  Eigen::JacobiSVD<CMat> svd(w.topLeftCorner(r, r),
                             Eigen::ComputeFullU | Eigen::ComputeFullV);
  CMat u0 = svd.matrixU();
  CMat x0 = svd.matrixV().adjoint();
  CMat t0 = w.bottomLeftCorner(q, r) * x0.adjoint();
  RVec sigma(r);
  for (Index i = 0; i < r; ++i) {
    sigma(i) = std::clamp(svd.singularValues()(i), 0.0, 1.0);
  }

  // Within a cluster of equal singular values the singular vectors are an
  // arbitrary rotation of the true ones, which scrambles the T columns.
  // Re-decomposing the cluster's T block realigns X (and U) inside the
  // degenerate subspace; the cluster is so narrow that the cosines are
  // unaffected at working precision.
  for (Index lo = 0; lo < r;) {
    Index hi = lo + 1;
    while (hi < r && sigma(hi - 1) - sigma(hi) <= kClusterGap) {
      ++hi;
    }
    const Index len = hi - lo;
    if (len > 1) {
      Eigen::JacobiSVD<CMat> cluster(t0.middleCols(lo, len),
                                     Eigen::ComputeFullV);
      const CMat rot = cluster.matrixV();
      t0.middleCols(lo, len) = t0.middleCols(lo, len) * rot;
      u0.middleCols(lo, len) = u0.middleCols(lo, len) * rot;
      x0.middleRows(lo, len) = rot.adjoint() * x0.middleRows(lo, len);
    }
    lo = hi;
  }

  RVec theta0(r);
  for (Index i = 0; i < r; ++i) {
    const double s = std::clamp(t0.col(i).norm(), 0.0, 1.0);
    theta0(i) = std::atan2(s, sigma(i));
  }

  // Singular values tied at 1 do not order their angles, so sort the
  // (angle, U column, X row, T column) tuples ascending.
  std::vector<Index> order(static_cast<std::size_t>(r));
  for (Index i = 0; i < r; ++i) {
    order[static_cast<std::size_t>(i)] = i;
  }
  std::stable_sort(order.begin(), order.end(),
                   [&](Index a, Index b) { return theta0(a) < theta0(b); });

  CSDResult out;
  out.r = r;
  out.u.resize(r, r);
  out.x.resize(r, r);
  out.thetas.resize(r);
  CMat t(q, r);
  RVec cosines(r), sines(r), t_norms(r);
  for (Index k = 0; k < r; ++k) {
    const Index i = order[static_cast<std::size_t>(k)];
    out.u.col(k) = u0.col(i);
    out.x.row(k) = x0.row(i);
    t.col(k) = t0.col(i);
    out.thetas(k) = theta0(i);
    cosines(k) = std::cos(theta0(i));
    sines(k) = std::sin(theta0(i));
    t_norms(k) = t0.col(i).norm();
  }

  // V: column i satisfies W21 X† = V diag(sines), so columns with a
  // nonzero sine are fixed. They are orthonormalized largest sine first
  // (most accurate first) and the rest is completed from canonical basis
  // vectors, always taking the candidate with the largest residual.
  CMat v = CMat::Zero(q, q);
  std::vector<bool> placed(static_cast<std::size_t>(q), false);
  std::vector<Index> accepted;
  for (Index i = r - 1; i >= 0; --i) {  // sines ascend with i
    if (t_norms(i) <= kFreeColumnThreshold) {
      continue;
    }
    CVec col = t.col(i) / t_norms(i);
    for (Index j : accepted) {
      col -= v.col(j) * v.col(j).dot(col);
    }
    const double nrm = col.norm();
    if (nrm < kCollapseThreshold) {
      continue;  // direction swallowed by earlier columns; sine is negligible
    }
    v.col(i) = col / nrm;
    placed[static_cast<std::size_t>(i)] = true;
    accepted.push_back(i);
  }
  {
    // Residuals of every canonical basis vector against the accepted
    // columns, updated as fill columns are chosen.
    std::vector<CVec> residual(static_cast<std::size_t>(q));
    for (Index k = 0; k < q; ++k) {
      CVec e = CVec::Zero(q);
      e(k) = Complex(1.0, 0.0);
      for (Index j : accepted) {
        e -= v.col(j) * v.col(j).dot(e);
      }
      residual[static_cast<std::size_t>(k)] = e;
    }
    std::vector<bool> used(static_cast<std::size_t>(q), false);
    for (Index p = 0; p < q; ++p) {
      if (placed[static_cast<std::size_t>(p)]) {
        continue;
      }
      Index best = -1;
      double best_norm = -1.0;
      for (Index k = 0; k < q; ++k) {
        if (used[static_cast<std::size_t>(k)]) {
          continue;
        }
        const double nk = residual[static_cast<std::size_t>(k)].norm();
        if (nk > best_norm) {
          best_norm = nk;
          best = k;
        }
      }
      if (best < 0 || best_norm <= 0.0) {
        throw NumericalError("csd: failed to complete V", best_norm);
      }
      v.col(p) = residual[static_cast<std::size_t>(best)] / best_norm;
      used[static_cast<std::size_t>(best)] = true;
      for (Index k = 0; k < q; ++k) {
        if (!used[static_cast<std::size_t>(k)]) {
          residual[static_cast<std::size_t>(k)] -=
              v.col(p) * v.col(p).dot(residual[static_cast<std::size_t>(k)]);
        }
      }
    }
  }
  out.v = v;

  // Y from G = diag(U,V)† W: the top-right block of G is -S Y1, the
  // bottom-right is [C Y1; Y2]. Each of the first r rows is taken from
  // whichever block divides by the larger of cos/sin.
  const CMat g_top = out.u.adjoint() * w.topRightCorner(r, q);
  const CMat g_bottom = v.adjoint() * w.bottomRightCorner(q, q);
  CMat y(q, q);
  for (Index i = 0; i < r; ++i) {
    if (cosines(i) >= sines(i)) {
      y.row(i) = g_bottom.row(i) / cosines(i);
    } else {
      y.row(i) = -g_top.row(i) / sines(i);
    }
  }
  if (q > r) {
    y.bottomRows(q - r) = g_bottom.bottomRows(q - r);
  }
  out.y = y;

  const double residual = frobenius_distance(out.reconstruct(), w);
  if (!(residual <= kReconTolPerDim * static_cast<double>(m))) {
    throw NumericalError(
        "csd reconstruction residual " + short_real(residual) +
            " above tolerance " +
            short_real(kReconTolPerDim * static_cast<double>(m)),
        residual);
  }
  return out;
}

}  // namespace qdsyn
