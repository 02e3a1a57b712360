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

#include "qdsyn/simulate.hpp"

#include <cmath>

namespace qdsyn {

namespace {

/// In-place plane rotation over the amplitude pairs selected by `angle_of`.
template <typename AngleFn>
void rotate_pairs(const HybridDims& dims, CVec& amps, int target, int plane_i,
                  int plane_j, AngleFn angle_of) {
  const Index st = dims.stride(target);
  const Index span = (plane_j - plane_i) * st;
  for (Index x = 0; x < dims.total(); ++x) {
    if (dims.digit(x, target) != plane_i) {
      continue;
    }
    const double theta = angle_of(x);
    if (std::isnan(theta)) {
      continue;  // inactive pair
    }
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    const Complex lo = amps(x);
    const Complex hi = amps(x + span);
    amps(x) = c * lo - s * hi;
    amps(x + span) = s * lo + c * hi;
  }
}

}  // namespace

StateVector basis_state(const HybridDims& dims, Index k) {
  if (k < 0 || k >= dims.total()) {
    throw DimensionError("basis state index out of range");
  }
  CVec amps = CVec::Zero(dims.total());
  amps(k) = Complex(1.0, 0.0);
  return StateVector{dims, std::move(amps)};
}

double norm_error(const StateVector& s) {
  return std::abs(s.amplitudes.norm() - 1.0);
}

StateVector apply_gate(const StateVector& s, const Gate& g) {
  if (s.amplitudes.size() != s.dims.total()) {
    throw DimensionError("state length does not match its dimensions");
  }
  validate_gate(g, s.dims);
  StateVector out{s.dims, s.amplitudes};

  if (const auto* shift = std::get_if<ShiftGate>(&g)) {
    const int d = s.dims.dim(shift->target);
    const Index st = s.dims.stride(shift->target);
    const int k = ((shift->amount % d) + d) % d;
    for (Index x = 0; x < s.dims.total(); ++x) {
      const int a = s.dims.digit(x, shift->target);
      out.amplitudes(x + ((a + k) % d - a) * st) = s.amplitudes(x);
    }
    return out;
  }
  if (const auto* cg = std::get_if<ControlledGivens>(&g)) {
    rotate_pairs(s.dims, out.amplitudes, cg->target, cg->plane_i, cg->plane_j,
                 [&](Index x) {
                   for (const auto& [q, val] : cg->controls) {
                     if (s.dims.digit(x, q) != val) {
                       return std::nan("");
                     }
                   }
                   return cg->theta;
                 });
    return out;
  }
  if (const auto* ucg = std::get_if<UniformlyControlledGivens>(&g)) {
    rotate_pairs(s.dims, out.amplitudes, ucg->target, ucg->plane_i,
                 ucg->plane_j, [&](Index x) {
                   Index k = 0;
                   for (int q = 0; q < s.dims.count(); ++q) {
                     if (q != ucg->target) {
                       k = k * s.dims.dim(q) + s.dims.digit(x, q);
                     }
                   }
                   return ucg->angles[static_cast<std::size_t>(k)];
                 });
    return out;
  }
  // Dense fallback for the embedded-matrix gate kinds.
  out.amplitudes = gate_unitary(g, s.dims) * s.amplitudes;
  return out;
}

StateVector apply_circuit(const StateVector& s, const Circuit& c) {
  if (s.dims != c.dims) {
    throw DimensionError("state and circuit dimensions differ");
  }
  StateVector out = s;
  for (const Gate& g : c.gates) {
    out = apply_gate(out, g);
  }
  return out;
}

CMat reconstruct(const Circuit& c) {
  const Index m = c.dims.total();
  CMat out = CMat::Identity(m, m);
  for (const Gate& g : c.gates) {
    out = gate_unitary(g, c.dims) * out;
  }
  return out;
}

double equivalence(const CMat& a, const CMat& b) {
  return frobenius_distance(a, b);
}

}  // namespace qdsyn
