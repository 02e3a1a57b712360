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

#include "qdsyn/gates.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace qdsyn {

namespace {

int checked_qudit(int q, const HybridDims& dims, const char* what) {
  if (q < 0 || q >= dims.count()) {
    throw ValidationError(std::string(what) + " index " + std::to_string(q) +
                          " out of range");
  }
  return q;
}

void check_unitary_block(const CMat& m, Index size, const char* what) {
  if (m.rows() != size || m.cols() != size) {
    throw ValidationError(std::string(what) + " has wrong shape");
  }
  if (!is_unitary(m, kUnitaryInputTol)) {
    throw ValidationError(std::string(what) + " is not unitary");
  }
}

void check_plane(int i, int j, int d, const char* what) {
  if (i < 0 || j <= i || j >= d) {
    throw ValidationError(std::string(what) + " plane (" + std::to_string(i) +
                          "," + std::to_string(j) +
                          ") invalid for dimension " + std::to_string(d));
  }
}

/// Product of dims over all qudits except those in `excluded` (sorted).
Index remaining_dim(const HybridDims& dims, const std::vector<int>& excluded) {
  Index p = 1;
  std::size_t e = 0;
  for (int q = 0; q < dims.count(); ++q) {
    if (e < excluded.size() && excluded[e] == q) {
      ++e;
      continue;
    }
    p *= dims.dim(q);
  }
  return p;
}

/// Mixed-radix index of `state`'s digits over the qudits in `subset`
/// (ascending, lowest index most significant).
Index subset_state(const HybridDims& dims, Index state,
                   const std::vector<int>& subset) {
  Index k = 0;
  for (int q : subset) {
    k = k * dims.dim(q) + dims.digit(state, q);
  }
  return k;
}

std::vector<int> complement(const HybridDims& dims,
                            const std::vector<int>& subset) {
  std::vector<int> out;
  std::size_t e = 0;
  for (int q = 0; q < dims.count(); ++q) {
    if (e < subset.size() && subset[e] == q) {
      ++e;
      continue;
    }
    out.push_back(q);
  }
  return out;
}

/// Rebuilds a full-space index from `state` with the digits of `subset`
/// replaced by the digits of the mixed-radix value `sub`.
Index replace_subset(const HybridDims& dims, Index state,
                     const std::vector<int>& subset, Index sub) {
  Index out = state;
  for (auto it = subset.rbegin(); it != subset.rend(); ++it) {
    const int q = *it;
    const int d = dims.dim(q);
    const int digit = static_cast<int>(sub % d);
    sub /= d;
    out += (digit - dims.digit(state, q)) * dims.stride(q);
  }
  return out;
}

struct Validator {
  const HybridDims& dims;

  void operator()(const SingleQuditGate& g) const {
    const int q = checked_qudit(g.target, dims, "single-qudit gate target");
    check_unitary_block(g.matrix, dims.dim(q), "single-qudit gate matrix");
  }

  void operator()(const ShiftGate& g) const {
    checked_qudit(g.target, dims, "shift target");
  }

  void operator()(const ControlledUnitary& g) const {
    checked_qudit(g.first_target, dims, "controlled-unitary target");
    checked_qudit(g.last_target, dims, "controlled-unitary target");
    checked_qudit(g.control, dims, "controlled-unitary control");
    if (g.first_target > g.last_target) {
      throw ValidationError("controlled-unitary target range is empty");
    }
    if (g.control >= g.first_target && g.control <= g.last_target) {
      throw ValidationError("controlled-unitary control inside target range");
    }
    Index size = 1;
    for (int q = g.first_target; q <= g.last_target; ++q) {
      size *= dims.dim(q);
    }
    check_unitary_block(g.matrix, size, "controlled-unitary matrix");
  }

  void operator()(const ControlledGivens& g) const {
    const int t = checked_qudit(g.target, dims, "controlled-Givens target");
    check_plane(g.plane_i, g.plane_j, dims.dim(t), "controlled-Givens");
    if (!std::isfinite(g.theta)) {
      throw ValidationError("controlled-Givens angle is not finite");
    }
    int prev = -1;
    for (const auto& [q, val] : g.controls) {
      checked_qudit(q, dims, "controlled-Givens control");
      if (q == t) {
        throw ValidationError("controlled-Givens control equals target");
      }
      if (q <= prev) {
        throw ValidationError(
            "controlled-Givens controls must be strictly ascending");
      }
      if (val < 0 || val >= dims.dim(q)) {
        throw ValidationError("controlled-Givens control value out of range");
      }
      prev = q;
    }
  }

  void operator()(const UniformlyControlledGivens& g) const {
    const int t = checked_qudit(g.target, dims, "uniform-Givens target");
    check_plane(g.plane_i, g.plane_j, dims.dim(t), "uniform-Givens");
    const Index expected = remaining_dim(dims, {t});
    if (static_cast<Index>(g.angles.size()) != expected) {
      throw ValidationError("uniform-Givens expects " +
                            std::to_string(expected) + " angles, got " +
                            std::to_string(g.angles.size()));
    }
    for (double a : g.angles) {
      if (!std::isfinite(a)) {
        throw ValidationError("uniform-Givens angle is not finite");
      }
    }
  }

  void operator()(const Multiplexer& g) const {
    if (g.controls.empty()) {
      throw ValidationError("multiplexer needs at least one control");
    }
    int prev = -1;
    Index n_blocks = 1;
    for (int c : g.controls) {
      checked_qudit(c, dims, "multiplexer control");
      if (c <= prev) {
        throw ValidationError(
            "multiplexer controls must be strictly ascending");
      }
      prev = c;
      n_blocks *= dims.dim(c);
    }
    if (static_cast<int>(g.controls.size()) >= dims.count()) {
      throw ValidationError("multiplexer controls cover every qudit");
    }
    if (static_cast<Index>(g.blocks.size()) != n_blocks) {
      throw ValidationError("multiplexer expects " + std::to_string(n_blocks) +
                            " blocks, got " + std::to_string(g.blocks.size()));
    }
    const Index size = remaining_dim(dims, g.controls);
    for (const CMat& b : g.blocks) {
      check_unitary_block(b, size, "multiplexer block");
    }
  }
};

struct UnitaryBuilder {
  const HybridDims& dims;

  CMat operator()(const SingleQuditGate& g) const {
    const Index m = dims.total();
    const Index st = dims.stride(g.target);
    const int d = dims.dim(g.target);
    CMat out = CMat::Zero(m, m);
    for (Index col = 0; col < m; ++col) {
      const int a = dims.digit(col, g.target);
      for (int b = 0; b < d; ++b) {
        out(col + (b - a) * st, col) = g.matrix(b, a);
      }
    }
    return out;
  }

  CMat operator()(const ShiftGate& g) const {
    const Index m = dims.total();
    const Index st = dims.stride(g.target);
    const int d = dims.dim(g.target);
    const int k = ((g.amount % d) + d) % d;
    CMat out = CMat::Zero(m, m);
    for (Index col = 0; col < m; ++col) {
      const int a = dims.digit(col, g.target);
      const int b = (a + k) % d;
      out(col + (b - a) * st, col) = Complex(1.0, 0.0);
    }
    return out;
  }

  CMat operator()(const ControlledUnitary& g) const {
    const Index m = dims.total();
    const int trigger = dims.dim(g.control) - 1;
    std::vector<int> targets;
    for (int q = g.first_target; q <= g.last_target; ++q) {
      targets.push_back(q);
    }
    CMat out = CMat::Zero(m, m);
    const Index block = g.matrix.rows();
    for (Index col = 0; col < m; ++col) {
      if (dims.digit(col, g.control) != trigger) {
        out(col, col) = Complex(1.0, 0.0);
        continue;
      }
      const Index cb = subset_state(dims, col, targets);
      for (Index rb = 0; rb < block; ++rb) {
        out(replace_subset(dims, col, targets, rb), col) = g.matrix(rb, cb);
      }
    }
    return out;
  }

  CMat operator()(const ControlledGivens& g) const {
    const Index m = dims.total();
    const Index st = dims.stride(g.target);
    const double c = std::cos(g.theta);
    const double s = std::sin(g.theta);
    CMat out = CMat::Zero(m, m);
    for (Index col = 0; col < m; ++col) {
      bool active = true;
      for (const auto& [q, val] : g.controls) {
        if (dims.digit(col, q) != val) {
          active = false;
          break;
        }
      }
      const int a = dims.digit(col, g.target);
      if (!active || (a != g.plane_i && a != g.plane_j)) {
        out(col, col) = Complex(1.0, 0.0);
        continue;
      }
      const Index span = (g.plane_j - g.plane_i) * st;
      if (a == g.plane_i) {
        out(col, col) = c;
        out(col + span, col) = s;
      } else {
        out(col, col) = c;
        out(col - span, col) = -s;
      }
    }
    return out;
  }

  CMat operator()(const UniformlyControlledGivens& g) const {
    const Index m = dims.total();
    const Index st = dims.stride(g.target);
    const std::vector<int> others = complement(dims, {g.target});
    CMat out = CMat::Zero(m, m);
    for (Index col = 0; col < m; ++col) {
      const Index k = subset_state(dims, col, others);
      const double c = std::cos(g.angles[static_cast<std::size_t>(k)]);
      const double s = std::sin(g.angles[static_cast<std::size_t>(k)]);
      const int a = dims.digit(col, g.target);
      if (a != g.plane_i && a != g.plane_j) {
        out(col, col) = Complex(1.0, 0.0);
        continue;
      }
      const Index span = (g.plane_j - g.plane_i) * st;
      if (a == g.plane_i) {
        out(col, col) = c;
        out(col + span, col) = s;
      } else {
        out(col, col) = c;
        out(col - span, col) = -s;
      }
    }
    return out;
  }

  CMat operator()(const Multiplexer& g) const {
    const Index m = dims.total();
    const std::vector<int> rest = complement(dims, g.controls);
    CMat out = CMat::Zero(m, m);
    const Index block = g.blocks.front().rows();
    for (Index col = 0; col < m; ++col) {
      const Index k = subset_state(dims, col, g.controls);
      const CMat& b = g.blocks[static_cast<std::size_t>(k)];
      const Index cb = subset_state(dims, col, rest);
      for (Index rb = 0; rb < block; ++rb) {
        out(replace_subset(dims, col, rest, rb), col) = b(rb, cb);
      }
    }
    return out;
  }
};

}  // namespace

void validate_gate(const Gate& g, const HybridDims& dims) {
  std::visit(Validator{dims}, g);
}

void validate_circuit(const Circuit& c) {
  for (const Gate& g : c.gates) {
    validate_gate(g, c.dims);
  }
}

CMat gate_unitary(const Gate& g, const HybridDims& dims) {
  validate_gate(g, dims);
  return std::visit(UnitaryBuilder{dims}, g);
}

GateCounts count_gates(const Circuit& c) {
  GateCounts counts;
  for (const Gate& g : c.gates) {
    if (std::holds_alternative<SingleQuditGate>(g)) {
      ++counts.single_qudit;
    } else if (std::holds_alternative<ShiftGate>(g)) {
      ++counts.shifts;
    } else if (std::holds_alternative<ControlledUnitary>(g)) {
      ++counts.controlled_unitaries;
    } else if (std::holds_alternative<ControlledGivens>(g)) {
      ++counts.rotations;
    } else if (std::holds_alternative<UniformlyControlledGivens>(g)) {
      ++counts.ucgs;
    } else {
      ++counts.multiplexers;
    }
  }
  return counts;
}

long long predicted_level_count(int d, int n) {
  if (d < 2 || n < 2) {
    throw DimensionError("predicted_level_count needs d >= 2 and n >= 2");
  }
  auto ipow = [](long long base, int exp) {
    long long out = 1;
    for (int i = 0; i < exp; ++i) {
      out *= base;
    }
    return out;
  };
  const long long rotations_per_ucg = ipow(d, n - 1);
  const long long shifts_per_ucg =
      2LL * (n - 1) * (ipow(d, n - 1) - ipow(d, n - 2));
  const long long n_ucgs = ipow(2, d - 1) - 1;
  const long long mux_gates = static_cast<long long>(d) * ipow(2, d);
  return n_ucgs * (shifts_per_ucg + rotations_per_ucg) + mux_gates;
}

}  // namespace qdsyn
