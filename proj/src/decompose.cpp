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

#include "qdsyn/decompose.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <utility>

namespace qdsyn {

namespace {

HybridDims sub_dims(const HybridDims& dims, const std::vector<int>& qudits) {
  std::vector<int> d;
  d.reserve(qudits.size());
  for (int q : qudits) {
    d.push_back(dims.dim(q));
  }
  return HybridDims(d);
}

/// expand(prefix, block): CSD of `block` at partition r0 until every block
/// has size r0, appending factors in matrix order. The C-side restarts
/// with an identity prefix of the same length, per the lateral update
/// equations.
void expand_lateral(std::vector<CMat> prefix, const CMat& block, Index r0,
                    std::vector<LateralFactor>& out) {
  if (block.rows() == r0) {
    LateralFactor f;
    f.kind = LateralFactor::Kind::BlockDiagonal;
    f.blocks = std::move(prefix);
    f.blocks.push_back(block);
    out.push_back(std::move(f));
    return;
  }
  const CSDResult res = csd(block, r0);
  const int j = static_cast<int>(prefix.size());

  std::vector<CMat> left_prefix = prefix;
  left_prefix.push_back(res.u);
  expand_lateral(std::move(left_prefix), res.v, r0, out);

  LateralFactor cs;
  cs.kind = LateralFactor::Kind::CosineSine;
  cs.iteration = j;
  cs.angles = res.thetas;
  out.push_back(std::move(cs));

  std::vector<CMat> right_prefix(static_cast<std::size_t>(j),
                                 CMat::Identity(r0, r0));
  right_prefix.push_back(res.x);
  expand_lateral(std::move(right_prefix), res.y, r0, out);
}

/// Gates of one lateral decomposition, in matrix order. The block-diagonal
/// factors become single-control multiplexers on `control`; the cosine-sine
/// factor of iteration j becomes a uniformly controlled Givens rotation in
/// the (j, j+1) plane of `control`. Valid in the original basis because the
/// reorder preserves the relative order of the other qudits.
std::vector<Gate> level_gates_matrix_order(const FactorSequence& fs,
                                           int control) {
  std::vector<Gate> gates;
  gates.reserve(fs.factors.size());
  for (const LateralFactor& f : fs.factors) {
    if (f.kind == LateralFactor::Kind::BlockDiagonal) {
      Multiplexer mux;
      mux.controls = {control};
      mux.blocks = f.blocks;
      gates.emplace_back(std::move(mux));
    } else {
      UniformlyControlledGivens ucg;
      ucg.target = control;
      ucg.plane_i = f.iteration;
      ucg.plane_j = f.iteration + 1;
      ucg.angles.assign(f.angles.data(), f.angles.data() + f.angles.size());
      gates.emplace_back(std::move(ucg));
    }
  }
  return gates;
}

/**
 * Recursive synthesis worker. `selects` (ascending original qudit indices)
 * and `blocks` (mixed-radix over selects, lowest index most significant)
 * describe a multiplexed operator on the `remaining` qudits. Gates are
 * appended in matrix order.
 */
void emit_block_set(const HybridDims& dims, const std::vector<int>& selects,
                    std::vector<CMat> blocks, const std::vector<int>& remaining,
                    std::optional<int> control_override,
                    std::vector<Gate>& out) {
  if (remaining.size() == 1) {
    if (selects.empty()) {
      out.emplace_back(SingleQuditGate{remaining.front(), blocks.front()});
    } else {
      out.emplace_back(Multiplexer{selects, std::move(blocks)});
    }
    return;
  }

  const HybridDims local = sub_dims(dims, remaining);
  int local_control;
  if (control_override) {
    local_control = *control_override;
    if (local_control < 0 || local_control >= local.count()) {
      throw DimensionError("control override out of range");
    }
  } else {
    local_control = select_control(local);
  }
  const int control = remaining[local_control];

  const BasisReorder reorder = reorder_to_control(local, local_control);
  const CMat p = permutation_matrix(reorder.perm);

  std::vector<FactorSequence> sequences;
  sequences.reserve(blocks.size());
  for (const CMat& b : blocks) {
    sequences.push_back(
        lateral_decompose(p * b * p.adjoint(), reorder.reordered, 0));
  }
  blocks.clear();

  std::vector<int> rest = remaining;
  rest.erase(std::find(rest.begin(), rest.end(), control));
  std::vector<int> new_selects = selects;
  new_selects.insert(
      std::upper_bound(new_selects.begin(), new_selects.end(), control),
      control);

  // Index arithmetic for reassembling sibling data in the fixed
  // lowest-qudit-most-significant order of the merged gate.
  const auto mixed_index = [&](const std::vector<int>& qudits,
                               const std::vector<int>& digits_by_qudit) {
    Index k = 0;
    for (int q : qudits) {
      k = k * dims.dim(q) + digits_by_qudit[static_cast<std::size_t>(q)];
    }
    return k;
  };
  const auto enumerate_states = [&](const std::vector<int>& qudits) {
    Index total = 1;
    for (int q : qudits) {
      total *= dims.dim(q);
    }
    return total;
  };
  const auto digits_for = [&](const std::vector<int>& qudits, Index state) {
    std::vector<int> digits(static_cast<std::size_t>(dims.count()), 0);
    for (auto it = qudits.rbegin(); it != qudits.rend(); ++it) {
      const int d = dims.dim(*it);
      digits[static_cast<std::size_t>(*it)] = static_cast<int>(state % d);
      state /= d;
    }
    return digits;
  };

  const std::size_t n_factors = sequences.front().factors.size();
  for (std::size_t k = 0; k < n_factors; ++k) {
    const LateralFactor& shape = sequences.front().factors[k];
    if (shape.kind == LateralFactor::Kind::CosineSine) {
      std::vector<int> angle_qudits = new_selects;  // all non-target qudits
      angle_qudits.erase(
          std::find(angle_qudits.begin(), angle_qudits.end(), control));
      for (int q : rest) {
        angle_qudits.insert(
            std::upper_bound(angle_qudits.begin(), angle_qudits.end(), q), q);
      }
      UniformlyControlledGivens ucg;
      ucg.target = control;
      ucg.plane_i = shape.iteration;
      ucg.plane_j = shape.iteration + 1;
      const Index n_angles = enumerate_states(angle_qudits);
      ucg.angles.resize(static_cast<std::size_t>(n_angles));
      for (Index a = 0; a < n_angles; ++a) {
        const std::vector<int> digits = digits_for(angle_qudits, a);
        const Index sibling = mixed_index(selects, digits);
        const Index within = mixed_index(rest, digits);
        ucg.angles[static_cast<std::size_t>(a)] =
            sequences[static_cast<std::size_t>(sibling)].factors[k].angles(
                within);
      }
      out.emplace_back(std::move(ucg));
    } else {
      const Index n_blocks = enumerate_states(new_selects);
      std::vector<CMat> merged(static_cast<std::size_t>(n_blocks));
      for (Index b = 0; b < n_blocks; ++b) {
        const std::vector<int> digits = digits_for(new_selects, b);
        const Index sibling = mixed_index(selects, digits);
        const int value = digits[static_cast<std::size_t>(control)];
        merged[static_cast<std::size_t>(b)] =
            sequences[static_cast<std::size_t>(sibling)]
                .factors[k]
                .blocks[static_cast<std::size_t>(value)];
      }
      emit_block_set(dims, new_selects, std::move(merged), rest, std::nullopt,
                     out);
    }
  }
}

void check_input(const CMat& w, const HybridDims& dims) {
  if (w.rows() != dims.total() || w.cols() != dims.total()) {
    throw DimensionError("matrix size does not match the register dimensions");
  }
  require_unitary(w, kUnitaryInputTol, "synthesis input");
}

}  // namespace

CMat LateralFactor::realize(Index m) const {
  if (kind == Kind::BlockDiagonal) {
    return block_diag(blocks);
  }
  const Index r0 = angles.size();
  CMat out = CMat::Identity(m, m);
  const Index offset = iteration * r0;
  for (Index i = 0; i < r0; ++i) {
    const double c = std::cos(angles(i));
    const double s = std::sin(angles(i));
    out(offset + i, offset + i) = c;
    out(offset + i, offset + r0 + i) = -s;
    out(offset + r0 + i, offset + i) = s;
    out(offset + r0 + i, offset + r0 + i) = c;
  }
  return out;
}

CMat FactorSequence::product() const {
  const Index m = dims.total();
  CMat out = CMat::Identity(m, m);
  for (const LateralFactor& f : factors) {
    out = out * f.realize(m);
  }
  return out;
}

int select_control(const HybridDims& dims) {
  if (dims.count() < 2) {
    throw DimensionError("control selection needs at least two qudits");
  }
  int best = 0;
  for (int q = 1; q < dims.count(); ++q) {
    if (dims.dim(q) < dims.dim(best)) {
      best = q;
    }
  }
  return best;
}

BasisReorder reorder_to_control(const HybridDims& dims, int control) {
  dims.dim(control);  // range check
  std::vector<int> order;
  order.push_back(control);
  for (int q = 0; q < dims.count(); ++q) {
    if (q != control) {
      order.push_back(q);
    }
  }
  std::vector<int> new_dims;
  new_dims.reserve(order.size());
  for (int q : order) {
    new_dims.push_back(dims.dim(q));
  }
  HybridDims reordered(new_dims);

  std::vector<Index> perm(static_cast<std::size_t>(dims.total()));
  std::vector<int> new_digits(order.size());
  for (Index s = 0; s < dims.total(); ++s) {
    const std::vector<int> digits = dims.digits(s);
    for (std::size_t pos = 0; pos < order.size(); ++pos) {
      new_digits[pos] = digits[static_cast<std::size_t>(order[pos])];
    }
    perm[static_cast<std::size_t>(s)] = reordered.state(new_digits);
  }
  return BasisReorder{std::move(perm), std::move(reordered)};
}

CMat permutation_matrix(const std::vector<Index>& perm) {
  const Index m = static_cast<Index>(perm.size());
  CMat p = CMat::Zero(m, m);
  for (Index x = 0; x < m; ++x) {
    p(perm[static_cast<std::size_t>(x)], x) = Complex(1.0, 0.0);
  }
  return p;
}

FactorSequence lateral_decompose(const CMat& w, const HybridDims& dims,
                                 int control) {
  if (control != 0) {
    throw DimensionError(
        "lateral decomposition expects the control qudit in the highest-order "
        "position; apply reorder_to_control first");
  }
  check_input(w, dims);
  const Index m = dims.total();
  const int d_c = dims.dim(0);
  const Index r0 = m / d_c;

  FactorSequence fs{{}, dims, control};
  expand_lateral({}, w, r0, fs.factors);

  const double residual = frobenius_distance(fs.product(), w);
  if (!(residual <= kReconTolPerDim * static_cast<double>(m))) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", residual);
    throw NumericalError(
        "lateral decomposition residual " + std::string(buf) +
            " above tolerance",
        residual);
  }
  return fs;
}

Circuit synthesize(const CMat& w, const HybridDims& dims,
                   std::optional<int> control_override) {
  check_input(w, dims);
  if (dims.count() == 1) {
    Circuit c{dims, {SingleQuditGate{0, w}}};
    validate_circuit(c);
    return c;
  }
  std::vector<int> all(static_cast<std::size_t>(dims.count()));
  for (int q = 0; q < dims.count(); ++q) {
    all[static_cast<std::size_t>(q)] = q;
  }
  std::vector<Gate> matrix_order;
  emit_block_set(dims, {}, {w}, all, control_override, matrix_order);
  std::reverse(matrix_order.begin(), matrix_order.end());
  Circuit c{dims, std::move(matrix_order)};
  validate_circuit(c);
  return c;
}

Circuit decompose_level(const CMat& w, const HybridDims& dims,
                        std::optional<int> control_override) {
  check_input(w, dims);
  if (dims.count() == 1) {
    Circuit c{dims, {SingleQuditGate{0, w}}};
    validate_circuit(c);
    return c;
  }
  const int control =
      control_override ? *control_override : select_control(dims);
  const BasisReorder reorder = reorder_to_control(dims, control);
  const CMat p = permutation_matrix(reorder.perm);
  const FactorSequence fs =
      lateral_decompose(p * w * p.adjoint(), reorder.reordered, 0);
  std::vector<Gate> gates = level_gates_matrix_order(fs, control);
  std::reverse(gates.begin(), gates.end());
  Circuit c{dims, std::move(gates)};
  validate_circuit(c);
  return c;
}

Circuit prune_zero_angles(const Circuit& c, double tol) {
  Circuit out{c.dims, {}};
  for (const Gate& g : c.gates) {
    if (const auto* ucg = std::get_if<UniformlyControlledGivens>(&g)) {
      const bool all_zero =
          std::all_of(ucg->angles.begin(), ucg->angles.end(),
                      [tol](double a) { return std::abs(a) < tol; });
      if (all_zero) {
        continue;
      }
    } else if (const auto* cg = std::get_if<ControlledGivens>(&g)) {
      if (std::abs(cg->theta) < tol) {
        continue;
      }
    }
    out.gates.push_back(g);
  }
  return out;
}

}  // namespace qdsyn
