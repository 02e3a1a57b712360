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

#include "qdsyn/lower.hpp"

#include <algorithm>
#include <string>

namespace qdsyn {

namespace {

/// Mixed-radix digits of `state` over the qudits in `subset` (ascending,
/// lowest index most significant), written into a full-length digit array.
void subset_digits(const HybridDims& dims, const std::vector<int>& subset,
                   Index state, std::vector<int>& digits) {
  for (auto it = subset.rbegin(); it != subset.rend(); ++it) {
    const int d = dims.dim(*it);
    digits[static_cast<std::size_t>(*it)] = static_cast<int>(state % d);
    state /= d;
  }
}

Index subset_index(const HybridDims& dims, const std::vector<int>& subset,
                   const std::vector<int>& digits) {
  Index k = 0;
  for (int q : subset) {
    k = k * dims.dim(q) + digits[static_cast<std::size_t>(q)];
  }
  return k;
}

}  // namespace

std::vector<Gate> lower_multiplexer(const Multiplexer& g,
                                    const HybridDims& dims) {
  validate_gate(Gate{g}, dims);
  const int n = dims.count();

  // The demotion control must sit at an edge of the register so the
  // controlled-unitary target range stays contiguous.
  int cstar;
  if (g.controls.front() == 0) {
    cstar = 0;
  } else if (g.controls.back() == n - 1) {
    cstar = n - 1;
  } else {
    throw ValidationError(
        "cannot lower multiplexer: no control at either end of the register");
  }
  const int d_star = dims.dim(cstar);

  std::vector<int> other_controls;
  for (int c : g.controls) {
    if (c != cstar) {
      other_controls.push_back(c);
    }
  }
  std::vector<int> rest;  // block qudits of the original multiplexer
  {
    std::size_t e = 0;
    for (int q = 0; q < n; ++q) {
      if (e < g.controls.size() && g.controls[e] == q) {
        ++e;
        continue;
      }
      rest.push_back(q);
    }
  }
  // Payload space: everything except the demotion control.
  std::vector<int> payload;
  for (int q = 0; q < n; ++q) {
    if (q != cstar) {
      payload.push_back(q);
    }
  }
  Index payload_size = 1;
  for (int q : payload) {
    payload_size *= dims.dim(q);
  }
  const Index block_size = g.blocks.front().rows();

  std::vector<Gate> out;
  out.reserve(static_cast<std::size_t>(2 * d_star));
  std::vector<int> digits(static_cast<std::size_t>(n), 0);
  for (int t = 0; t < d_star; ++t) {
    CMat b = CMat::Zero(payload_size, payload_size);
    for (Index col = 0; col < payload_size; ++col) {
      std::fill(digits.begin(), digits.end(), 0);
      subset_digits(dims, payload, col, digits);
      digits[static_cast<std::size_t>(cstar)] = t;
      const Index block = subset_index(dims, g.controls, digits);
      const Index cb = subset_index(dims, rest, digits);
      for (Index rb = 0; rb < block_size; ++rb) {
        // Replace the rest-digits of the payload column index by rb.
        std::vector<int> row_digits = digits;
        subset_digits(dims, rest, rb, row_digits);
        const Index row = subset_index(dims, payload, row_digits);
        b(row, col) = g.blocks[static_cast<std::size_t>(block)](rb, cb);
      }
    }
    out.emplace_back(ShiftGate{cstar, d_star - 1});
    ControlledUnitary cu;
    cu.control = cstar;
    cu.first_target = cstar == 0 ? 1 : 0;
    cu.last_target = cstar == 0 ? n - 1 : n - 2;
    cu.matrix = std::move(b);
    out.emplace_back(std::move(cu));
  }
  return out;
}

std::vector<Gate> lower_ucg(const UniformlyControlledGivens& g,
                            const HybridDims& dims) {
  validate_gate(Gate{g}, dims);
  std::vector<int> controls;
  for (int q = 0; q < dims.count(); ++q) {
    if (q != g.target) {
      controls.push_back(q);
    }
  }
  std::vector<Gate> out;
  std::vector<int> digits(static_cast<std::size_t>(dims.count()), 0);
  for (std::size_t k = 0; k < g.angles.size(); ++k) {
    subset_digits(dims, controls, static_cast<Index>(k), digits);
    ControlledGivens cg;
    cg.target = g.target;
    cg.plane_i = g.plane_i;
    cg.plane_j = g.plane_j;
    cg.theta = g.angles[k];
    for (int q : controls) {
      cg.controls.emplace_back(q, digits[static_cast<std::size_t>(q)]);
    }
    const std::vector<Gate> normalized = normalize_controls(cg, dims);
    out.insert(out.end(), normalized.begin(), normalized.end());
  }
  return out;
}

std::vector<Gate> normalize_controls(const ControlledGivens& g,
                                     const HybridDims& dims) {
  validate_gate(Gate{g}, dims);
  std::vector<Gate> pre;
  std::vector<Gate> post;
  ControlledGivens core = g;
  for (auto& [q, val] : core.controls) {
    const int max_value = dims.dim(q) - 1;
    if (val == max_value) {
      continue;
    }
    const int amount = max_value - val;
    pre.emplace_back(ShiftGate{q, amount});
    post.emplace_back(ShiftGate{q, -amount});
    val = max_value;
  }
  if (pre.empty()) {
    return {Gate{g}};
  }
  std::reverse(post.begin(), post.end());
  std::vector<Gate> out = std::move(pre);
  out.emplace_back(std::move(core));
  out.insert(out.end(), post.begin(), post.end());
  return out;
}

Circuit merge_adjacent_shifts(const Circuit& c) {
  validate_circuit(c);
  Circuit out{c.dims, {}};
  for (const Gate& g : c.gates) {
    const auto* shift = std::get_if<ShiftGate>(&g);
    if (shift == nullptr) {
      out.gates.push_back(g);
      continue;
    }
    const int d = c.dims.dim(shift->target);
    int amount = ((shift->amount % d) + d) % d;
    while (!out.gates.empty()) {
      const auto* prev = std::get_if<ShiftGate>(&out.gates.back());
      if (prev == nullptr || prev->target != shift->target) {
        break;
      }
      amount = (amount + prev->amount % d + d) % d;
      out.gates.pop_back();
    }
    if (amount != 0) {
      out.gates.push_back(ShiftGate{shift->target, amount});
    }
  }
  return out;
}

Circuit lower_circuit(const Circuit& c) {
  validate_circuit(c);
  Circuit out{c.dims, {}};
  for (const Gate& g : c.gates) {
    if (const auto* mux = std::get_if<Multiplexer>(&g)) {
      const std::vector<Gate> lowered = lower_multiplexer(*mux, c.dims);
      out.gates.insert(out.gates.end(), lowered.begin(), lowered.end());
    } else if (const auto* ucg = std::get_if<UniformlyControlledGivens>(&g)) {
      const std::vector<Gate> lowered = lower_ucg(*ucg, c.dims);
      out.gates.insert(out.gates.end(), lowered.begin(), lowered.end());
    } else if (const auto* cg = std::get_if<ControlledGivens>(&g)) {
      const std::vector<Gate> normalized = normalize_controls(*cg, c.dims);
      out.gates.insert(out.gates.end(), normalized.begin(), normalized.end());
    } else {
      out.gates.push_back(g);
    }
  }
  return out;
}

}  // namespace qdsyn
