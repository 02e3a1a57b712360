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

#include <vector>

#include "qdsyn/gates.hpp"

namespace qdsyn {

/**
 * Rewrites a multiplexer as d_c repetitions of
 * [Shift(control, +(d_c - 1)), ControlledUnitary(block t)] for
 * t = 0, ..., d_c - 1: exactly 2 d_c gates, and the summed shifts restore
 * the control value. Multi-control multiplexers are first demoted to an
 * edge control (qudit 0 or n-1) whose payload blocks absorb the remaining
 * control structure, keeping the controlled-unitary targets contiguous.
 */
std::vector<Gate> lower_multiplexer(const Multiplexer& g,
                                    const HybridDims& dims);

/**
 * Rewrites a uniformly controlled Givens rotation as one controlled Givens
 * per control basis state (mixed-radix order), each normalized to
 * maximum-value controls.
 */
std::vector<Gate> lower_ucg(const UniformlyControlledGivens& g,
                            const HybridDims& dims);

/**
 * Wraps every control at value k != d_l - 1 with Shift(+(d_l - 1 - k))
 * before and Shift(-(d_l - 1 - k)) after, so the emitted core gate is
 * controlled by maximum values only and every control wire is restored.
 * A gate already at maximum values is returned unchanged.
 */
std::vector<Gate> normalize_controls(const ControlledGivens& g,
                                     const HybridDims& dims);

/**
 * Whole-circuit pass: multiplexers and uniformly controlled rotations are
 * expanded, controlled Givens gates are normalized, and the remaining gate
 * kinds pass through. The output contains only single-qudit gates, shifts,
 * controlled unitaries, and maximum-value controlled Givens rotations;
 * applying the pass twice equals applying it once.
 */
Circuit lower_circuit(const Circuit& c);

/**
 * Optional peephole: combines adjacent shifts on the same wire and drops
 * the combination when its amount vanishes mod the wire dimension. Not
 * part of lower_circuit, whose gate counts stay exact.
 */
Circuit merge_adjacent_shifts(const Circuit& c);

}  // namespace qdsyn
