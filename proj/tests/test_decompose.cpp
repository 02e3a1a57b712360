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

#include <doctest.h>

#include <cmath>
#include <variant>
#include <vector>

#include "qdsyn/decompose.hpp"
#include "qdsyn/simulate.hpp"

using namespace qdsyn;

namespace {

std::vector<LateralFactor::Kind> kinds_of(const FactorSequence& fs) {
  std::vector<LateralFactor::Kind> out;
  for (const LateralFactor& f : fs.factors) {
    out.push_back(f.kind);
  }
  return out;
}

}  // namespace

TEST_CASE("select_control prefers the smallest dimension, then lowest index") {
  CHECK(select_control(HybridDims({3, 2, 3})) == 1);
  CHECK(select_control(HybridDims({2, 2})) == 0);
  CHECK(select_control(HybridDims({5, 4, 3})) == 2);
  CHECK_THROWS_AS(select_control(HybridDims({4})), DimensionError);
}

TEST_CASE("reorder_to_control with the control already on top is the identity") {
  const BasisReorder reorder = reorder_to_control(HybridDims({2, 3}), 0);
  for (Index s = 0; s < 6; ++s) {
    CHECK(reorder.perm[static_cast<std::size_t>(s)] == s);
  }
  CHECK(reorder.reordered == HybridDims({2, 3}));
}

TEST_CASE("reorder_to_control moves the digit to the most significant slot") {
  const HybridDims dims({2, 3});
  const BasisReorder reorder = reorder_to_control(dims, 1);
  CHECK(reorder.reordered == HybridDims({3, 2}));
  // Oracle: (a, b) with index 3a + b must land at 2b + a.
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 3; ++b) {
      CHECK(reorder.perm[static_cast<std::size_t>(3 * a + b)] == 2 * b + a);
    }
  }
  CHECK(reorder.perm[5] == 5);
  CHECK(reorder.perm[3] == 1);
}

TEST_CASE("reorder_to_control yields a unitary digit rotation") {
  const HybridDims dims({2, 2, 2});
  const BasisReorder reorder = reorder_to_control(dims, 2);
  const CMat p = permutation_matrix(reorder.perm);
  CHECK(is_unitary(p, 1e-15));
  for (Index s = 0; s < 8; ++s) {
    const std::vector<int> d = dims.digits(s);
    const Index expected = reorder.reordered.state({d[2], d[0], d[1]});
    CHECK(reorder.perm[static_cast<std::size_t>(s)] == expected);
  }
}

TEST_CASE("lateral decomposition of a two-level control is a single CSD") {
  const HybridDims dims({2, 2});
  const CMat w = random_unitary(4, 5);
  const FactorSequence fs = lateral_decompose(w, dims, 0);
  REQUIRE(fs.factors.size() == 3);
  CHECK(fs.factors[0].kind == LateralFactor::Kind::BlockDiagonal);
  CHECK(fs.factors[1].kind == LateralFactor::Kind::CosineSine);
  CHECK(fs.factors[2].kind == LateralFactor::Kind::BlockDiagonal);
  CHECK(fs.factors[1].iteration == 0);
  CHECK(fs.factors[1].angles.size() == 2);
  CHECK(fs.factors[0].blocks.size() == 2);
  CHECK((fs.product() - w).norm() <= 1e-9 * 4);
}

TEST_CASE("ternary lateral decomposition has the seven-factor shape") {
  const HybridDims dims({3, 3});
  const CMat w = random_unitary(9, 5);
  const FactorSequence fs = lateral_decompose(w, dims, 0);
  REQUIRE(fs.factors.size() == 7);
  using K = LateralFactor::Kind;
  const std::vector<K> expected = {K::BlockDiagonal, K::CosineSine,
                                   K::BlockDiagonal, K::CosineSine,
                                   K::BlockDiagonal, K::CosineSine,
                                   K::BlockDiagonal};
  CHECK(kinds_of(fs) == expected);
  CHECK(fs.factors[1].iteration == 1);
  CHECK(fs.factors[3].iteration == 0);
  CHECK(fs.factors[5].iteration == 1);
  for (const LateralFactor& f : fs.factors) {
    if (f.kind == K::BlockDiagonal) {
      CHECK(f.blocks.size() == 3);
      for (const CMat& b : f.blocks) {
        CHECK(b.rows() == 3);
        CHECK(is_unitary(b, 1e-9));
      }
    } else {
      CHECK(f.angles.size() == 3);
    }
  }
  CHECK((fs.product() - w).norm() <= 1e-9 * 9);
}

TEST_CASE("four-level control produces fifteen factors") {
  const HybridDims dims({4, 2});
  const CMat w = random_unitary(8, 5);
  const FactorSequence fs = lateral_decompose(w, dims, 0);
  REQUIRE(fs.factors.size() == 15);
  int n_bd = 0, n_cs = 0;
  for (const LateralFactor& f : fs.factors) {
    f.kind == LateralFactor::Kind::BlockDiagonal ? ++n_bd : ++n_cs;
  }
  CHECK(n_bd == 8);
  CHECK(n_cs == 7);
  CHECK((fs.product() - w).norm() <= 1e-9 * 8);
}

TEST_CASE("cosine-sine factors act only between adjacent control levels") {
  const HybridDims dims({4, 2});
  const CMat w = random_unitary(8, 17);
  const FactorSequence fs = lateral_decompose(w, dims, 0);
  const Index r0 = 2;
  for (const LateralFactor& f : fs.factors) {
    if (f.kind != LateralFactor::Kind::CosineSine) {
      continue;
    }
    const CMat realized = f.realize(8);
    const Index lo = f.iteration * r0;
    const Index hi = lo + 2 * r0;
    for (Index i = 0; i < 8; ++i) {
      for (Index j = 0; j < 8; ++j) {
        if (i >= lo && i < hi && j >= lo && j < hi) {
          continue;
        }
        const Complex expected =
            i == j ? Complex(1.0, 0.0) : Complex(0.0, 0.0);
        CHECK(realized(i, j) == expected);
      }
    }
  }
}

TEST_CASE("lateral decomposition rejects misplaced controls and bad input") {
  const HybridDims dims({2, 3});
  CHECK_THROWS_AS(lateral_decompose(CMat::Identity(6, 6), dims, 1),
                  DimensionError);
  CHECK_THROWS_AS(lateral_decompose(CMat::Zero(6, 6), dims, 0),
                  PreconditionError);
  CHECK_THROWS_AS(lateral_decompose(CMat::Identity(4, 4), dims, 0),
                  DimensionError);
}

TEST_CASE("synthesis of a single qudit is one gate") {
  const CMat w = random_unitary(3, 8);
  const Circuit c = synthesize(w, HybridDims({3}));
  REQUIRE(c.gates.size() == 1);
  const auto* gate = std::get_if<SingleQuditGate>(&c.gates[0]);
  REQUIRE(gate != nullptr);
  CHECK((gate->matrix - w).norm() == 0.0);
}

TEST_CASE("synthesis of a controlled-not-style permutation") {
  CMat w = CMat::Zero(4, 4);
  w(0, 0) = 1.0;
  w(1, 1) = 1.0;
  w(2, 3) = 1.0;
  w(3, 2) = 1.0;
  const Circuit c = synthesize(w, HybridDims({2, 2}));
  CHECK(equivalence(reconstruct(c), w) <= 1e-10);
  for (const Gate& g : c.gates) {
    if (const auto* ucg = std::get_if<UniformlyControlledGivens>(&g)) {
      for (double a : ucg->angles) {
        const bool zero_or_right =
            std::abs(a) <= 1e-9 || std::abs(a - M_PI / 2) <= 1e-9;
        CHECK(zero_or_right);
      }
    }
  }
}

TEST_CASE("synthesis round-trips a hybrid register") {
  const HybridDims dims({2, 3});
  const CMat w = random_unitary(6, 9);
  const Circuit c = synthesize(w, dims);
  CHECK(equivalence(reconstruct(c), w) <= 1e-9 * 6);
}

TEST_CASE("three-qudit synthesis leaves only fully multiplexed gates") {
  const HybridDims dims({2, 2, 2});
  const CMat w = random_unitary(8, 31);
  const Circuit c = synthesize(w, dims);
  CHECK(equivalence(reconstruct(c), w) <= 1e-9 * 8);
  for (const Gate& g : c.gates) {
    if (const auto* mux = std::get_if<Multiplexer>(&g)) {
      CHECK(mux->controls.size() == 2);  // every qudit but the target
      for (const CMat& b : mux->blocks) {
        CHECK(b.rows() == 2);  // single-qudit blocks
      }
    } else {
      CHECK(std::holds_alternative<UniformlyControlledGivens>(g));
    }
  }
}

TEST_CASE("synthesis respects a control override at the top level") {
  const HybridDims dims({3, 2});
  const CMat w = random_unitary(6, 12);
  const Circuit c = synthesize(w, dims, 0);
  CHECK(equivalence(reconstruct(c), w) <= 1e-9 * 6);
  // With control 0 (dimension 3) the top level contributes three rotations
  // per angle set instead of the default two.
  bool found_q0_ucg = false;
  for (const Gate& g : c.gates) {
    if (const auto* ucg = std::get_if<UniformlyControlledGivens>(&g)) {
      found_q0_ucg |= ucg->target == 0;
    }
  }
  CHECK(found_q0_ucg);
}

TEST_CASE("synthesis rejects size mismatches") {
  CHECK_THROWS_AS(synthesize(CMat::Identity(5, 5), HybridDims({2, 3})),
                  DimensionError);
}

TEST_CASE("single-level decomposition keeps the multiplexers intact") {
  const HybridDims dims({3, 3});
  const CMat w = random_unitary(9, 4);
  const Circuit c = decompose_level(w, dims);
  const GateCounts counts = count_gates(c);
  CHECK(counts.multiplexers == 4);
  CHECK(counts.ucgs == 3);
  CHECK(counts.total() == 7);
  CHECK(equivalence(reconstruct(c), w) <= 1e-9 * 9);
}

TEST_CASE("pruning drops rotations whose angles vanish") {
  const HybridDims dims({2, 2});
  const Circuit c = synthesize(CMat::Identity(4, 4), dims);
  const Circuit pruned = prune_zero_angles(c);
  CHECK(count_gates(pruned).ucgs == 0);
  CHECK(count_gates(c).ucgs == 1);
  CHECK(equivalence(reconstruct(pruned), CMat::Identity(4, 4)) <= 1e-10);
}
