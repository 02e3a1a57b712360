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

#include <cstdint>
#include <vector>

#include "qdsyn/errors.hpp"

namespace qdsyn {

using Index = std::int64_t;

/**
 * Ordered qudit dimensions (d_1, ..., d_n) of a hybrid register.
 *
 * Basis states are indexed in mixed radix with the first qudit most
 * significant: state (a_1, ..., a_n) has index
 * a_1 * d_2*...*d_n + a_2 * d_3*...*d_n + ... + a_n.
 */
class HybridDims {
 public:
  explicit HybridDims(std::vector<int> dims);

  int count() const { return static_cast<int>(dims_.size()); }
  int dim(int qudit) const;
  Index total() const { return total_; }
  const std::vector<int>& dims() const { return dims_; }

  /// Distance between basis states that differ by one in qudit's digit.
  Index stride(int qudit) const;

  /// Digit of `qudit` within basis state `state`.
  int digit(Index state, int qudit) const;

  std::vector<int> digits(Index state) const;
  Index state(const std::vector<int>& digits) const;

  bool operator==(const HybridDims& other) const { return dims_ == other.dims_; }
  bool operator!=(const HybridDims& other) const { return !(*this == other); }

 private:
  std::vector<int> dims_;
  std::vector<Index> strides_;
  Index total_ = 0;
};

}  // namespace qdsyn
