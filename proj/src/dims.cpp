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

#include "qdsyn/dims.hpp"

#include <limits>
#include <string>

namespace qdsyn {

HybridDims::HybridDims(std::vector<int> dims) : dims_(std::move(dims)) {
  if (dims_.empty()) {
    throw DimensionError("hybrid register needs at least one qudit");
  }
  for (int d : dims_) {
    if (d < 2) {
      throw DimensionError("qudit dimension must be at least 2, got " +
                           std::to_string(d));
    }
  }
  strides_.assign(dims_.size(), 1);
  total_ = 1;
  for (int q = count() - 1; q >= 0; --q) {
    strides_[q] = total_;
    if (total_ > std::numeric_limits<Index>::max() / dims_[q]) {
      throw DimensionError("total dimension overflows");
    }
    total_ *= dims_[q];
  }
}

int HybridDims::dim(int qudit) const {
  if (qudit < 0 || qudit >= count()) {
    throw DimensionError("qudit index " + std::to_string(qudit) +
                         " out of range for " + std::to_string(count()) +
                         " qudits");
  }
  return dims_[qudit];
}

Index HybridDims::stride(int qudit) const {
  dim(qudit);  // range check
  return strides_[qudit];
}

int HybridDims::digit(Index state, int qudit) const {
  dim(qudit);
  return static_cast<int>((state / strides_[qudit]) % dims_[qudit]);
}

std::vector<int> HybridDims::digits(Index state) const {
  if (state < 0 || state >= total_) {
    throw DimensionError("basis state out of range");
  }
  std::vector<int> out(dims_.size());
  for (int q = 0; q < count(); ++q) {
    out[q] = static_cast<int>((state / strides_[q]) % dims_[q]);
  }
  return out;
}

Index HybridDims::state(const std::vector<int>& digits) const {
  if (static_cast<int>(digits.size()) != count()) {
    throw DimensionError("digit tuple length mismatch");
  }
  Index s = 0;
  for (int q = 0; q < count(); ++q) {
    if (digits[q] < 0 || digits[q] >= dims_[q]) {
      throw DimensionError("digit out of range");
    }
    s += strides_[q] * digits[q];
  }
  return s;
}

}  // namespace qdsyn
