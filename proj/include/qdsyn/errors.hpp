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

#include <stdexcept>
#include <string>

namespace qdsyn {

/** Base class for all qdsyn errors. */
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/** Shape, partition, or index mismatch (usage error). */
class DimensionError : public Error {
 public:
  using Error::Error;
};

/** A contract precondition failed (non-unitary input, unnormalized state). */
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/** A gate or circuit does not validate against its dimensions. */
class ValidationError : public Error {
 public:
  using Error::Error;
};

/** A numerical target (reconstruction residual) was not reached. */
class NumericalError : public Error {
 public:
  NumericalError(const std::string& msg, double residual)
      : Error(msg), residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

/** Malformed text input. */
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace qdsyn
