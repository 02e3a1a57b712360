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

#include <iosfwd>
#include <string>

#include "qdsyn/gates.hpp"
#include "qdsyn/simulate.hpp"

namespace qdsyn {

// Text formats. All floats are printed with 17 significant digits so that
// parse(print(x)) round-trips bit for bit. Lines starting with '#' and
// blank lines are ignored on input.
//
// Matrix:   dims d1 d2 ... dn
//           m lines of m whitespace-separated `re,im` entries
// Circuit:  CIRCUIT dims=d1,d2,...
//           one gate per line (U, SHIFT, CU, CG, UCG, MUX)
// State:    STATE dims=d1,d2,...
//           m lines of `re,im`

struct MatrixFile {
  HybridDims dims;
  CMat matrix;
};

std::string format_double(double value);

MatrixFile parse_matrix(std::istream& in);
void print_matrix(std::ostream& out, const HybridDims& dims, const CMat& m);

Circuit parse_circuit(std::istream& in);
void print_circuit(std::ostream& out, const Circuit& c);

StateVector parse_state(std::istream& in);
void print_state(std::ostream& out, const StateVector& s);

MatrixFile load_matrix(const std::string& path);
void save_matrix(const std::string& path, const HybridDims& dims,
                 const CMat& m);
Circuit load_circuit(const std::string& path);
void save_circuit(const std::string& path, const Circuit& c);
StateVector load_state(const std::string& path);
void save_state(const std::string& path, const StateVector& s);

}  // namespace qdsyn
