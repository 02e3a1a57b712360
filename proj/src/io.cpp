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

#include "qdsyn/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace qdsyn {

namespace {

std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream iss(line);
  std::string tok;
  while (iss >> tok) {
    out.push_back(tok);
  }
  return out;
}

std::vector<std::string> split_on(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : text) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  out.push_back(cur);
  return out;
}

double parse_real(const std::string& tok) {
  const char* begin = tok.c_str();
  char* end = nullptr;
  const double value = std::strtod(begin, &end);
  if (end != begin + tok.size() || tok.empty()) {
    throw ParseError("bad number: '" + tok + "'");
  }
  if (!std::isfinite(value)) {
    throw ParseError("non-finite number: '" + tok + "'");
  }
  return value;
}

long long parse_int(const std::string& tok) {
  const char* begin = tok.c_str();
  char* end = nullptr;
  const long long value = std::strtoll(begin, &end, 10);
  if (end != begin + tok.size() || tok.empty()) {
    throw ParseError("bad integer: '" + tok + "'");
  }
  return value;
}

Complex parse_entry(const std::string& tok) {
  const auto comma = tok.find(',');
  if (comma == std::string::npos) {
    throw ParseError("matrix entry must be 're,im', got '" + tok + "'");
  }
  return Complex(parse_real(tok.substr(0, comma)),
                 parse_real(tok.substr(comma + 1)));
}

std::vector<int> parse_dim_list(const std::string& text) {
  std::vector<int> dims;
  for (const std::string& part : split_on(text, ',')) {
    dims.push_back(static_cast<int>(parse_int(part)));
  }
  return dims;
}

/// Next content line (comments and blanks skipped); false at end of input.
bool next_line(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    std::size_t i = 0;
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
    }
    if (i == line.size() || line[i] == '#') {
      continue;
    }
    if (!line.empty() && line.back() == '\r') {
      line.pop_back();
    }
    return true;
  }
  return false;
}

CMat matrix_from_entries(const std::vector<Complex>& entries, Index size,
                         const char* what) {
  if (static_cast<Index>(entries.size()) != size * size) {
    throw ParseError(std::string(what) + ": expected " +
                     std::to_string(size * size) + " entries, got " +
                     std::to_string(entries.size()));
  }
  CMat m(size, size);
  for (Index i = 0; i < size; ++i) {
    for (Index j = 0; j < size; ++j) {
      m(i, j) = entries[static_cast<std::size_t>(i * size + j)];
    }
  }
  return m;
}

std::vector<Complex> parse_bracketed(const std::string& text,
                                     const char* what) {
  if (text.size() < 2 || text.front() != '[' || text.back() != ']') {
    throw ParseError(std::string(what) + ": expected [...] matrix literal");
  }
  std::vector<Complex> entries;
  for (const std::string& tok : split_ws(text.substr(1, text.size() - 2))) {
    entries.push_back(parse_entry(tok));
  }
  return entries;
}

void print_entries(std::ostream& out, const CMat& m) {
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) {
      if (i != 0 || j != 0) {
        out << ' ';
      }
      out << format_double(m(i, j).real()) << ','
          << format_double(m(i, j).imag());
    }
  }
}

std::string value_of(const std::string& tok, const char* key) {
  const std::string prefix = std::string(key) + "=";
  if (tok.rfind(prefix, 0) != 0) {
    throw ParseError("expected '" + prefix + "...', got '" + tok + "'");
  }
  return tok.substr(prefix.size());
}

Index expected_block_size(const HybridDims& dims,
                          const std::vector<int>& controls) {
  Index size = dims.total();
  for (int c : controls) {
    if (c < 0 || c >= dims.count()) {
      throw ParseError("MUX control index out of range");
    }
    size /= dims.dim(c);
  }
  return size;
}

Gate parse_gate_line(const std::string& line, const HybridDims& dims) {
  // Matrix payloads contain spaces, so cut them off before tokenizing.
  const std::size_t bracket = line.find('[');
  const std::string head =
      bracket == std::string::npos ? line : line.substr(0, bracket);
  const std::string payload =
      bracket == std::string::npos ? std::string() : line.substr(bracket);
  const std::vector<std::string> toks = split_ws(head);
  if (toks.empty()) {
    throw ParseError("empty gate line");
  }
  const std::string& kind = toks[0];

  if (kind == "U") {
    if (toks.size() != 2) {
      throw ParseError("U expects: U q=<t> [matrix]");
    }
    SingleQuditGate g;
    g.target = static_cast<int>(parse_int(value_of(toks[1], "q")));
    g.matrix = matrix_from_entries(parse_bracketed(payload, "U"),
                                   dims.dim(g.target), "U");
    return g;
  }
  if (kind == "SHIFT") {
    if (toks.size() != 3) {
      throw ParseError("SHIFT expects: SHIFT q=<t> k=<int>");
    }
    ShiftGate g;
    g.target = static_cast<int>(parse_int(value_of(toks[1], "q")));
    g.amount = static_cast<int>(parse_int(value_of(toks[2], "k")));
    return g;
  }
  if (kind == "CU") {
    if (toks.size() != 3) {
      throw ParseError("CU expects: CU q=<t0..t1> ctrl=<c> [matrix]");
    }
    ControlledUnitary g;
    const std::string range = value_of(toks[1], "q");
    const auto dots = range.find("..");
    if (dots == std::string::npos) {
      throw ParseError("CU target range must be t0..t1");
    }
    g.first_target = static_cast<int>(parse_int(range.substr(0, dots)));
    g.last_target = static_cast<int>(parse_int(range.substr(dots + 2)));
    g.control = static_cast<int>(parse_int(value_of(toks[2], "ctrl")));
    Index size = 1;
    for (int q = g.first_target; q <= g.last_target; ++q) {
      size *= dims.dim(q);
    }
    g.matrix = matrix_from_entries(parse_bracketed(payload, "CU"), size, "CU");
    return g;
  }
  if (kind == "CG") {
    if (toks.size() != 4 && toks.size() != 5) {
      throw ParseError(
          "CG expects: CG q=<t> plane=<i>,<j> theta=<f> [ctrls=q:v,...]");
    }
    ControlledGivens g;
    g.target = static_cast<int>(parse_int(value_of(toks[1], "q")));
    const std::vector<int> plane = parse_dim_list(value_of(toks[2], "plane"));
    if (plane.size() != 2) {
      throw ParseError("CG plane must be i,j");
    }
    g.plane_i = plane[0];
    g.plane_j = plane[1];
    g.theta = parse_real(value_of(toks[3], "theta"));
    if (toks.size() == 5) {
      for (const std::string& part : split_on(value_of(toks[4], "ctrls"), ',')) {
        const auto colon = part.find(':');
        if (colon == std::string::npos) {
          throw ParseError("CG control must be q:v");
        }
        g.controls.emplace_back(
            static_cast<int>(parse_int(part.substr(0, colon))),
            static_cast<int>(parse_int(part.substr(colon + 1))));
      }
    }
    return g;
  }
  if (kind == "UCG") {
    if (toks.size() != 4) {
      throw ParseError("UCG expects: UCG q=<t> plane=<i>,<j> thetas=<f>,...");
    }
    UniformlyControlledGivens g;
    g.target = static_cast<int>(parse_int(value_of(toks[1], "q")));
    const std::vector<int> plane = parse_dim_list(value_of(toks[2], "plane"));
    if (plane.size() != 2) {
      throw ParseError("UCG plane must be i,j");
    }
    g.plane_i = plane[0];
    g.plane_j = plane[1];
    for (const std::string& part : split_on(value_of(toks[3], "thetas"), ',')) {
      g.angles.push_back(parse_real(part));
    }
    return g;
  }
  if (kind == "MUX") {
    // The payload starts at '[', so the 'blocks=' key is the last head token.
    if (toks.size() != 3 || toks[2] != "blocks=") {
      throw ParseError("MUX expects: MUX q=<c,...> blocks=[...];[...]");
    }
    Multiplexer g;
    g.controls = parse_dim_list(value_of(toks[1], "q"));
    const Index size = expected_block_size(dims, g.controls);
    for (const std::string& part : split_on(payload, ';')) {
      g.blocks.push_back(
          matrix_from_entries(parse_bracketed(part, "MUX"), size, "MUX"));
    }
    return g;
  }
  throw ParseError("unknown gate kind '" + kind + "'");
}

}  // namespace

std::string format_double(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

MatrixFile parse_matrix(std::istream& in) {
  std::string line;
  if (!next_line(in, line)) {
    throw ParseError("empty matrix input");
  }
  std::vector<std::string> toks = split_ws(line);
  if (toks.size() < 2 || toks[0] != "dims") {
    throw ParseError("matrix input must start with 'dims d1 d2 ...'");
  }
  std::vector<int> ds;
  for (std::size_t i = 1; i < toks.size(); ++i) {
    ds.push_back(static_cast<int>(parse_int(toks[i])));
  }
  HybridDims dims = [&] {
    try {
      return HybridDims(ds);
    } catch (const DimensionError& e) {
      throw ParseError(std::string("bad dims line: ") + e.what());
    }
  }();
  const Index m = dims.total();
  CMat matrix(m, m);
  for (Index i = 0; i < m; ++i) {
    if (!next_line(in, line)) {
      throw ParseError("matrix row " + std::to_string(i) + " missing");
    }
    toks = split_ws(line);
    if (static_cast<Index>(toks.size()) != m) {
      throw ParseError("matrix row " + std::to_string(i) + " has " +
                       std::to_string(toks.size()) + " entries, expected " +
                       std::to_string(m));
    }
    for (Index j = 0; j < m; ++j) {
      matrix(i, j) = parse_entry(toks[static_cast<std::size_t>(j)]);
    }
  }
  return MatrixFile{std::move(dims), std::move(matrix)};
}

void print_matrix(std::ostream& out, const HybridDims& dims, const CMat& m) {
  if (m.rows() != dims.total() || m.cols() != dims.total()) {
    throw DimensionError("matrix size does not match dims");
  }
  out << "dims";
  for (int d : dims.dims()) {
    out << ' ' << d;
  }
  out << '\n';
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) {
      if (j != 0) {
        out << ' ';
      }
      out << format_double(m(i, j).real()) << ','
          << format_double(m(i, j).imag());
    }
    out << '\n';
  }
}

Circuit parse_circuit(std::istream& in) {
  std::string line;
  if (!next_line(in, line)) {
    throw ParseError("empty circuit input");
  }
  std::vector<std::string> toks = split_ws(line);
  if (toks.size() != 2 || toks[0] != "CIRCUIT") {
    throw ParseError("circuit input must start with 'CIRCUIT dims=d1,d2,...'");
  }
  HybridDims dims = [&] {
    try {
      return HybridDims(parse_dim_list(value_of(toks[1], "dims")));
    } catch (const DimensionError& e) {
      throw ParseError(std::string("bad circuit dims: ") + e.what());
    }
  }();
  Circuit c{std::move(dims), {}};
  while (next_line(in, line)) {
    c.gates.push_back(parse_gate_line(line, c.dims));
  }
  try {
    validate_circuit(c);
  } catch (const ValidationError& e) {
    throw ParseError(std::string("invalid circuit: ") + e.what());
  }
  return c;
}

void print_circuit(std::ostream& out, const Circuit& c) {
  out << "CIRCUIT dims=";
  for (int q = 0; q < c.dims.count(); ++q) {
    if (q != 0) {
      out << ',';
    }
    out << c.dims.dim(q);
  }
  out << '\n';
  for (const Gate& g : c.gates) {
    if (const auto* u = std::get_if<SingleQuditGate>(&g)) {
      out << "U q=" << u->target << " [";
      print_entries(out, u->matrix);
      out << "]\n";
    } else if (const auto* shift = std::get_if<ShiftGate>(&g)) {
      out << "SHIFT q=" << shift->target << " k=" << shift->amount << '\n';
    } else if (const auto* cu = std::get_if<ControlledUnitary>(&g)) {
      out << "CU q=" << cu->first_target << ".." << cu->last_target
          << " ctrl=" << cu->control << " [";
      print_entries(out, cu->matrix);
      out << "]\n";
    } else if (const auto* cg = std::get_if<ControlledGivens>(&g)) {
      out << "CG q=" << cg->target << " plane=" << cg->plane_i << ','
          << cg->plane_j << " theta=" << format_double(cg->theta);
      if (!cg->controls.empty()) {
        out << " ctrls=";
        for (std::size_t i = 0; i < cg->controls.size(); ++i) {
          if (i != 0) {
            out << ',';
          }
          out << cg->controls[i].first << ':' << cg->controls[i].second;
        }
      }
      out << '\n';
    } else if (const auto* ucg = std::get_if<UniformlyControlledGivens>(&g)) {
      out << "UCG q=" << ucg->target << " plane=" << ucg->plane_i << ','
          << ucg->plane_j << " thetas=";
      for (std::size_t i = 0; i < ucg->angles.size(); ++i) {
        if (i != 0) {
          out << ',';
        }
        out << format_double(ucg->angles[i]);
      }
      out << '\n';
    } else if (const auto* mux = std::get_if<Multiplexer>(&g)) {
      out << "MUX q=";
      for (std::size_t i = 0; i < mux->controls.size(); ++i) {
        if (i != 0) {
          out << ',';
        }
        out << mux->controls[i];
      }
      out << " blocks=";
      for (std::size_t i = 0; i < mux->blocks.size(); ++i) {
        if (i != 0) {
          out << ';';
        }
        out << '[';
        print_entries(out, mux->blocks[i]);
        out << ']';
      }
      out << '\n';
    }
  }
}

StateVector parse_state(std::istream& in) {
  std::string line;
  if (!next_line(in, line)) {
    throw ParseError("empty state input");
  }
  std::vector<std::string> toks = split_ws(line);
  if (toks.size() != 2 || toks[0] != "STATE") {
    throw ParseError("state input must start with 'STATE dims=d1,d2,...'");
  }
  HybridDims dims = [&] {
    try {
      return HybridDims(parse_dim_list(value_of(toks[1], "dims")));
    } catch (const DimensionError& e) {
      throw ParseError(std::string("bad state dims: ") + e.what());
    }
  }();
  CVec amps(dims.total());
  for (Index i = 0; i < dims.total(); ++i) {
    if (!next_line(in, line)) {
      throw ParseError("state amplitude " + std::to_string(i) + " missing");
    }
    const std::vector<std::string> entry = split_ws(line);
    if (entry.size() != 1) {
      throw ParseError("state lines carry exactly one 're,im' entry");
    }
    amps(i) = parse_entry(entry[0]);
  }
  return StateVector{std::move(dims), std::move(amps)};
}

void print_state(std::ostream& out, const StateVector& s) {
  out << "STATE dims=";
  for (int q = 0; q < s.dims.count(); ++q) {
    if (q != 0) {
      out << ',';
    }
    out << s.dims.dim(q);
  }
  out << '\n';
  for (Index i = 0; i < s.amplitudes.size(); ++i) {
    out << format_double(s.amplitudes(i).real()) << ','
        << format_double(s.amplitudes(i).imag()) << '\n';
  }
}

namespace {

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot open '" + path + "' for reading");
  }
  return in;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) {
    throw ParseError("cannot open '" + path + "' for writing");
  }
  return out;
}

}  // namespace

MatrixFile load_matrix(const std::string& path) {
  std::ifstream in = open_input(path);
  return parse_matrix(in);
}

void save_matrix(const std::string& path, const HybridDims& dims,
                 const CMat& m) {
  std::ofstream out = open_output(path);
  print_matrix(out, dims, m);
}

Circuit load_circuit(const std::string& path) {
  std::ifstream in = open_input(path);
  return parse_circuit(in);
}

void save_circuit(const std::string& path, const Circuit& c) {
  std::ofstream out = open_output(path);
  print_circuit(out, c);
}

StateVector load_state(const std::string& path) {
  std::ifstream in = open_input(path);
  return parse_state(in);
}

void save_state(const std::string& path, const StateVector& s) {
  std::ofstream out = open_output(path);
  print_state(out, s);
}

}  // namespace qdsyn
