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

#include <CLI11.hpp>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "qdsyn/decompose.hpp"
#include "qdsyn/io.hpp"
#include "qdsyn/lower.hpp"
#include "qdsyn/simulate.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitNumerical = 4;

double default_tol(qdsyn::Index m) { return 1e-9 * static_cast<double>(m); }

std::vector<int> prime_factors(long long m) {
  std::vector<int> factors;
  for (long long p = 2; p * p <= m; ++p) {
    while (m % p == 0) {
      factors.push_back(static_cast<int>(p));
      m /= p;
    }
  }
  if (m > 1) {
    factors.push_back(static_cast<int>(m));
  }
  return factors;
}

int run_synth(const std::string& in_path, const std::string& out_path,
              bool lower, bool prune, std::optional<double> tol,
              std::optional<int> control) {
  const qdsyn::MatrixFile mf = qdsyn::load_matrix(in_path);
  qdsyn::Circuit circuit = qdsyn::synthesize(mf.matrix, mf.dims, control);
  if (prune) {
    circuit = qdsyn::prune_zero_angles(circuit);
  }
  if (lower) {
    circuit = qdsyn::lower_circuit(circuit);
  }
  const double residual =
      qdsyn::equivalence(qdsyn::reconstruct(circuit), mf.matrix);
  qdsyn::save_circuit(out_path, circuit);
  std::cout << "residual " << qdsyn::format_double(residual) << '\n';
  const double limit = tol.value_or(default_tol(mf.dims.total()));
  if (!(residual <= limit)) {
    std::cerr << "error: residual above tolerance "
              << qdsyn::format_double(limit) << '\n';
    return kExitNumerical;
  }
  return 0;
}

int run_verify(const std::string& matrix_path, const std::string& circuit_path,
               std::optional<double> tol) {
  const qdsyn::MatrixFile mf = qdsyn::load_matrix(matrix_path);
  const qdsyn::Circuit circuit = qdsyn::load_circuit(circuit_path);
  if (mf.dims != circuit.dims) {
    std::cerr << "error: matrix and circuit dimensions differ\n";
    return kExitUsage;
  }
  const double residual =
      qdsyn::equivalence(mf.matrix, qdsyn::reconstruct(circuit));
  std::cout << "residual " << qdsyn::format_double(residual) << '\n';
  const double limit = tol.value_or(default_tol(mf.dims.total()));
  if (!(residual <= limit)) {
    std::cerr << "error: residual above tolerance "
              << qdsyn::format_double(limit) << '\n';
    return kExitNumerical;
  }
  return 0;
}

int run_count(const std::string& circuit_path,
              const std::vector<long long>& predict) {
  if (!predict.empty()) {
    std::cout << qdsyn::predicted_level_count(static_cast<int>(predict[0]),
                                              static_cast<int>(predict[1]))
              << '\n';
    return 0;
  }
  const qdsyn::Circuit circuit = qdsyn::load_circuit(circuit_path);
  const qdsyn::GateCounts counts = qdsyn::count_gates(circuit);
  std::cout << "single-qudit " << counts.single_qudit << '\n'
            << "shifts " << counts.shifts << '\n'
            << "controlled-unitaries " << counts.controlled_unitaries << '\n'
            << "rotations " << counts.rotations << '\n'
            << "ucgs " << counts.ucgs << '\n'
            << "multiplexers " << counts.multiplexers << '\n'
            << "total " << counts.total() << '\n';
  return 0;
}

int run_simulate(const std::string& circuit_path, const std::string& state_path,
                 const std::string& out_path) {
  const qdsyn::Circuit circuit = qdsyn::load_circuit(circuit_path);
  const qdsyn::StateVector state = qdsyn::load_state(state_path);
  if (state.dims != circuit.dims) {
    std::cerr << "error: state and circuit dimensions differ\n";
    return kExitUsage;
  }
  if (qdsyn::norm_error(state) > 1e-8) {
    throw qdsyn::PreconditionError("input state is not normalized");
  }
  qdsyn::save_state(out_path, qdsyn::apply_circuit(state, circuit));
  return 0;
}

int run_lower(const std::string& in_path, const std::string& out_path,
              bool merge_shifts) {
  qdsyn::Circuit lowered = qdsyn::lower_circuit(qdsyn::load_circuit(in_path));
  if (merge_shifts) {
    lowered = qdsyn::merge_adjacent_shifts(lowered);
  }
  qdsyn::save_circuit(out_path, lowered);
  return 0;
}

int run_random(long long m, std::uint64_t seed, const std::string& out_path,
               const std::vector<int>& dims_override) {
  std::vector<int> ds = dims_override.empty() ? prime_factors(m) : dims_override;
  const qdsyn::HybridDims dims(ds);
  if (dims.total() != static_cast<qdsyn::Index>(m)) {
    throw qdsyn::DimensionError("--dims product does not match m");
  }
  qdsyn::save_matrix(out_path, dims,
                     qdsyn::random_unitary(static_cast<qdsyn::Index>(m), seed));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Unitary-to-circuit synthesis for hybrid qudit registers"};
  app.require_subcommand(1);

  std::string matrix_path, circuit_path, state_path, out_path;
  std::optional<double> tol;
  std::optional<int> control;
  bool lower = false, prune = false, merge_shifts = false;
  std::vector<long long> predict;
  std::vector<int> dims_override;
  long long random_m = 0;
  std::uint64_t random_seed = 0;

  CLI::App* synth = app.add_subcommand(
      "synth", "Synthesize a circuit from a unitary matrix file");
  synth->add_option("matrix", matrix_path, "input matrix file")->required();
  synth->add_option("circuit", out_path, "output circuit file")->required();
  synth->add_flag("--lower", lower, "also lower the circuit");
  synth->add_flag("--prune", prune, "drop rotations whose angles are all zero");
  synth->add_option("--tol", tol, "residual tolerance (default 1e-9*m)");
  synth->add_option("--control", control, "top-level control qudit override");

  CLI::App* verify = app.add_subcommand(
      "verify", "Compare a matrix file against a circuit's reconstruction");
  verify->add_option("matrix", matrix_path, "matrix file")->required();
  verify->add_option("circuit", circuit_path, "circuit file")->required();
  verify->add_option("--tol", tol, "residual tolerance (default 1e-9*m)");

  CLI::App* count =
      app.add_subcommand("count", "Gate counts of a circuit file, or the "
                                  "predicted level count for d-valued gates");
  count->add_option("circuit", circuit_path, "circuit file");
  count->add_option("--predict", predict, "evaluate the formula for d n")
      ->expected(2);

  CLI::App* simulate =
      app.add_subcommand("simulate", "Apply a circuit file to a state file");
  simulate->add_option("circuit", circuit_path, "circuit file")->required();
  simulate->add_option("state", state_path, "input state file")->required();
  simulate->add_option("output", out_path, "output state file")->required();

  CLI::App* lower_cmd =
      app.add_subcommand("lower", "Lower a circuit file to shift, controlled-"
                                  "unitary and controlled-Givens gates");
  lower_cmd->add_option("circuit", circuit_path, "input circuit file")
      ->required();
  lower_cmd->add_option("output", out_path, "output circuit file")->required();
  lower_cmd->add_flag("--merge-shifts", merge_shifts,
                      "peephole-merge adjacent shifts on the same wire");

  CLI::App* random = app.add_subcommand(
      "random", "Write a seeded random unitary as a matrix file");
  random->add_option("m", random_m, "matrix size")->required();
  random->add_option("seed", random_seed, "generator seed")->required();
  random->add_option("output", out_path, "output matrix file")->required();
  random->add_option("--dims", dims_override,
                     "qudit dimensions (default: prime factors of m)")
      ->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (synth->parsed()) {
      return run_synth(matrix_path, out_path, lower, prune, tol, control);
    }
    if (verify->parsed()) {
      return run_verify(matrix_path, circuit_path, tol);
    }
    if (count->parsed()) {
      if (predict.empty() && circuit_path.empty()) {
        std::cerr << "error: count needs a circuit file or --predict d n\n";
        return kExitUsage;
      }
      return run_count(circuit_path, predict);
    }
    if (simulate->parsed()) {
      return run_simulate(circuit_path, state_path, out_path);
    }
    if (lower_cmd->parsed()) {
      return run_lower(circuit_path, out_path, merge_shifts);
    }
    if (random->parsed()) {
      if (random_m < 2) {
        std::cerr << "error: random needs m >= 2\n";
        return kExitUsage;
      }
      return run_random(random_m, random_seed, out_path, dims_override);
    }
  } catch (const qdsyn::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const qdsyn::DimensionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const qdsyn::NumericalError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const qdsyn::Error& e) {
    // precondition and validation failures
    std::cerr << "error: " << e.what() << '\n';
    return kExitPrecondition;
  }
  return 0;
}
