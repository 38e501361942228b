// Copyright 2026 The orbitprop Authors
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
#include <iosfwd>
#include <optional>
#include <random>
#include <string>

#include "orbitprop/models.hpp"
#include "orbitprop/oracle.hpp"
#include "orbitprop/propagation.hpp"

namespace orbitprop {

/// One experiment's full description, parsed from a JSON config document.
/// CLI flags override individual fields after parsing.
struct RunConfig {
  std::optional<IsingParams> ising;
  std::optional<XXZParams> xxz;

  enum class Observable { mid_chain_z, total_spin_squared, custom };
  Observable observable = Observable::mid_chain_z;
  std::string custom_observable;  // Pauli text, qubit 0 leftmost

  enum class StateKind { plus_x, zero_z, bloch };
  StateKind state = StateKind::plus_x;
  std::array<double, 3> state_bloch{1.0, 0.0, 0.0};

  GroupKind symmetry = GroupKind::trivial;
  int symmetry_lx = 0, symmetry_ly = 0;                  // translation_2d
  std::vector<std::vector<int>> symmetry_generators;     // generic

  double epsilon = 0.0;
  double gamma = 0.0;
  MergePolicy merge_policy = MergePolicy::after_each_layer();
  std::string output_path = "trace.csv";
  std::size_t memory_cap = 100000000;
  int threads = 1;
  std::uint64_t seed = 0;
};

/// Parses and cross-validates a config document; error messages name the
/// offending field.
RunConfig parse_run_config(const std::string& json_text);
RunConfig load_run_config(const std::string& path);

/// Everything needed to execute a run, assembled from the config.
struct BuiltRun {
  Circuit circuit;
  PauliSum observable;
  ProductState state;
  SymmetryGroup group;
};
BuiltRun build_run(const RunConfig& config);

/// Propagates per the config and writes the trace CSV to config.output_path.
void run_propagate(const RunConfig& config, std::ostream& log);

/// Runs standard and symmetry modes and writes the joined CSV
/// (layer,n_terms_standard,n_terms_symmetry,expectation_standard,
/// expectation_symmetry) to config.output_path.
void run_compare(const RunConfig& config, std::ostream& log);

/// CSV table (n,group,count,ratio) of representative counts. `group` is one
/// of trivial, translation_1d, dihedral, permutation_full (ranged over
/// [n_min, n_max]) or translation_2d (single row, lx/ly required).
std::string count_reps_csv(const std::string& group, int n_min, int n_max, int lx = 0,
                           int ly = 0);

struct OracleCheckResult {
  int trials;
  double max_standard_error;  // |engine - oracle| over random circuits
  double max_symmetry_error;  // same with translation merging on symmetric circuits
};

/// Randomized engine-vs-dense-oracle comparison at size n (epsilon = 0,
/// gamma = 0).
OracleCheckResult oracle_check(int n, int trials, std::uint64_t seed, int threads = 1);

/// Uniformly random non-identity Pauli string.
PauliString random_pauli(int n, std::mt19937_64& rng);

/// A circuit of `layers` layers, each holding `gates_per_layer` rotations
/// with uniformly random non-identity generators and angles in (-pi, pi).
Circuit random_circuit(int n, int layers, int gates_per_layer, std::mt19937_64& rng);

/// A circuit whose every layer is the full G-orbit of a random single-letter
/// generator, all orbit members sharing one random angle. Single-letter orbit
/// members commute pairwise, so each layer is exactly invariant under the
/// group as an operator, not merely as a gate set.
Circuit random_symmetric_circuit(const SymmetryGroup& group, int layers,
                                 std::mt19937_64& rng);

}  // namespace orbitprop
