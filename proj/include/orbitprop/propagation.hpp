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

#include <iosfwd>
#include <optional>
#include <vector>

#include "orbitprop/circuit.hpp"
#include "orbitprop/pauli_sum.hpp"
#include "orbitprop/state.hpp"
#include "orbitprop/symmetry.hpp"

namespace orbitprop {

/// Entries whose magnitude falls below this after touched-key accumulation
/// are dropped as numerically zero (cancellation guard, separate from the
/// epsilon truncation threshold). Untouched pass-through terms are never
/// filtered.
inline constexpr double kNumericalZero = 1e-15;

struct MergePolicy {
  enum class Kind { never, after_each_layer, after_k_layers };
  Kind kind = Kind::after_each_layer;
  int every_k = 1;

  static MergePolicy never() { return {Kind::never, 0}; }
  static MergePolicy after_each_layer() { return {Kind::after_each_layer, 1}; }
  static MergePolicy after_k_layers(int k) {
    if (k < 1) throw ValidationError("after_k_layers: k must be >= 1");
    return {Kind::after_k_layers, k};
  }

  bool merging_enabled() const { return kind != Kind::never; }
  bool merge_after(int processed_layers) const {
    switch (kind) {
      case Kind::never: return false;
      case Kind::after_each_layer: return true;
      case Kind::after_k_layers: return processed_layers % every_k == 0;
    }
    return false;
  }
};

struct PropagationConfig {
  double epsilon = 0.0;                      // truncation threshold, >= 0
  MergePolicy merge_policy{};                // default: merge after each layer
  std::optional<SymmetryGroup> symmetry{};   // nullopt or trivial = standard PP
  std::size_t memory_cap = 100000000;        // hard term-count limit
  int threads = 1;                           // worker cap; results independent of it
};

struct TraceRow {
  int layer;              // number of Heisenberg-processed layers (0 = initial)
  double time;            // layer * circuit.time_step
  std::size_t n_terms;
  double sum_abs_coeff;
  double sum_sq_coeff;
  double expectation;     // vs. the supplied state; NaN when no state given
  double wall_ms;
};

struct PropagationTrace {
  PauliSum final_sum;
  std::vector<TraceRow> rows;

  /// CSV with header "layer,time,n_terms,sum_abs_coeff,sum_sq_coeff,
  /// expectation,wall_ms"; floats printed with 17 significant digits.
  void write_csv(std::ostream& os) const;
};

/// Heisenberg action of one rotation gate on every term; colliding output
/// keys accumulate. Bitwise-deterministic for any thread count.
PauliSum apply_gate_adjoint(const PauliSum& sum, const PauliRotationGate& gate,
                            int threads = 1);

/// Scales every coefficient by exp(-gamma * weight).
PauliSum apply_noise(const PauliSum& sum, const NoiseLayer& noise, int threads = 1);

/// Removes terms with |c| < epsilon; epsilon = 0 removes nothing.
PauliSum truncate(const PauliSum& sum, double epsilon);

/// Replaces every key by its canonical orbit representative, summing
/// coefficients of merged keys; output keys are canonical and the total
/// coefficient mass of each orbit is preserved.
PauliSum merge_by_symmetry(const PauliSum& sum, const SymmetryGroup& group,
                           int threads = 1);

/// Sum over terms of coeff * Tr[rho P].
double expectation(const PauliSum& sum, const ProductState& state);

/// As above, but first checks the state-invariance hypothesis structurally:
/// a nontrivial permutation-type group requires all single-qubit state
/// factors identical. Merged sums are only expectation-faithful for states
/// invariant under the group.
double expectation(const PauliSum& sum, const ProductState& state,
                   const SymmetryGroup& group);

/// Runs the full Heisenberg pipeline: layers in reverse order, gates within a
/// layer in reverse order, then noise, truncation, and (per policy) symmetry
/// merging; when merging is enabled the initial observable is merged before
/// the first layer. The optional state feeds the per-layer expectation column.
PropagationTrace propagate(const PauliSum& observable, const Circuit& circuit,
                           const PropagationConfig& config,
                           const ProductState* state = nullptr);

}  // namespace orbitprop
