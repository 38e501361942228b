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

#include <optional>
#include <vector>

#include "orbitprop/pauli.hpp"

namespace orbitprop {

/// The rotation exp(-i (angle/2) generator). Under Heisenberg conjugation a
/// commuting term passes through; an anticommuting term Q splits as
/// cos(angle) Q + sin(angle) (i P Q).
struct PauliRotationGate {
  PauliString generator;
  double angle;

  PauliRotationGate(PauliString gen, double theta) : generator(std::move(gen)), angle(theta) {
    if (generator.is_identity()) {
      throw ValidationError("PauliRotationGate: generator must not be the identity");
    }
  }
};

/// Coefficient damping by exp(-gamma * weight(P)) per term.
struct NoiseLayer {
  double gamma;

  explicit NoiseLayer(double g) : gamma(g) {
    if (!(g >= 0.0)) throw ValidationError("NoiseLayer: gamma must be >= 0");
  }
};

struct CircuitLayer {
  std::vector<PauliRotationGate> gates;
  std::optional<NoiseLayer> noise;
};

/// Ordered layers, listed in the order they act on the state; Heisenberg
/// propagation processes them (and the gates inside each layer) in reverse.
struct Circuit {
  int n_qubits;
  /// Physical time advanced per layer (Trotter step); used for trace output.
  double time_step = 1.0;
  std::vector<CircuitLayer> layers;

  explicit Circuit(int n) : n_qubits(n) {
    if (n < 1 || n > kMaxQubits) throw ValidationError("Circuit: n_qubits must be in [1, 64]");
  }

  std::size_t total_gates() const {
    std::size_t c = 0;
    for (const auto& l : layers) c += l.gates.size();
    return c;
  }

  /// Attaches the same noise strength to every layer.
  void attach_noise(double gamma) {
    for (auto& l : layers) l.noise = NoiseLayer(gamma);
  }

  /// All gate generators must share this circuit's qubit count.
  void validate() const {
    for (const auto& l : layers) {
      for (const auto& g : l.gates) {
        if (g.generator.n_qubits() != n_qubits) {
          throw ValidationError("Circuit: gate generator qubit count mismatch");
        }
      }
    }
  }
};

}  // namespace orbitprop
