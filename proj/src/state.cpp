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

#include "orbitprop/state.hpp"

#include <cmath>

namespace orbitprop {

ProductState::ProductState(std::vector<std::array<double, 3>> factors)
    : factors_(std::move(factors)) {
  if (factors_.empty() || factors_.size() > static_cast<std::size_t>(kMaxQubits)) {
    throw ValidationError("ProductState: qubit count must be in [1, 64]");
  }
  for (const auto& r : factors_) {
    const double norm2 = r[0] * r[0] + r[1] * r[1] + r[2] * r[2];
    if (norm2 > 1.0 + 1e-12) {
      throw ValidationError("ProductState: Bloch vector norm exceeds 1");
    }
  }
}

ProductState ProductState::plus_x(int n_qubits) {
  return uniform_bloch(n_qubits, {1.0, 0.0, 0.0});
}

ProductState ProductState::zero_z(int n_qubits) {
  return uniform_bloch(n_qubits, {0.0, 0.0, 1.0});
}

ProductState ProductState::uniform_bloch(int n_qubits, const std::array<double, 3>& r) {
  if (n_qubits < 1) throw ValidationError("ProductState: n_qubits must be >= 1");
  return ProductState(std::vector<std::array<double, 3>>(n_qubits, r));
}

ProductState ProductState::from_factors(std::vector<std::array<double, 3>> factors) {
  return ProductState(std::move(factors));
}

bool ProductState::is_permutation_invariant() const {
  for (std::size_t i = 1; i < factors_.size(); ++i) {
    if (factors_[i] != factors_[0]) return false;
  }
  return true;
}

double overlap_bits(const ProductState& state, pauli_bits b) {
  double v = 1.0;
  const int n = state.n_qubits();
  for (int i = 0; i < n; ++i) {
    const unsigned code = static_cast<unsigned>(b >> (2 * i)) & 3u;
    if (code == 0) continue;
    v *= state.bloch(i)[code - 1];
    if (v == 0.0) return 0.0;
  }
  return v;
}

double overlap(const ProductState& state, const PauliString& p) {
  if (p.n_qubits() != state.n_qubits()) throw ValidationError("overlap: size mismatch");
  return overlap_bits(state, p.bits());
}

}  // namespace orbitprop
