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

#include <array>
#include <vector>

#include "orbitprop/pauli.hpp"

namespace orbitprop {

/// Product state as one Bloch vector per qubit: rho_i = (I + r.sigma)/2.
/// |+> along x is (1,0,0), |0> along z is (0,0,1); mixed factors (|r| < 1)
/// are allowed.
class ProductState {
 public:
  static ProductState plus_x(int n_qubits);
  static ProductState zero_z(int n_qubits);
  static ProductState uniform_bloch(int n_qubits, const std::array<double, 3>& r);
  static ProductState from_factors(std::vector<std::array<double, 3>> factors);

  int n_qubits() const { return static_cast<int>(factors_.size()); }
  const std::array<double, 3>& bloch(int site) const { return factors_[site]; }

  /// True when every single-qubit factor is identical, which makes the state
  /// invariant under any qubit permutation.
  bool is_permutation_invariant() const;

 private:
  explicit ProductState(std::vector<std::array<double, 3>> factors);
  std::vector<std::array<double, 3>> factors_;
};

/// Tr[rho P] for an unnormalized Pauli string: the product over qubits of the
/// single-qubit traces (1 for I, the Bloch component otherwise).
double overlap(const ProductState& state, const PauliString& p);
double overlap_bits(const ProductState& state, pauli_bits b);

}  // namespace orbitprop
