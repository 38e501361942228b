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

#include <complex>
#include <vector>

#include "orbitprop/circuit.hpp"
#include "orbitprop/pauli_sum.hpp"
#include "orbitprop/state.hpp"

namespace orbitprop {

/// Brute-force dense-matrix ground truth for n <= 10 qubits. Single-threaded,
/// test-only; deliberately independent of the sparse engine's code paths.
class DenseOperator {
 public:
  explicit DenseOperator(int n_qubits);

  static DenseOperator densify(const PauliSum& sum);

  int n_qubits() const { return n_qubits_; }
  std::size_t dim() const { return dim_; }
  std::complex<double>& at(std::size_t row, std::size_t col) { return m_[row * dim_ + col]; }
  const std::complex<double>& at(std::size_t row, std::size_t col) const {
    return m_[row * dim_ + col];
  }

  double max_abs_diff(const DenseOperator& other) const;
  /// max |A - A^dagger| entrywise.
  double hermiticity_defect() const;

 private:
  int n_qubits_;
  std::size_t dim_;
  std::vector<std::complex<double>> m_;
};

/// Exact Heisenberg conjugation through the circuit, same reverse layer/gate
/// order as propagate(). Gate exponentials use the closed form
/// exp(-i(theta/2)P) = cos(theta/2) I - i sin(theta/2) P. A layer's noise is
/// the identical coefficient-damping map (decompose into Pauli coefficients,
/// damp by exp(-gamma*weight), recompose).
DenseOperator conjugate_adjoint(const DenseOperator& op, const Circuit& circuit);

/// Tr[rho op]; throws std::logic_error if the imaginary part exceeds 1e-10
/// (which would signal a convention bug, not roundoff).
double exact_expectation(const DenseOperator& op, const ProductState& state);

}  // namespace orbitprop
