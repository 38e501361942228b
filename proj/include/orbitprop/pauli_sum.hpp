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
#include <utility>
#include <vector>

#include "orbitprop/pauli.hpp"

namespace orbitprop {

/// Sparse real-coefficient map over Pauli strings, stored as a key-sorted
/// vector of (packed bits, coefficient). No stored coefficient is exactly
/// zero; all keys share n_qubits.
class PauliSum {
 public:
  struct Term {
    pauli_bits bits;
    double coeff;
  };

  explicit PauliSum(int n_qubits);
  PauliSum(int n_qubits, std::vector<Term> sorted_terms);

  static PauliSum from_terms(int n_qubits,
                             const std::vector<std::pair<PauliString, double>>& terms);

  int n_qubits() const { return n_qubits_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  const std::vector<Term>& terms() const { return terms_; }

  /// Accumulates c onto p's entry; an entry landing exactly on zero is erased.
  void add(const PauliString& p, double c);
  /// Coefficient of p, or 0.0 when absent.
  double coefficient(const PauliString& p) const;

  double sum_abs() const;
  double sum_squares() const;

  /// Lines of "<integer key> <coefficient>", ascending by key.
  void write_snapshot(std::ostream& os) const;
  static PauliSum read_snapshot(std::istream& is, int n_qubits);

  bool operator==(const PauliSum& other) const;

  /// Takes ownership of a key-sorted, unique, zero-free term vector.
  static PauliSum adopt(int n_qubits, std::vector<Term>&& terms) {
    return PauliSum(n_qubits, std::move(terms));
  }

 private:
  int n_qubits_;
  std::vector<Term> terms_;
};

}  // namespace orbitprop
