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
#include <string>
#include <vector>

#include "orbitprop/pauli.hpp"

namespace orbitprop {

/// Exact counting type for representative/orbit cardinalities. 4^n overflows
/// 64 bits at n = 32; 128 bits carry every n <= 63 (and n = 64 strings still
/// fit the bit layout, only their *count* 4^64 = 2^128 does not).
using count_t = unsigned __int128;

enum class GroupKind {
  trivial,
  translation_1d,
  translation_2d,
  dihedral,
  permutation_full,
  generic,
};

std::string group_kind_name(GroupKind kind);

/// 4^e, throwing OverflowError when the result exceeds 128 bits.
count_t pow4_checked(int e);

/// Necklace count (1/n) * sum_{j=1..n} 4^gcd(j, n): the number of
/// translation-orbit representatives of all 4^n Pauli strings.
count_t count_representatives_translation_closed_form(int n);

/// Stars-and-bars count C(n+3, 3) of permutation-orbit representatives.
count_t count_representatives_permutation_closed_form(int n);

struct OrbitReport {
  PauliString representative;
  count_t orbit_size;
  std::optional<std::vector<PauliString>> members;  // ascending by bits when present
};

/// A finite group of qubit-index permutations together with a
/// canonical-representative strategy. The full symmetric group S_n is
/// represented implicitly (its elements are never materialized); every other
/// kind stores its elements, identity first.
class SymmetryGroup {
 public:
  static SymmetryGroup trivial(int n_qubits);
  static SymmetryGroup translation_1d(int n_qubits);
  static SymmetryGroup translation_2d(int lx, int ly);
  static SymmetryGroup dihedral(int n_qubits);
  static SymmetryGroup permutation_full(int n_qubits);
  /// Closure of the generators by breadth-first composition, capped to
  /// prevent factorial blowup.
  static SymmetryGroup generic(int n_qubits, const std::vector<Permutation>& generators,
                               std::size_t element_cap = 10000);

  GroupKind kind() const { return kind_; }
  int n_qubits() const { return n_qubits_; }
  bool is_trivial() const { return kind_ == GroupKind::trivial; }
  int lx() const { return lx_; }
  int ly() const { return ly_; }

  /// Group order; n! for permutation_full (overflow-checked).
  count_t order() const;
  /// Materialized elements; throws for permutation_full.
  const std::vector<Permutation>& elements() const;

  /// The orbit member with the lowest integer encoding. Idempotent; constant
  /// on each orbit. Translation/dihedral/generic kinds minimize over explicit
  /// elements (translation_1d by bit rotation); permutation_full counts
  /// letters and rebuilds Z^nZ Y^nY X^nX padded with I, which is the lowest
  /// arrangement since weights 4^site grow with the site index.
  PauliString canonical_rep(const PauliString& s) const;
  pauli_bits canonical_rep_bits(pauli_bits b) const;

  OrbitReport orbit(const PauliString& s, bool with_members = true) const;

  /// Number of distinct canonical representatives over all 4^n strings.
  /// Closed forms for translation_1d and permutation_full; Burnside's count
  /// (1/|G|) sum_g 4^cycles(g) otherwise.
  count_t count_representatives() const;

 private:
  SymmetryGroup(GroupKind kind, int n_qubits, std::vector<Permutation> elements);

  GroupKind kind_;
  int n_qubits_;
  int lx_ = 0, ly_ = 0;
  std::vector<Permutation> elements_;
};

}  // namespace orbitprop
