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
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "orbitprop/errors.hpp"

namespace orbitprop {

/// Packed Pauli word, 2 bits per qubit, qubit 0 in the two least-significant
/// bits. Per-qubit codes: I=00, X=01, Y=10, Z=11. A single 128-bit word covers
/// n <= 64 qubits. This layout is the stable on-disk/CSV integer key: the
/// integer value of a string is sum_i code_i * 4^i, so "lowest integer"
/// comparisons of two strings are plain comparisons of these words.
using pauli_bits = unsigned __int128;

enum class Pauli : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

constexpr int kMaxQubits = 64;

/// Decimal rendering for the 128-bit key type (iostreams cannot print it).
std::string to_decimal(pauli_bits v);
/// Parses a non-negative decimal integer into a 128-bit key.
pauli_bits parse_decimal_u128(std::string_view text);

namespace bits {

/// Number of qubits whose 2-bit code is nonzero.
int weight(pauli_bits b);

/// True iff the two packed words commute as Pauli operators: the number of
/// sites where both codes are non-identity and different must be even.
bool commute(pauli_bits a, pauli_bits b);

/// Exponent k in i^k for the scalar relating a*b to their XOR word:
/// a * b = i^k (a ^ b), accumulated per site.
int phase_exponent(pauli_bits a, pauli_bits b);

inline Pauli letter(pauli_bits b, int site) {
  return static_cast<Pauli>(static_cast<unsigned>(b >> (2 * site)) & 3u);
}

inline pauli_bits with_letter(pauli_bits b, int site, Pauli p) {
  const pauli_bits mask = pauli_bits{3} << (2 * site);
  return (b & ~mask) | (pauli_bits{static_cast<unsigned>(p)} << (2 * site));
}

/// Cyclic left shift of the qubit sites by `amount` (letter at site i moves to
/// site (i + amount) mod n), i.e. a 2*amount bit rotate within the 2n-bit word.
pauli_bits rotate_sites(pauli_bits b, int amount, int n_qubits);

}  // namespace bits

/// A bijection on qubit indices {0, ..., n-1}. image()[i] is where site i goes.
class Permutation {
 public:
  explicit Permutation(std::vector<std::uint8_t> image);

  static Permutation identity(int n);
  /// i -> (i + amount) mod n.
  static Permutation cyclic_shift(int n, int amount);
  /// i -> n - 1 - i.
  static Permutation reversal(int n);

  int size() const { return static_cast<int>(image_.size()); }
  std::uint8_t operator[](int i) const { return image_[i]; }
  const std::vector<std::uint8_t>& image() const { return image_; }

  /// (a.compose(b))[i] = a[b[i]]; applying b then a.
  Permutation compose(const Permutation& other) const;
  Permutation inverse() const;
  int cycle_count() const;

  bool operator==(const Permutation& other) const { return image_ == other.image_; }
  bool operator<(const Permutation& other) const { return image_ < other.image_; }

 private:
  std::vector<std::uint8_t> image_;
};

/// One n-qubit Pauli string (unnormalized, unit operator norm per factor).
class PauliString {
 public:
  PauliString(pauli_bits bits, int n_qubits);

  static PauliString identity(int n_qubits) { return PauliString(0, n_qubits); }
  /// Parses text like "XIZ"; qubit 0 is the leftmost character.
  static PauliString from_text(std::string_view text);
  static PauliString from_letters(const std::vector<Pauli>& letters);
  /// Single non-identity letter at one site, identity elsewhere.
  static PauliString single(int n_qubits, int site, Pauli p);

  pauli_bits bits() const { return bits_; }
  int n_qubits() const { return n_qubits_; }
  Pauli letter(int site) const;
  int weight() const { return bits::weight(bits_); }
  bool is_identity() const { return bits_ == 0; }

  /// Renders with qubit 0 leftmost, e.g. "XIZ".
  std::string to_text() const;

  bool operator==(const PauliString& other) const {
    return n_qubits_ == other.n_qubits_ && bits_ == other.bits_;
  }
  bool operator!=(const PauliString& other) const { return !(*this == other); }

 private:
  pauli_bits bits_;
  int n_qubits_;
};

/// A Pauli string together with a fourth-root-of-unity scalar, stored as the
/// exponent k of i. Products of Hermitian Pauli strings land here.
struct PhasedPauli {
  PauliString pauli;
  std::uint8_t phase_exponent;  // scalar is i^phase_exponent, k in {0,1,2,3}

  std::complex<double> phase() const {
    static constexpr std::complex<double> table[4] = {
        {1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};
    return table[phase_exponent & 3];
  }
};

bool commutes(const PauliString& p, const PauliString& q);

/// Matrix product P*Q = phase * R with R a plain Pauli string.
PhasedPauli product(const PauliString& p, const PauliString& q);

/// Output qubit perm[i] carries input qubit i's letter.
PauliString apply_permutation(const PauliString& p, const Permutation& perm);
pauli_bits apply_permutation_bits(pauli_bits b, const Permutation& perm);

}  // namespace orbitprop
