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

#include "orbitprop/pauli.hpp"

#include <algorithm>
#include <array>

namespace orbitprop {

namespace {

constexpr pauli_bits kLowBits =
    (pauli_bits{0x5555555555555555ULL} << 64) | pauli_bits{0x5555555555555555ULL};

inline int popcount128(pauli_bits v) {
  return __builtin_popcountll(static_cast<std::uint64_t>(v)) +
         __builtin_popcountll(static_cast<std::uint64_t>(v >> 64));
}

// Collapses each 2-bit site to bit 0 of the site: nonzero-code indicator.
inline pauli_bits nonzero_sites(pauli_bits b) { return (b | (b >> 1)) & kLowBits; }

// phase_table[a][b] = k such that a * b = i^k (a ^ b) for single-site codes.
// XY = iZ, YZ = iX, ZX = iY and the reversed orders pick up i^3.
constexpr std::uint8_t kPhaseTable[4][4] = {
    {0, 0, 0, 0},
    {0, 0, 1, 3},
    {0, 3, 0, 1},
    {0, 1, 3, 0},
};

inline pauli_bits full_mask(int n_qubits) {
  if (n_qubits == kMaxQubits) return ~pauli_bits{0};
  return (pauli_bits{1} << (2 * n_qubits)) - 1;
}

}  // namespace

std::string to_decimal(pauli_bits v) {
  if (v == 0) return "0";
  std::string out;
  while (v != 0) {
    out.push_back(static_cast<char>('0' + static_cast<unsigned>(v % 10)));
    v /= 10;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

pauli_bits parse_decimal_u128(std::string_view text) {
  if (text.empty()) throw ValidationError("empty integer literal");
  pauli_bits v = 0;
  for (char c : text) {
    if (c < '0' || c > '9') {
      throw ValidationError("invalid integer literal: " + std::string(text));
    }
    pauli_bits next = v * 10 + static_cast<unsigned>(c - '0');
    if (next < v) throw OverflowError("integer literal exceeds 128 bits");
    v = next;
  }
  return v;
}

namespace bits {

int weight(pauli_bits b) { return popcount128(nonzero_sites(b)); }

bool commute(pauli_bits a, pauli_bits b) {
  // Sites where both are non-identity and differ.
  const pauli_bits clash = nonzero_sites(a) & nonzero_sites(b) & nonzero_sites(a ^ b);
  return (popcount128(clash) & 1) == 0;
}

int phase_exponent(pauli_bits a, pauli_bits b) {
  int k = 0;
  // Indicator bits sit at position 2*site, so the shift below lands on the
  // site's 2-bit code directly.
  pauli_bits support = nonzero_sites(a) & nonzero_sites(b);
  while (support != 0) {
    const std::uint64_t lo = static_cast<std::uint64_t>(support);
    const int s = lo != 0 ? __builtin_ctzll(lo)
                          : 64 + __builtin_ctzll(static_cast<std::uint64_t>(support >> 64));
    const unsigned ca = static_cast<unsigned>(a >> s) & 3u;
    const unsigned cb = static_cast<unsigned>(b >> s) & 3u;
    k += kPhaseTable[ca][cb];
    support &= support - 1;
  }
  return k & 3;
}

pauli_bits rotate_sites(pauli_bits b, int amount, int n_qubits) {
  const int n = n_qubits;
  int a = ((amount % n) + n) % n;
  if (a == 0) return b;
  const int s = 2 * a;
  const int w = 2 * n;
  return ((b << s) | (b >> (w - s))) & full_mask(n);
}

}  // namespace bits

Permutation::Permutation(std::vector<std::uint8_t> image) : image_(std::move(image)) {
  const std::size_t n = image_.size();
  if (n == 0 || n > static_cast<std::size_t>(kMaxQubits)) {
    throw ValidationError("permutation size must be in [1, 64]");
  }
  std::vector<bool> seen(n, false);
  for (std::uint8_t v : image_) {
    if (v >= n || seen[v]) throw ValidationError("permutation is not a bijection");
    seen[v] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<std::uint8_t> im(n);
  for (int i = 0; i < n; ++i) im[i] = static_cast<std::uint8_t>(i);
  return Permutation(std::move(im));
}

Permutation Permutation::cyclic_shift(int n, int amount) {
  std::vector<std::uint8_t> im(n);
  const int a = ((amount % n) + n) % n;
  for (int i = 0; i < n; ++i) im[i] = static_cast<std::uint8_t>((i + a) % n);
  return Permutation(std::move(im));
}

Permutation Permutation::reversal(int n) {
  std::vector<std::uint8_t> im(n);
  for (int i = 0; i < n; ++i) im[i] = static_cast<std::uint8_t>(n - 1 - i);
  return Permutation(std::move(im));
}

Permutation Permutation::compose(const Permutation& other) const {
  if (size() != other.size()) throw ValidationError("composing permutations of different sizes");
  std::vector<std::uint8_t> im(image_.size());
  for (int i = 0; i < size(); ++i) im[i] = image_[other.image_[i]];
  return Permutation(std::move(im));
}

Permutation Permutation::inverse() const {
  std::vector<std::uint8_t> im(image_.size());
  for (int i = 0; i < size(); ++i) im[image_[i]] = static_cast<std::uint8_t>(i);
  return Permutation(std::move(im));
}

int Permutation::cycle_count() const {
  const int n = size();
  std::vector<bool> seen(n, false);
  int cycles = 0;
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    ++cycles;
    int j = i;
    while (!seen[j]) {
      seen[j] = true;
      j = image_[j];
    }
  }
  return cycles;
}

PauliString::PauliString(pauli_bits bits, int n_qubits) : bits_(bits), n_qubits_(n_qubits) {
  if (n_qubits < 1 || n_qubits > kMaxQubits) {
    throw ValidationError("n_qubits must be in [1, 64]");
  }
  if (n_qubits < kMaxQubits && (bits >> (2 * n_qubits)) != 0) {
    throw ValidationError("Pauli bits set above position 2n-1");
  }
}

PauliString PauliString::from_text(std::string_view text) {
  std::vector<Pauli> letters;
  letters.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case 'I': letters.push_back(Pauli::I); break;
      case 'X': letters.push_back(Pauli::X); break;
      case 'Y': letters.push_back(Pauli::Y); break;
      case 'Z': letters.push_back(Pauli::Z); break;
      default:
        throw ValidationError(std::string("invalid Pauli letter '") + c + "'");
    }
  }
  return from_letters(letters);
}

PauliString PauliString::from_letters(const std::vector<Pauli>& letters) {
  if (letters.empty() || letters.size() > static_cast<std::size_t>(kMaxQubits)) {
    throw ValidationError("Pauli letter sequence length must be in [1, 64]");
  }
  pauli_bits b = 0;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    b |= pauli_bits{static_cast<unsigned>(letters[i])} << (2 * i);
  }
  return PauliString(b, static_cast<int>(letters.size()));
}

PauliString PauliString::single(int n_qubits, int site, Pauli p) {
  if (site < 0 || site >= n_qubits) throw ValidationError("site index out of range");
  return PauliString(pauli_bits{static_cast<unsigned>(p)} << (2 * site), n_qubits);
}

Pauli PauliString::letter(int site) const {
  if (site < 0 || site >= n_qubits_) throw ValidationError("site index out of range");
  return bits::letter(bits_, site);
}

std::string PauliString::to_text() const {
  std::string out(n_qubits_, 'I');
  static constexpr char kNames[4] = {'I', 'X', 'Y', 'Z'};
  for (int i = 0; i < n_qubits_; ++i) {
    out[i] = kNames[static_cast<unsigned>(bits_ >> (2 * i)) & 3u];
  }
  return out;
}

bool commutes(const PauliString& p, const PauliString& q) {
  if (p.n_qubits() != q.n_qubits()) {
    throw ValidationError("commutes: qubit-count mismatch");
  }
  return bits::commute(p.bits(), q.bits());
}

PhasedPauli product(const PauliString& p, const PauliString& q) {
  if (p.n_qubits() != q.n_qubits()) {
    throw ValidationError("product: qubit-count mismatch");
  }
  const int k = bits::phase_exponent(p.bits(), q.bits());
  return PhasedPauli{PauliString(p.bits() ^ q.bits(), p.n_qubits()),
                     static_cast<std::uint8_t>(k)};
}

pauli_bits apply_permutation_bits(pauli_bits b, const Permutation& perm) {
  pauli_bits out = 0;
  const int n = perm.size();
  for (int i = 0; i < n; ++i) {
    out |= ((b >> (2 * i)) & 3u) << (2 * perm[i]);
  }
  return out;
}

PauliString apply_permutation(const PauliString& p, const Permutation& perm) {
  if (perm.size() != p.n_qubits()) {
    throw ValidationError("apply_permutation: size mismatch");
  }
  return PauliString(apply_permutation_bits(p.bits(), perm), p.n_qubits());
}

}  // namespace orbitprop
