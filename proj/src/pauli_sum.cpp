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

#include "orbitprop/pauli_sum.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

namespace orbitprop {

PauliSum::PauliSum(int n_qubits) : n_qubits_(n_qubits) {
  if (n_qubits < 1 || n_qubits > kMaxQubits) {
    throw ValidationError("PauliSum: n_qubits must be in [1, 64]");
  }
}

PauliSum::PauliSum(int n_qubits, std::vector<Term> sorted_terms)
    : n_qubits_(n_qubits), terms_(std::move(sorted_terms)) {
  if (n_qubits < 1 || n_qubits > kMaxQubits) {
    throw ValidationError("PauliSum: n_qubits must be in [1, 64]");
  }
}

PauliSum PauliSum::from_terms(int n_qubits,
                              const std::vector<std::pair<PauliString, double>>& terms) {
  PauliSum sum(n_qubits);
  for (const auto& [p, c] : terms) sum.add(p, c);
  return sum;
}

void PauliSum::add(const PauliString& p, double c) {
  if (p.n_qubits() != n_qubits_) throw ValidationError("PauliSum::add: size mismatch");
  const pauli_bits key = p.bits();
  auto it = std::lower_bound(terms_.begin(), terms_.end(), key,
                             [](const Term& t, pauli_bits k) { return t.bits < k; });
  if (it != terms_.end() && it->bits == key) {
    it->coeff += c;
    if (it->coeff == 0.0) terms_.erase(it);
  } else if (c != 0.0) {
    terms_.insert(it, Term{key, c});
  }
}

double PauliSum::coefficient(const PauliString& p) const {
  if (p.n_qubits() != n_qubits_) throw ValidationError("PauliSum::coefficient: size mismatch");
  const pauli_bits key = p.bits();
  auto it = std::lower_bound(terms_.begin(), terms_.end(), key,
                             [](const Term& t, pauli_bits k) { return t.bits < k; });
  return (it != terms_.end() && it->bits == key) ? it->coeff : 0.0;
}

double PauliSum::sum_abs() const {
  double s = 0.0;
  for (const Term& t : terms_) s += std::abs(t.coeff);
  return s;
}

double PauliSum::sum_squares() const {
  double s = 0.0;
  for (const Term& t : terms_) s += t.coeff * t.coeff;
  return s;
}

void PauliSum::write_snapshot(std::ostream& os) const {
  char buf[64];
  for (const Term& t : terms_) {
    std::snprintf(buf, sizeof(buf), "%.17g", t.coeff);
    os << to_decimal(t.bits) << ' ' << buf << '\n';
  }
}

PauliSum PauliSum::read_snapshot(std::istream& is, int n_qubits) {
  PauliSum sum(n_qubits);
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string key_text;
    double coeff = 0.0;
    if (!(ls >> key_text >> coeff)) throw ValidationError("malformed snapshot line: " + line);
    const pauli_bits key = parse_decimal_u128(key_text);
    if (n_qubits < kMaxQubits && (key >> (2 * n_qubits)) != 0) {
      throw ValidationError("snapshot key exceeds 2n bits: " + key_text);
    }
    if (!sum.terms_.empty() && sum.terms_.back().bits >= key) {
      throw ValidationError("snapshot keys not strictly ascending");
    }
    if (coeff != 0.0) sum.terms_.push_back(Term{key, coeff});
  }
  return sum;
}

bool PauliSum::operator==(const PauliSum& other) const {
  if (n_qubits_ != other.n_qubits_ || terms_.size() != other.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].bits != other.terms_[i].bits || terms_[i].coeff != other.terms_[i].coeff) {
      return false;
    }
  }
  return true;
}

}  // namespace orbitprop
