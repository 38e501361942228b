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

#include "orbitprop/models.hpp"

#include <cmath>

namespace orbitprop {

Circuit build_ising_circuit(const IsingParams& p) {
  if (p.n < 3) throw ValidationError("ising: n must be >= 3");
  if (p.n > kMaxQubits) throw ValidationError("ising: n exceeds 64 qubits");
  if (!(p.delta_t > 0.0)) throw ValidationError("ising: delta_t must be > 0");
  if (p.layers < 0) throw ValidationError("ising: layers must be >= 0");

  Circuit circuit(p.n);
  circuit.time_step = p.delta_t;
  CircuitLayer layer;
  layer.gates.reserve(3 * static_cast<std::size_t>(p.n));
  // Hamiltonian prefactors are -1, -h_z, -h_x.
  const double zz_angle = -2.0 * p.delta_t;
  const double z_angle = -2.0 * p.h_z * p.delta_t;
  const double x_angle = -2.0 * p.h_x * p.delta_t;
  for (int i = 0; i < p.n; ++i) {
    const int j = (i + 1) % p.n;
    pauli_bits b = (pauli_bits{3} << (2 * i)) | (pauli_bits{3} << (2 * j));
    layer.gates.emplace_back(PauliString(b, p.n), zz_angle);
  }
  // Zero fields contribute identity rotations; leave them out entirely.
  if (z_angle != 0.0) {
    for (int i = 0; i < p.n; ++i) {
      layer.gates.emplace_back(PauliString::single(p.n, i, Pauli::Z), z_angle);
    }
  }
  if (x_angle != 0.0) {
    for (int i = 0; i < p.n; ++i) {
      layer.gates.emplace_back(PauliString::single(p.n, i, Pauli::X), x_angle);
    }
  }
  circuit.layers.assign(static_cast<std::size_t>(p.layers), layer);
  return circuit;
}

double torus_min_image_distance(int lx, int ly, int site_a, int site_b) {
  if (lx < 1 || ly < 1) throw ValidationError("torus distance: lx, ly must be >= 1");
  const int n = lx * ly;
  if (site_a < 0 || site_a >= n || site_b < 0 || site_b >= n) {
    throw ValidationError("torus distance: site index out of range");
  }
  const int xa = site_a % lx, ya = site_a / lx;
  const int xb = site_b % lx, yb = site_b / lx;
  const int ax = std::abs(xa - xb), ay = std::abs(ya - yb);
  const int dx = std::min(ax, lx - ax);
  const int dy = std::min(ay, ly - ay);
  return std::sqrt(static_cast<double>(dx * dx + dy * dy));
}

Circuit build_xxz_circuit(const XXZParams& p) {
  if (p.lx < 1 || p.ly < 1) throw ValidationError("xxz: lx, ly must be >= 1");
  const int n = p.lx * p.ly;
  if (n > kMaxQubits) throw ValidationError("xxz: lx*ly exceeds 64 qubits");
  if (!(p.alpha >= 0.0)) throw ValidationError("xxz: alpha must be >= 0");
  if (!(p.delta_t > 0.0)) throw ValidationError("xxz: delta_t must be > 0");
  if (p.layers < 0) throw ValidationError("xxz: layers must be >= 0");

  Circuit circuit(n);
  circuit.time_step = p.delta_t;
  CircuitLayer layer;
  static constexpr Pauli kLetters[3] = {Pauli::X, Pauli::Y, Pauli::Z};
  for (Pauli letter : kLetters) {
    const double fac = letter == Pauli::Z ? p.delta + 1.0 : 1.0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        const double d = torus_min_image_distance(p.lx, p.ly, i, j);
        if (d == 0.0) throw ValidationError("xxz: duplicate sites (zero distance)");
        const double coupling = -p.j_perp * fac / std::pow(d, p.alpha);
        const double angle = 2.0 * p.delta_t * coupling;
        const unsigned code = static_cast<unsigned>(letter);
        pauli_bits b = (pauli_bits{code} << (2 * i)) | (pauli_bits{code} << (2 * j));
        layer.gates.emplace_back(PauliString(b, n), angle);
      }
    }
  }
  circuit.layers.assign(static_cast<std::size_t>(p.layers), layer);
  return circuit;
}

PauliSum total_spin_squared(int n) {
  if (n < 1 || n > kMaxQubits) throw ValidationError("total_spin_squared: n must be in [1, 64]");
  std::vector<PauliSum::Term> terms;
  terms.reserve(1 + 3 * static_cast<std::size_t>(n) * (n - 1) / 2);
  terms.push_back({pauli_bits{0}, 0.75 * n});
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (unsigned code = 1; code <= 3; ++code) {
        terms.push_back({(pauli_bits{code} << (2 * i)) | (pauli_bits{code} << (2 * j)), 0.5});
      }
    }
  }
  std::sort(terms.begin(), terms.end(),
            [](const PauliSum::Term& a, const PauliSum::Term& b) { return a.bits < b.bits; });
  return PauliSum::adopt(n, std::move(terms));
}

}  // namespace orbitprop
