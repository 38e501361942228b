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

#include "orbitprop/circuit.hpp"
#include "orbitprop/pauli_sum.hpp"

namespace orbitprop {

// Circuit builders convert Hamiltonian prefactors to rotation angles under
// the engine's gate convention exp(-i(angle/2) P): a Trotter factor
// exp(-i delta J P) is the gate (P, 2 delta J), with J carrying the
// Hamiltonian term's sign.

/// Tilted-field Ising chain H = -sum_<ij> Z_i Z_j - h_z sum Z_i - h_x sum X_i
/// on a periodic ring (periodic boundary is required by the translation
/// symmetry and is the only supported boundary).
struct IsingParams {
  int n;
  double h_x;
  double h_z;
  double delta_t;
  int layers;
};

/// Each layer: n ZZ gates on the ring edges, then n Z gates, then n X gates.
/// Every sublayer is internally commuting, so the layer operator is exactly
/// invariant under cyclic shifts (and reflections).
Circuit build_ising_circuit(const IsingParams& p);

/// Power-law XXZ Heisenberg model on an lx-by-ly torus:
/// H = -J_perp sum_{i<j} [X_i X_j + Y_i Y_j + (delta+1) Z_i Z_j] / d_ij^alpha
/// with d_ij the torus minimal-image distance (row-major sites q = y*lx + x).
struct XXZParams {
  int lx;
  int ly;
  double j_perp;
  double delta;
  double alpha;
  double delta_t;
  int layers;
};

/// Each layer holds three letter-major sublayers (all XX pairs, all YY pairs,
/// all ZZ pairs; pairs lexicographic inside each sublayer). Same-letter
/// two-site rotations commute pairwise, so each sublayer -- and hence the
/// layer operator -- is exactly invariant under both torus translations;
/// interleaving the letters per pair would break that invariance and with it
/// the exactness of symmetry merging.
Circuit build_xxz_circuit(const XXZParams& p);

double torus_min_image_distance(int lx, int ly, int site_a, int site_b);

/// Total-spin observable S^2 = sum_mu (sum_i sigma_mu_i)^2 with
/// sigma = P/2, expanded in unnormalized Paulis:
/// (3n/4) I + (1/2) sum_{i<j} (X_i X_j + Y_i Y_j + Z_i Z_j).
PauliSum total_spin_squared(int n);

/// 0-based index of the mid-chain site (1-based ceil(n/2)).
inline int mid_chain_site(int n) { return (n - 1) / 2; }

}  // namespace orbitprop
