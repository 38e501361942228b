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

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "orbitprop/models.hpp"
#include "orbitprop/oracle.hpp"
#include "orbitprop/propagation.hpp"

using namespace orbitprop;

namespace {

// Multiset view of a layer for structural symmetry checks.
std::multiset<std::pair<std::string, double>> layer_multiset(const CircuitLayer& layer) {
  std::multiset<std::pair<std::string, double>> out;
  for (const auto& g : layer.gates) out.insert({g.generator.to_text(), g.angle});
  return out;
}

bool layer_invariant_under(const CircuitLayer& layer, const Permutation& perm) {
  std::multiset<std::pair<std::string, double>> mapped;
  for (const auto& g : layer.gates) {
    mapped.insert({apply_permutation(g.generator, perm).to_text(), g.angle});
  }
  return mapped == layer_multiset(layer);
}

}  // namespace

TEST_CASE("ising circuit structure") {
  const Circuit c = build_ising_circuit({4, 1.4, 0.9045, 0.25, 3});
  CHECK(c.layers.size() == 3);
  CHECK(c.layers[0].gates.size() == 12);  // 4 ZZ + 4 Z + 4 X
  CHECK(c.time_step == 0.25);

  // Angles follow the gate convention: Trotter factor exp(-i d J P) with the
  // Hamiltonian prefactors -1, -h_z, -h_x.
  CHECK(c.layers[0].gates[0].angle == doctest::Approx(-0.5));
  CHECK(c.layers[0].gates[4].angle == doctest::Approx(-2.0 * 0.9045 * 0.25));
  CHECK(c.layers[0].gates[8].angle == doctest::Approx(-2.0 * 1.4 * 0.25));

  CHECK_THROWS_AS(build_ising_circuit({2, 1.0, 1.0, 0.1, 1}), ValidationError);
  CHECK_THROWS_AS(build_ising_circuit({4, 1.0, 1.0, 0.0, 1}), ValidationError);
}

TEST_CASE("ising layer is invariant under the ring symmetries") {
  const Circuit c = build_ising_circuit({5, 1.4, 0.9045, 0.25, 1});
  for (int j = 0; j < 5; ++j) {
    CHECK(layer_invariant_under(c.layers[0], Permutation::cyclic_shift(5, j)));
  }
  CHECK(layer_invariant_under(c.layers[0], Permutation::reversal(5)));
}

TEST_CASE("zero fields leave only the couplings") {
  const Circuit c = build_ising_circuit({4, 0.0, 0.0, 0.25, 2});
  CHECK(c.layers[0].gates.size() == 4);
  for (const auto& g : c.layers[0].gates) CHECK(g.generator.weight() == 2);

  // Z commutes with every ZZ generator, so the observable never branches.
  PauliSum obs(4);
  obs.add(PauliString::single(4, 1, Pauli::Z), 1.0);
  PropagationConfig pc;
  pc.merge_policy = MergePolicy::never();
  const PropagationTrace trace = propagate(obs, c, pc);
  for (const auto& row : trace.rows) CHECK(row.n_terms == 1);
}

TEST_CASE("integrable-point growth stays polynomial for the bilinear observable") {
  // At h_z = 0 the chain maps to free fermions; a mid-chain X is a Majorana
  // bilinear there, so its propagation stays inside the O(n^2)-dimensional
  // quadratic space (a mid-chain Z is a string operator and explores
  // exponentially many Paulis instead).
  for (int n : {6, 8, 10}) {
    const Circuit c = build_ising_circuit({n, 1.4, 0.0, 0.25, 12});
    PauliSum obs(n);
    obs.add(PauliString::single(n, mid_chain_site(n), Pauli::X), 1.0);
    PropagationConfig pc;
    pc.merge_policy = MergePolicy::never();
    const PropagationTrace trace = propagate(obs, c, pc);
    for (const auto& row : trace.rows) {
      CHECK(row.n_terms <= static_cast<std::size_t>(4 * n * n));
    }
  }
}

TEST_CASE("xxz circuit structure") {
  const XXZParams params{3, 3, 1.0, -1.8, 3.0, 0.05, 2};
  const Circuit c = build_xxz_circuit(params);
  CHECK(c.layers.size() == 2);
  CHECK(c.layers[0].gates.size() == 108);  // C(9,2) pairs x 3 letters
  CHECK(c.time_step == 0.05);

  // Per-pair ZZ/XX angle ratio is delta + 1 for every pair at any alpha.
  std::map<std::string, double> xx_angle, zz_angle;
  for (const auto& g : c.layers[0].gates) {
    std::string support;
    Pauli letter = Pauli::I;
    for (int q = 0; q < 9; ++q) {
      if (g.generator.letter(q) != Pauli::I) {
        support += std::to_string(q) + ",";
        letter = g.generator.letter(q);
      }
    }
    if (letter == Pauli::X) xx_angle[support] = g.angle;
    if (letter == Pauli::Z) zz_angle[support] = g.angle;
  }
  CHECK(xx_angle.size() == 36);
  for (const auto& [support, angle] : xx_angle) {
    CHECK(zz_angle.at(support) == doctest::Approx((params.delta + 1.0) * angle));
  }
}

TEST_CASE("xxz couplings are uniform at alpha zero and isotropic at delta zero") {
  const Circuit uniform = build_xxz_circuit({3, 2, 1.0, 0.7, 0.0, 0.1, 1});
  // Letter-major layout: the first C(6,2) gates are the XX sublayer.
  std::set<double> xx_angles;
  const int pairs = 6 * 5 / 2;
  for (int i = 0; i < pairs; ++i) xx_angles.insert(uniform.layers[0].gates[i].angle);
  CHECK(xx_angles.size() == 1);

  const Circuit iso = build_xxz_circuit({2, 2, 1.0, 0.0, 3.0, 0.1, 1});
  const int iso_pairs = 4 * 3 / 2;
  for (int i = 0; i < iso_pairs; ++i) {
    CHECK(iso.layers[0].gates[i].angle ==
          doctest::Approx(iso.layers[0].gates[i + 2 * iso_pairs].angle));
  }
}

TEST_CASE("xxz layer is invariant under both torus translations") {
  const Circuit c = build_xxz_circuit({3, 3, 1.0, -1.8, 3.0, 0.05, 1});
  const SymmetryGroup group = SymmetryGroup::translation_2d(3, 3);
  for (const Permutation& g : group.elements()) {
    CHECK(layer_invariant_under(c.layers[0], g));
  }
}

TEST_CASE("xxz letter-major sublayers commute internally") {
  // This is what makes each layer exactly symmetric as an operator: the
  // sublayer products are order-independent.
  const Circuit c = build_xxz_circuit({2, 2, 1.0, -1.8, 2.0, 0.05, 1});
  const auto& gates = c.layers[0].gates;
  const int pairs = 4 * 3 / 2;
  for (int block = 0; block < 3; ++block) {
    for (int a = 0; a < pairs; ++a) {
      for (int b = a + 1; b < pairs; ++b) {
        CHECK(commutes(gates[block * pairs + a].generator,
                       gates[block * pairs + b].generator));
      }
    }
  }
}

TEST_CASE("torus minimal-image distance") {
  CHECK(torus_min_image_distance(3, 3, 0, 1) == doctest::Approx(1.0));
  CHECK(torus_min_image_distance(3, 3, 0, 2) == doctest::Approx(1.0));  // wraps
  CHECK(torus_min_image_distance(3, 3, 0, 4) == doctest::Approx(std::sqrt(2.0)));
  CHECK(torus_min_image_distance(3, 3, 0, 8) == doctest::Approx(std::sqrt(2.0)));
  CHECK(torus_min_image_distance(1, 2, 0, 1) == doctest::Approx(1.0));
}

TEST_CASE("total spin squared") {
  const PauliSum s1 = total_spin_squared(1);
  CHECK(s1.size() == 1);
  CHECK(s1.coefficient(PauliString::identity(1)) == 0.75);

  const PauliSum s2 = total_spin_squared(2);
  CHECK(s2.size() == 4);
  CHECK(s2.coefficient(PauliString::identity(2)) == 1.5);
  for (const char* text : {"XX", "YY", "ZZ"}) {
    CHECK(s2.coefficient(PauliString::from_text(text)) == 0.5);
  }

  for (int n : {3, 5, 9}) {
    CHECK(total_spin_squared(n).size() ==
          1 + 3 * static_cast<std::size_t>(n) * (n - 1) / 2);
  }
}

TEST_CASE("total spin squared is permutation invariant") {
  std::mt19937_64 rng(17);
  const int n = 6;
  const PauliSum s2 = total_spin_squared(n);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<std::uint8_t> im(n);
    for (int i = 0; i < n; ++i) im[i] = static_cast<std::uint8_t>(i);
    std::shuffle(im.begin(), im.end(), rng);
    const Permutation perm(im);
    PauliSum mapped(n);
    for (const auto& t : s2.terms()) {
      mapped.add(apply_permutation(PauliString(t.bits, n), perm), t.coeff);
    }
    CHECK(mapped == s2);
  }
}

TEST_CASE("total spin expectation on the x-polarized state is n(n+2)/4") {
  for (int n = 1; n <= 6; ++n) {
    const PauliSum s2 = total_spin_squared(n);
    const ProductState plus = ProductState::plus_x(n);
    const double expected = n * (n + 2) / 4.0;
    CHECK(expectation(s2, plus) == doctest::Approx(expected).epsilon(1e-12));
    // Dense-oracle cross-check.
    CHECK(exact_expectation(DenseOperator::densify(s2), plus) ==
          doctest::Approx(expected).epsilon(1e-12));
  }
}

TEST_CASE("state overlaps") {
  CHECK(overlap(ProductState::plus_x(3), PauliString::from_text("IXI")) == 1.0);
  CHECK(overlap(ProductState::zero_z(2), PauliString::from_text("ZZ")) == 1.0);
  CHECK(overlap(ProductState::uniform_bloch(1, {0.6, 0.0, 0.8}),
                PauliString::from_text("X")) == doctest::Approx(0.6));
  CHECK(overlap(ProductState::plus_x(2), PauliString::from_text("IZ")) == 0.0);
  CHECK_THROWS_AS(ProductState::uniform_bloch(2, {1.0, 1.0, 0.0}), ValidationError);
}

TEST_CASE("mid-chain site follows the 1-based ceiling convention") {
  CHECK(mid_chain_site(3) == 1);
  CHECK(mid_chain_site(4) == 1);
  CHECK(mid_chain_site(5) == 2);
  CHECK(mid_chain_site(6) == 2);
  CHECK(mid_chain_site(9) == 4);
}
