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

#include <cmath>
#include <random>

#include "doctest.h"
#include "orbitprop/oracle.hpp"
#include "orbitprop/propagation.hpp"
#include "orbitprop/runner.hpp"

using namespace orbitprop;

TEST_CASE("densify basics") {
  PauliSum ident(1);
  ident.add(PauliString::identity(1), 1.0);
  const DenseOperator id = DenseOperator::densify(ident);
  CHECK(id.at(0, 0) == std::complex<double>(1.0));
  CHECK(id.at(1, 1) == std::complex<double>(1.0));
  CHECK(id.at(0, 1) == std::complex<double>(0.0));

  PauliSum mix(1);
  mix.add(PauliString::from_text("X"), 0.5);
  mix.add(PauliString::from_text("Z"), 0.5);
  const DenseOperator m = DenseOperator::densify(mix);
  CHECK(m.at(0, 0) == std::complex<double>(0.5));
  CHECK(m.at(0, 1) == std::complex<double>(0.5));
  CHECK(m.at(1, 0) == std::complex<double>(0.5));
  CHECK(m.at(1, 1) == std::complex<double>(-0.5));

  // XX squares to the identity and is traceless: the Pauli spectrum.
  PauliSum xx(2);
  xx.add(PauliString::from_text("XX"), 1.0);
  const DenseOperator d = DenseOperator::densify(xx);
  std::complex<double> trace = 0.0;
  for (std::size_t i = 0; i < d.dim(); ++i) trace += d.at(i, i);
  CHECK(std::abs(trace) < 1e-14);
  for (std::size_t r = 0; r < d.dim(); ++r) {
    for (std::size_t c = 0; c < d.dim(); ++c) {
      std::complex<double> entry = 0.0;
      for (std::size_t k = 0; k < d.dim(); ++k) entry += d.at(r, k) * d.at(k, c);
      CHECK(std::abs(entry - (r == c ? 1.0 : 0.0)) < 1e-14);
    }
  }

  CHECK(d.hermiticity_defect() < 1e-12);
  CHECK_THROWS_AS(DenseOperator(11), ResourceError);
}

TEST_CASE("conjugation basics") {
  PauliSum z(1);
  z.add(PauliString::from_text("Z"), 1.0);
  const DenseOperator dz = DenseOperator::densify(z);

  SUBCASE("empty circuit is the identity map") {
    const Circuit c(1);
    CHECK(conjugate_adjoint(dz, c).max_abs_diff(dz) == 0.0);
  }

  SUBCASE("commuting generator leaves the operator untouched") {
    Circuit c(1);
    c.layers.push_back({{PauliRotationGate(PauliString::from_text("Z"), 1.1)}, std::nullopt});
    CHECK(conjugate_adjoint(dz, c).max_abs_diff(dz) < 1e-14);
  }

  SUBCASE("X rotation rotates Z into Y with the engine's sign") {
    const double theta = 0.77;
    Circuit c(1);
    c.layers.push_back({{PauliRotationGate(PauliString::from_text("X"), theta)}, std::nullopt});
    const DenseOperator rotated = conjugate_adjoint(dz, c);
    PauliSum expect(1);
    expect.add(PauliString::from_text("Z"), std::cos(theta));
    expect.add(PauliString::from_text("Y"), std::sin(theta));
    CHECK(rotated.max_abs_diff(DenseOperator::densify(expect)) < 1e-12);
  }
}

TEST_CASE("densify is a homomorphism for gate application") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> angle(-3.0, 3.0);
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 3);
    PauliSum sum(n);
    for (int t = 0; t < 5; ++t) sum.add(random_pauli(n, rng), coeff(rng));
    const PauliRotationGate gate(random_pauli(n, rng), angle(rng));
    Circuit c(n);
    c.layers.push_back({{gate}, std::nullopt});
    const DenseOperator via_engine = DenseOperator::densify(apply_gate_adjoint(sum, gate));
    const DenseOperator via_oracle = conjugate_adjoint(DenseOperator::densify(sum), c);
    CHECK(via_engine.max_abs_diff(via_oracle) < 1e-10);
  }
}

TEST_CASE("oracle noise equals the engine's coefficient damping") {
  std::mt19937_64 rng(29);
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 3;
    PauliSum sum(n);
    for (int t = 0; t < 8; ++t) sum.add(random_pauli(n, rng), coeff(rng));
    sum.add(PauliString::identity(n), 0.25);
    const double gamma = 0.35;
    Circuit noise_only(n);
    noise_only.layers.push_back({{}, NoiseLayer(gamma)});
    const DenseOperator via_oracle =
        conjugate_adjoint(DenseOperator::densify(sum), noise_only);
    const DenseOperator via_engine =
        DenseOperator::densify(apply_noise(sum, NoiseLayer(gamma)));
    CHECK(via_engine.max_abs_diff(via_oracle) < 1e-12);
  }
}

TEST_CASE("expectation basics") {
  PauliSum ident(2);
  ident.add(PauliString::identity(2), 0.3);
  CHECK(exact_expectation(DenseOperator::densify(ident), ProductState::plus_x(2)) ==
        doctest::Approx(0.3));

  PauliSum z(1);
  z.add(PauliString::from_text("Z"), 1.0);
  CHECK(exact_expectation(DenseOperator::densify(z), ProductState::zero_z(1)) ==
        doctest::Approx(1.0));
}

TEST_CASE("engine and oracle agree on random circuits") {
  std::mt19937_64 rng(101);
  PropagationConfig pc;
  pc.merge_policy = MergePolicy::never();
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 4);  // up to n = 5
    PauliSum obs(n);
    obs.add(random_pauli(n, rng), 1.0);
    const Circuit circuit = random_circuit(n, 4, 10, rng);
    const ProductState state =
        trial % 2 == 0 ? ProductState::plus_x(n) : ProductState::zero_z(n);
    const double engine = expectation(propagate(obs, circuit, pc).final_sum, state);
    const double exact = exact_expectation(
        conjugate_adjoint(DenseOperator::densify(obs), circuit), state);
    worst = std::max(worst, std::abs(engine - exact));
  }
  CHECK(worst < 1e-8);
}

TEST_CASE("mixed product states agree between engine and oracle") {
  std::mt19937_64 rng(55);
  const int n = 3;
  PauliSum obs(n);
  obs.add(random_pauli(n, rng), 0.8);
  obs.add(random_pauli(n, rng), -0.4);
  const Circuit circuit = random_circuit(n, 3, 8, rng);
  const ProductState state = ProductState::uniform_bloch(n, {0.3, -0.2, 0.4});
  PropagationConfig pc;
  pc.merge_policy = MergePolicy::never();
  const double engine = expectation(propagate(obs, circuit, pc).final_sum, state);
  const double exact =
      exact_expectation(conjugate_adjoint(DenseOperator::densify(obs), circuit), state);
  CHECK(engine == doctest::Approx(exact).epsilon(1e-10));
}
