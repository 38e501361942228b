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

#include "orbitprop/oracle.hpp"

#include <cmath>
#include <stdexcept>

namespace orbitprop {

namespace {

constexpr int kOracleMaxQubits = 10;

// P|j> = phase(j) |j ^ xmask>: xmask flags X/Y sites, the phase collects
// i(-1)^bit from Y sites and (-1)^bit from Z sites.
struct SparsePauli {
  std::size_t xmask = 0;
  std::vector<std::complex<double>> phase;

  SparsePauli(pauli_bits b, int n) : phase(std::size_t{1} << n, {1.0, 0.0}) {
    for (int q = 0; q < n; ++q) {
      const unsigned code = static_cast<unsigned>(b >> (2 * q)) & 3u;
      if (code == 1 || code == 2) xmask |= std::size_t{1} << q;
    }
    const std::size_t dim = phase.size();
    for (std::size_t j = 0; j < dim; ++j) {
      std::complex<double> f = 1.0;
      for (int q = 0; q < n; ++q) {
        const unsigned code = static_cast<unsigned>(b >> (2 * q)) & 3u;
        const bool bit = (j >> q) & 1u;
        if (code == 2) f *= bit ? std::complex<double>(0.0, -1.0) : std::complex<double>(0.0, 1.0);
        else if (code == 3 && bit) f = -f;
      }
      phase[j] = f;
    }
  }
};

void check_oracle_size(int n) {
  if (n > kOracleMaxQubits) {
    throw ResourceError("dense oracle limited to n <= 10 qubits, got n = " + std::to_string(n));
  }
}

DenseOperator conjugate_gate(const DenseOperator& op, const PauliRotationGate& gate) {
  const int n = op.n_qubits();
  const std::size_t dim = op.dim();
  const SparsePauli p(gate.generator.bits(), n);
  const double c = std::cos(gate.angle / 2.0);
  const double s = std::sin(gate.angle / 2.0);
  const std::complex<double> ics(0.0, c * s);
  DenseOperator out(n);
  // U^dag O U = c^2 O + s^2 P O P + i c s (P O - O P)
  for (std::size_t r = 0; r < dim; ++r) {
    const std::size_t rp = r ^ p.xmask;
    const std::complex<double> phi_r = p.phase[rp];
    for (std::size_t col = 0; col < dim; ++col) {
      const std::size_t cp = col ^ p.xmask;
      const std::complex<double> po = phi_r * op.at(rp, col);
      const std::complex<double> opm = op.at(r, cp) * p.phase[col];
      out.at(r, col) = c * c * op.at(r, col) + s * s * phi_r * op.at(rp, cp) * p.phase[col] +
                       ics * (po - opm);
    }
  }
  return out;
}

DenseOperator damp_noise(const DenseOperator& op, double gamma) {
  const int n = op.n_qubits();
  const std::size_t dim = op.dim();
  const pauli_bits n_strings = pauli_bits{1} << (2 * n);
  DenseOperator out(n);
  const double inv_dim = 1.0 / static_cast<double>(dim);
  for (pauli_bits b = 0; b < n_strings; ++b) {
    const SparsePauli p(b, n);
    // Coefficient in the unnormalized Pauli basis: Tr[P O] / 2^n.
    std::complex<double> tr = 0.0;
    for (std::size_t j = 0; j < dim; ++j) {
      const std::size_t jp = j ^ p.xmask;
      tr += p.phase[jp] * op.at(jp, j);
    }
    const std::complex<double> coeff = tr * inv_dim;
    if (coeff == std::complex<double>(0.0, 0.0)) continue;
    const double damp = std::exp(-gamma * bits::weight(b));
    for (std::size_t j = 0; j < dim; ++j) {
      out.at(j ^ p.xmask, j) += coeff * damp * p.phase[j];
    }
  }
  return out;
}

}  // namespace

DenseOperator::DenseOperator(int n_qubits)
    : n_qubits_(n_qubits), dim_(std::size_t{1} << n_qubits) {
  if (n_qubits < 1) throw ValidationError("DenseOperator: n_qubits must be >= 1");
  check_oracle_size(n_qubits);
  m_.assign(dim_ * dim_, {0.0, 0.0});
}

DenseOperator DenseOperator::densify(const PauliSum& sum) {
  check_oracle_size(sum.n_qubits());
  DenseOperator out(sum.n_qubits());
  for (const PauliSum::Term& t : sum.terms()) {
    const SparsePauli p(t.bits, sum.n_qubits());
    for (std::size_t j = 0; j < out.dim_; ++j) {
      out.at(j ^ p.xmask, j) += t.coeff * p.phase[j];
    }
  }
  return out;
}

double DenseOperator::max_abs_diff(const DenseOperator& other) const {
  if (dim_ != other.dim_) throw ValidationError("max_abs_diff: dimension mismatch");
  double m = 0.0;
  for (std::size_t i = 0; i < m_.size(); ++i) {
    m = std::max(m, std::abs(m_[i] - other.m_[i]));
  }
  return m;
}

double DenseOperator::hermiticity_defect() const {
  double m = 0.0;
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t c = 0; c < dim_; ++c) {
      m = std::max(m, std::abs(at(r, c) - std::conj(at(c, r))));
    }
  }
  return m;
}

DenseOperator conjugate_adjoint(const DenseOperator& op, const Circuit& circuit) {
  if (circuit.n_qubits != op.n_qubits()) {
    throw ValidationError("conjugate_adjoint: qubit count mismatch");
  }
  check_oracle_size(op.n_qubits());
  circuit.validate();
  DenseOperator cur = op;
  for (auto layer = circuit.layers.rbegin(); layer != circuit.layers.rend(); ++layer) {
    for (auto gate = layer->gates.rbegin(); gate != layer->gates.rend(); ++gate) {
      cur = conjugate_gate(cur, *gate);
    }
    if (layer->noise.has_value() && layer->noise->gamma != 0.0) {
      cur = damp_noise(cur, layer->noise->gamma);
    }
  }
  return cur;
}

double exact_expectation(const DenseOperator& op, const ProductState& state) {
  if (state.n_qubits() != op.n_qubits()) {
    throw ValidationError("exact_expectation: qubit count mismatch");
  }
  const int n = op.n_qubits();
  const std::size_t dim = op.dim();
  // rho[j][k] = prod_i rho_i[bit_i(j)][bit_i(k)], qubit 0 least significant.
  std::vector<std::complex<double>> rho(dim * dim);
  for (std::size_t j = 0; j < dim; ++j) {
    for (std::size_t k = 0; k < dim; ++k) {
      std::complex<double> v = 1.0;
      for (int q = 0; q < n; ++q) {
        const auto& r = state.bloch(q);
        const bool bj = (j >> q) & 1u;
        const bool bk = (k >> q) & 1u;
        std::complex<double> e;
        if (!bj && !bk) e = 0.5 * (1.0 + r[2]);
        else if (!bj && bk) e = 0.5 * std::complex<double>(r[0], -r[1]);
        else if (bj && !bk) e = 0.5 * std::complex<double>(r[0], r[1]);
        else e = 0.5 * (1.0 - r[2]);
        v *= e;
        if (v == std::complex<double>(0.0, 0.0)) break;
      }
      rho[j * dim + k] = v;
    }
  }
  std::complex<double> tr = 0.0;
  for (std::size_t j = 0; j < dim; ++j) {
    for (std::size_t k = 0; k < dim; ++k) {
      tr += rho[j * dim + k] * op.at(k, j);
    }
  }
  if (std::abs(tr.imag()) > 1e-10) {
    throw std::logic_error("exact_expectation: imaginary part " + std::to_string(tr.imag()) +
                           " exceeds tolerance (convention bug)");
  }
  return tr.real();
}

}  // namespace orbitprop
