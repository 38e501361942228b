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

#include "orbitprop/propagation.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <thread>

namespace orbitprop {

namespace {

using Term = PauliSum::Term;

// Contiguous chunking; results are concatenated in chunk order, so the final
// sequence equals the single-threaded one no matter how many workers ran.
template <typename Fn>
void run_chunks(std::size_t n, int threads, Fn&& fn) {
  const std::size_t min_per_chunk = 2048;
  std::size_t n_chunks = 1;
  if (threads > 1 && n > min_per_chunk) {
    n_chunks = std::min<std::size_t>(threads, (n + min_per_chunk - 1) / min_per_chunk);
  }
  if (n_chunks <= 1) {
    fn(0, 0, n);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(n_chunks);
  const std::size_t per = (n + n_chunks - 1) / n_chunks;
  for (std::size_t c = 0; c < n_chunks; ++c) {
    const std::size_t lo = c * per;
    const std::size_t hi = std::min(n, lo + per);
    if (lo >= hi) break;
    pool.emplace_back([&fn, c, lo, hi] { fn(c, lo, hi); });
  }
  for (auto& t : pool) t.join();
}

std::size_t chunk_count(std::size_t n, int threads) {
  const std::size_t min_per_chunk = 2048;
  std::size_t n_chunks = 1;
  if (threads > 1 && n > min_per_chunk) {
    n_chunks = std::min<std::size_t>(threads, (n + min_per_chunk - 1) / min_per_chunk);
  }
  return std::max<std::size_t>(1, n_chunks);
}

// Merge three key-sorted streams: untouched pass-through terms, cos-scaled
// terms, and freshly created terms (the latter may collide with either).
// Touched keys are accumulated base-first then new-entries in stable order
// and dropped when the accumulated magnitude is numerically zero.
std::vector<Term> merge_streams(const std::vector<Term>& pass, const std::vector<Term>& scaled,
                                const std::vector<Term>& fresh) {
  std::vector<Term> out;
  out.reserve(pass.size() + scaled.size() + fresh.size());
  std::size_t ip = 0, is = 0, im = 0;
  while (ip < pass.size() || is < scaled.size() || im < fresh.size()) {
    pauli_bits key = ~pauli_bits{0};
    if (ip < pass.size()) key = std::min(key, pass[ip].bits);
    if (is < scaled.size()) key = std::min(key, scaled[is].bits);
    if (im < fresh.size()) key = std::min(key, fresh[im].bits);

    double acc = 0.0;
    bool touched = false;
    if (ip < pass.size() && pass[ip].bits == key) {
      acc = pass[ip].coeff;
      ++ip;
    } else if (is < scaled.size() && scaled[is].bits == key) {
      acc = scaled[is].coeff;
      touched = true;
      ++is;
    }
    while (im < fresh.size() && fresh[im].bits == key) {
      acc += fresh[im].coeff;
      touched = true;
      ++im;
    }
    if (!touched || std::abs(acc) >= kNumericalZero) {
      out.push_back(Term{key, acc});
    }
  }
  return out;
}

void check_state_symmetry(const ProductState& state, const SymmetryGroup& group) {
  if (state.n_qubits() != group.n_qubits()) {
    throw ValidationError("state qubit count does not match symmetry group");
  }
  if (!group.is_trivial() && !state.is_permutation_invariant()) {
    throw ValidationError(
        "state is not invariant under the symmetry group: all single-qubit "
        "factors must be identical for permutation-type groups");
  }
}

void write_csv_double(std::ostream& os, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  os << buf;
}

}  // namespace

PauliSum apply_gate_adjoint(const PauliSum& sum, const PauliRotationGate& gate, int threads) {
  if (gate.generator.n_qubits() != sum.n_qubits()) {
    throw ValidationError("apply_gate_adjoint: size mismatch");
  }
  const pauli_bits gen = gate.generator.bits();
  const double cos_t = std::cos(gate.angle);
  const double sin_t = std::sin(gate.angle);
  const auto& terms = sum.terms();

  const std::size_t n_chunks = chunk_count(terms.size(), threads);
  std::vector<std::vector<Term>> pass_c(n_chunks), scaled_c(n_chunks), fresh_c(n_chunks);
  run_chunks(terms.size(), threads, [&](std::size_t c, std::size_t lo, std::size_t hi) {
    auto& pass = pass_c[c];
    auto& scaled = scaled_c[c];
    auto& fresh = fresh_c[c];
    for (std::size_t i = lo; i < hi; ++i) {
      const Term& t = terms[i];
      if (bits::commute(gen, t.bits)) {
        pass.push_back(t);
        continue;
      }
      const double kept = t.coeff * cos_t;
      if (std::abs(kept) >= kNumericalZero) scaled.push_back(Term{t.bits, kept});
      // i * P * Q = sigma * R with sigma real because P and Q anticommute.
      const int e = (1 + bits::phase_exponent(gen, t.bits)) & 3;
      const double sigma = e == 0 ? 1.0 : -1.0;
      const double created = t.coeff * sin_t * sigma;
      if (created != 0.0) fresh.push_back(Term{t.bits ^ gen, created});
    }
  });

  std::vector<Term> pass, scaled, fresh;
  for (auto& v : pass_c) pass.insert(pass.end(), v.begin(), v.end());
  for (auto& v : scaled_c) scaled.insert(scaled.end(), v.begin(), v.end());
  for (auto& v : fresh_c) fresh.insert(fresh.end(), v.begin(), v.end());
  std::stable_sort(fresh.begin(), fresh.end(),
                   [](const Term& a, const Term& b) { return a.bits < b.bits; });

  return PauliSum::adopt(sum.n_qubits(), merge_streams(pass, scaled, fresh));
}

PauliSum apply_noise(const PauliSum& sum, const NoiseLayer& noise, int threads) {
  if (noise.gamma == 0.0) return sum;
  std::vector<double> damp(sum.n_qubits() + 1);
  for (int w = 0; w <= sum.n_qubits(); ++w) damp[w] = std::exp(-noise.gamma * w);
  std::vector<Term> out(sum.terms());
  run_chunks(out.size(), threads, [&](std::size_t, std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) out[i].coeff *= damp[bits::weight(out[i].bits)];
  });
  return PauliSum::adopt(sum.n_qubits(), std::move(out));
}

PauliSum truncate(const PauliSum& sum, double epsilon) {
  if (epsilon < 0.0) throw ValidationError("truncate: epsilon must be >= 0");
  if (epsilon == 0.0) return sum;
  std::vector<Term> out;
  out.reserve(sum.size());
  for (const Term& t : sum.terms()) {
    if (std::abs(t.coeff) >= epsilon) out.push_back(t);
  }
  return PauliSum::adopt(sum.n_qubits(), std::move(out));
}

PauliSum merge_by_symmetry(const PauliSum& sum, const SymmetryGroup& group, int threads) {
  if (group.n_qubits() != sum.n_qubits()) {
    throw ValidationError("merge_by_symmetry: size mismatch");
  }
  if (group.is_trivial()) return sum;
  std::vector<Term> mapped(sum.terms());
  run_chunks(mapped.size(), threads, [&](std::size_t, std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
      mapped[i].bits = group.canonical_rep_bits(mapped[i].bits);
    }
  });
  std::stable_sort(mapped.begin(), mapped.end(),
                   [](const Term& a, const Term& b) { return a.bits < b.bits; });
  std::vector<Term> out;
  out.reserve(mapped.size());
  std::size_t i = 0;
  while (i < mapped.size()) {
    const pauli_bits key = mapped[i].bits;
    double acc = mapped[i].coeff;
    std::size_t j = i + 1;
    while (j < mapped.size() && mapped[j].bits == key) {
      acc += mapped[j].coeff;
      ++j;
    }
    const bool collided = j > i + 1;
    if (!collided || std::abs(acc) >= kNumericalZero) out.push_back(Term{key, acc});
    i = j;
  }
  return PauliSum::adopt(sum.n_qubits(), std::move(out));
}

double expectation(const PauliSum& sum, const ProductState& state) {
  if (state.n_qubits() != sum.n_qubits()) throw ValidationError("expectation: size mismatch");
  double e = 0.0;
  for (const Term& t : sum.terms()) e += t.coeff * overlap_bits(state, t.bits);
  return e;
}

double expectation(const PauliSum& sum, const ProductState& state, const SymmetryGroup& group) {
  check_state_symmetry(state, group);
  return expectation(sum, state);
}

void PropagationTrace::write_csv(std::ostream& os) const {
  os << "layer,time,n_terms,sum_abs_coeff,sum_sq_coeff,expectation,wall_ms\n";
  for (const TraceRow& r : rows) {
    os << r.layer << ',';
    write_csv_double(os, r.time);
    os << ',' << r.n_terms << ',';
    write_csv_double(os, r.sum_abs_coeff);
    os << ',';
    write_csv_double(os, r.sum_sq_coeff);
    os << ',';
    write_csv_double(os, r.expectation);
    os << ',';
    write_csv_double(os, r.wall_ms);
    os << '\n';
  }
}

PropagationTrace propagate(const PauliSum& observable, const Circuit& circuit,
                           const PropagationConfig& config, const ProductState* state) {
  if (circuit.n_qubits != observable.n_qubits()) {
    throw ValidationError("propagate: observable/circuit qubit count mismatch");
  }
  circuit.validate();
  if (config.epsilon < 0.0) throw ValidationError("propagate: epsilon must be >= 0");
  if (config.threads < 1) throw ValidationError("propagate: threads must be >= 1");
  if (state != nullptr && state->n_qubits() != circuit.n_qubits) {
    throw ValidationError("propagate: state qubit count mismatch");
  }

  const bool merging = config.symmetry.has_value() && !config.symmetry->is_trivial() &&
                       config.merge_policy.merging_enabled();
  if (merging) {
    if (config.symmetry->n_qubits() != circuit.n_qubits) {
      throw ValidationError("propagate: symmetry group qubit count mismatch");
    }
    if (state != nullptr) check_state_symmetry(*state, *config.symmetry);
  }

  const int threads = config.threads;
  PauliSum sum = observable;
  if (merging) sum = merge_by_symmetry(sum, *config.symmetry, threads);

  PropagationTrace trace{PauliSum(observable.n_qubits()), {}};
  auto record = [&](int processed, double wall_ms) {
    const double expv = state != nullptr
                            ? expectation(sum, *state)
                            : std::numeric_limits<double>::quiet_NaN();
    trace.rows.push_back(TraceRow{processed, processed * circuit.time_step, sum.size(),
                                  sum.sum_abs(), sum.sum_squares(), expv, wall_ms});
  };
  record(0, 0.0);

  const int total_layers = static_cast<int>(circuit.layers.size());
  for (int processed = 1; processed <= total_layers; ++processed) {
    const CircuitLayer& layer = circuit.layers[total_layers - processed];
    const auto t0 = std::chrono::steady_clock::now();
    for (auto it = layer.gates.rbegin(); it != layer.gates.rend(); ++it) {
      sum = apply_gate_adjoint(sum, *it, threads);
      if (sum.size() > config.memory_cap) {
        throw ResourceError("term count " + std::to_string(sum.size()) +
                            " exceeds memory cap " + std::to_string(config.memory_cap) +
                            " while processing circuit layer " +
                            std::to_string(total_layers - processed) + " (step " +
                            std::to_string(processed) + " of the Heisenberg pass)");
      }
    }
    if (layer.noise.has_value()) sum = apply_noise(sum, *layer.noise, threads);
    sum = truncate(sum, config.epsilon);
    if (merging && config.merge_policy.merge_after(processed)) {
      sum = merge_by_symmetry(sum, *config.symmetry, threads);
    }
    const double wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
            .count();
    record(processed, wall_ms);
  }

  trace.final_sum = std::move(sum);
  return trace;
}

}  // namespace orbitprop
