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

#include "orbitprop/runner.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace orbitprop {

namespace {

using nlohmann::json;

[[noreturn]] void bad_field(const std::string& field, const std::string& why) {
  throw ValidationError("config field '" + field + "': " + why);
}

double require_number(const json& j, const std::string& field) {
  if (!j.contains(field) || !j[field].is_number()) bad_field(field, "expected a number");
  return j[field].get<double>();
}

int require_int(const json& j, const std::string& field) {
  if (!j.contains(field) || !j[field].is_number_integer()) {
    bad_field(field, "expected an integer");
  }
  return j[field].get<int>();
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void parse_model(const json& j, RunConfig& cfg) {
  if (!j.contains("model") || !j["model"].is_object()) bad_field("model", "expected an object");
  const json& m = j["model"];
  if (m.contains("ising") == m.contains("xxz")) {
    bad_field("model", "exactly one of 'ising' or 'xxz' is required");
  }
  if (m.contains("ising")) {
    const json& mi = m["ising"];
    IsingParams p{};
    p.n = require_int(mi, "n");
    p.h_x = require_number(mi, "h_x");
    p.h_z = require_number(mi, "h_z");
    p.delta_t = require_number(mi, "delta_t");
    p.layers = require_int(mi, "layers");
    if (mi.contains("boundary") && mi["boundary"] != "periodic") {
      bad_field("model.ising.boundary", "only 'periodic' is supported");
    }
    cfg.ising = p;
  } else {
    const json& mx = m["xxz"];
    XXZParams p{};
    p.lx = require_int(mx, "lx");
    p.ly = require_int(mx, "ly");
    p.j_perp = require_number(mx, "j_perp");
    p.delta = require_number(mx, "delta");
    p.alpha = require_number(mx, "alpha");
    p.delta_t = require_number(mx, "delta_t");
    p.layers = require_int(mx, "layers");
    cfg.xxz = p;
  }
}

void parse_observable(const json& j, RunConfig& cfg) {
  if (!j.contains("observable")) return;  // defaulted per model in build_run
  const json& o = j["observable"];
  if (o.is_string()) {
    const std::string s = o.get<std::string>();
    if (s == "mid_chain_z") cfg.observable = RunConfig::Observable::mid_chain_z;
    else if (s == "total_spin_squared") cfg.observable = RunConfig::Observable::total_spin_squared;
    else bad_field("observable", "unknown observable '" + s + "'");
  } else if (o.is_object() && o.contains("custom") && o["custom"].is_string()) {
    cfg.observable = RunConfig::Observable::custom;
    cfg.custom_observable = o["custom"].get<std::string>();
  } else {
    bad_field("observable", "expected a name or {\"custom\": \"<pauli text>\"}");
  }
}

void parse_state(const json& j, RunConfig& cfg) {
  if (!j.contains("state")) return;
  const json& s = j["state"];
  if (s.is_string()) {
    const std::string name = s.get<std::string>();
    if (name == "plus_x") cfg.state = RunConfig::StateKind::plus_x;
    else if (name == "zero_z") cfg.state = RunConfig::StateKind::zero_z;
    else bad_field("state", "unknown state '" + name + "'");
  } else if (s.is_object() && s.contains("bloch") && s["bloch"].is_array() &&
             s["bloch"].size() == 3) {
    cfg.state = RunConfig::StateKind::bloch;
    for (int i = 0; i < 3; ++i) {
      if (!s["bloch"][i].is_number()) bad_field("state.bloch", "expected three numbers");
      cfg.state_bloch[i] = s["bloch"][i].get<double>();
    }
  } else {
    bad_field("state", "expected a name or {\"bloch\": [x, y, z]}");
  }
}

void parse_symmetry(const json& j, RunConfig& cfg) {
  if (!j.contains("symmetry")) return;
  const json& s = j["symmetry"];
  if (s.is_string()) {
    const std::string name = s.get<std::string>();
    if (name == "trivial") cfg.symmetry = GroupKind::trivial;
    else if (name == "translation_1d") cfg.symmetry = GroupKind::translation_1d;
    else if (name == "dihedral") cfg.symmetry = GroupKind::dihedral;
    else if (name == "permutation_full") cfg.symmetry = GroupKind::permutation_full;
    else bad_field("symmetry", "unknown group '" + name + "'");
  } else if (s.is_object() && s.contains("translation_2d")) {
    cfg.symmetry = GroupKind::translation_2d;
    cfg.symmetry_lx = require_int(s["translation_2d"], "lx");
    cfg.symmetry_ly = require_int(s["translation_2d"], "ly");
  } else if (s.is_object() && s.contains("generic")) {
    const json& g = s["generic"];
    if (!g.contains("generators") || !g["generators"].is_array()) {
      bad_field("symmetry.generic.generators", "expected an array of permutations");
    }
    cfg.symmetry = GroupKind::generic;
    for (const json& perm : g["generators"]) {
      if (!perm.is_array()) bad_field("symmetry.generic.generators", "expected integer arrays");
      std::vector<int> image;
      for (const json& v : perm) {
        if (!v.is_number_integer()) {
          bad_field("symmetry.generic.generators", "expected integer arrays");
        }
        image.push_back(v.get<int>());
      }
      cfg.symmetry_generators.push_back(std::move(image));
    }
  } else {
    bad_field("symmetry", "expected a group name, translation_2d, or generic spec");
  }
}

void parse_merge_policy(const json& j, RunConfig& cfg) {
  if (!j.contains("merge_policy")) return;
  const json& m = j["merge_policy"];
  if (m.is_string()) {
    const std::string name = m.get<std::string>();
    if (name == "never") cfg.merge_policy = MergePolicy::never();
    else if (name == "after_each_layer") cfg.merge_policy = MergePolicy::after_each_layer();
    else bad_field("merge_policy", "unknown policy '" + name + "'");
  } else if (m.is_object() && m.contains("after_k_layers")) {
    if (!m["after_k_layers"].is_number_integer()) {
      bad_field("merge_policy.after_k_layers", "expected an integer");
    }
    cfg.merge_policy = MergePolicy::after_k_layers(m["after_k_layers"].get<int>());
  } else {
    bad_field("merge_policy", "expected a policy name or {\"after_k_layers\": k}");
  }
}

ProductState make_state(const RunConfig& cfg, int n) {
  switch (cfg.state) {
    case RunConfig::StateKind::plus_x: return ProductState::plus_x(n);
    case RunConfig::StateKind::zero_z: return ProductState::zero_z(n);
    case RunConfig::StateKind::bloch: return ProductState::uniform_bloch(n, cfg.state_bloch);
  }
  throw ValidationError("config field 'state': unknown kind");
}

SymmetryGroup make_group(const RunConfig& cfg, int n) {
  switch (cfg.symmetry) {
    case GroupKind::trivial: return SymmetryGroup::trivial(n);
    case GroupKind::translation_1d: return SymmetryGroup::translation_1d(n);
    case GroupKind::dihedral: return SymmetryGroup::dihedral(n);
    case GroupKind::permutation_full: return SymmetryGroup::permutation_full(n);
    case GroupKind::translation_2d: {
      if (cfg.symmetry_lx * cfg.symmetry_ly != n) {
        throw ValidationError("config field 'symmetry.translation_2d': lx*ly = " +
                              std::to_string(cfg.symmetry_lx * cfg.symmetry_ly) +
                              " does not match the model's n = " + std::to_string(n));
      }
      return SymmetryGroup::translation_2d(cfg.symmetry_lx, cfg.symmetry_ly);
    }
    case GroupKind::generic: {
      std::vector<Permutation> gens;
      for (const auto& image : cfg.symmetry_generators) {
        if (static_cast<int>(image.size()) != n) {
          throw ValidationError(
              "config field 'symmetry.generic.generators': permutation length does not "
              "match the model's n = " +
              std::to_string(n));
        }
        std::vector<std::uint8_t> im;
        for (int v : image) {
          if (v < 0 || v >= n) {
            throw ValidationError(
                "config field 'symmetry.generic.generators': index out of range");
          }
          im.push_back(static_cast<std::uint8_t>(v));
        }
        gens.emplace_back(std::move(im));
      }
      return SymmetryGroup::generic(n, gens);
    }
  }
  throw ValidationError("config field 'symmetry': unknown kind");
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open output file: " + path);
  out << contents;
  if (!out) throw IoError("failed writing output file: " + path);
}

}  // namespace

RunConfig parse_run_config(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("config is not valid JSON: ") + e.what());
  }
  RunConfig cfg;
  parse_model(j, cfg);
  // Default observable follows the model's benchmark.
  cfg.observable = cfg.xxz.has_value() ? RunConfig::Observable::total_spin_squared
                                       : RunConfig::Observable::mid_chain_z;
  parse_observable(j, cfg);
  parse_state(j, cfg);
  parse_symmetry(j, cfg);
  parse_merge_policy(j, cfg);
  if (j.contains("epsilon")) cfg.epsilon = require_number(j, "epsilon");
  if (j.contains("gamma")) cfg.gamma = require_number(j, "gamma");
  if (j.contains("output_path")) {
    if (!j["output_path"].is_string()) bad_field("output_path", "expected a string");
    cfg.output_path = j["output_path"].get<std::string>();
  }
  if (j.contains("memory_cap")) {
    if (!j["memory_cap"].is_number_unsigned() && !j["memory_cap"].is_number_integer()) {
      bad_field("memory_cap", "expected a positive integer");
    }
    const auto cap = j["memory_cap"].get<long long>();
    if (cap <= 0) bad_field("memory_cap", "expected a positive integer");
    cfg.memory_cap = static_cast<std::size_t>(cap);
  }
  if (j.contains("threads")) {
    cfg.threads = require_int(j, "threads");
    if (cfg.threads < 1) bad_field("threads", "must be >= 1");
  }
  if (j.contains("seed")) {
    if (!j["seed"].is_number_integer() && !j["seed"].is_number_unsigned()) {
      bad_field("seed", "expected an integer");
    }
    cfg.seed = j["seed"].get<std::uint64_t>();
  }
  if (cfg.epsilon < 0.0) bad_field("epsilon", "must be >= 0");
  if (cfg.gamma < 0.0) bad_field("gamma", "must be >= 0");
  return cfg;
}

RunConfig load_run_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open config file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_run_config(buf.str());
}

BuiltRun build_run(const RunConfig& cfg) {
  Circuit circuit = cfg.ising.has_value() ? build_ising_circuit(*cfg.ising)
                                          : build_xxz_circuit(*cfg.xxz);
  if (cfg.gamma > 0.0) circuit.attach_noise(cfg.gamma);
  const int n = circuit.n_qubits;

  PauliSum observable(n);
  switch (cfg.observable) {
    case RunConfig::Observable::mid_chain_z:
      observable.add(PauliString::single(n, mid_chain_site(n), Pauli::Z), 1.0);
      break;
    case RunConfig::Observable::total_spin_squared:
      observable = total_spin_squared(n);
      break;
    case RunConfig::Observable::custom: {
      PauliString p = PauliString::from_text(cfg.custom_observable);
      if (p.n_qubits() != n) {
        throw ValidationError("config field 'observable.custom': length " +
                              std::to_string(p.n_qubits()) +
                              " does not match the model's n = " + std::to_string(n));
      }
      observable.add(p, 1.0);
      break;
    }
  }

  ProductState state = make_state(cfg, n);
  SymmetryGroup group = make_group(cfg, n);
  return BuiltRun{std::move(circuit), std::move(observable), std::move(state),
                  std::move(group)};
}

void run_propagate(const RunConfig& cfg, std::ostream& log) {
  BuiltRun run = build_run(cfg);
  PropagationConfig pc;
  pc.epsilon = cfg.epsilon;
  pc.merge_policy = cfg.merge_policy;
  pc.symmetry = run.group;
  pc.memory_cap = cfg.memory_cap;
  pc.threads = cfg.threads;
  PropagationTrace trace = propagate(run.observable, run.circuit, pc, &run.state);
  std::ostringstream csv;
  trace.write_csv(csv);
  write_file(cfg.output_path, csv.str());
  log << "wrote " << trace.rows.size() << " rows to " << cfg.output_path << "\n";
}

void run_compare(const RunConfig& cfg, std::ostream& log) {
  if (cfg.symmetry == GroupKind::trivial) {
    throw ValidationError(
        "config field 'symmetry': compare mode needs a nontrivial group");
  }
  BuiltRun run = build_run(cfg);

  PropagationConfig pc;
  pc.epsilon = cfg.epsilon;
  pc.memory_cap = cfg.memory_cap;
  pc.threads = cfg.threads;

  pc.symmetry = SymmetryGroup::trivial(run.circuit.n_qubits);
  pc.merge_policy = MergePolicy::never();
  PropagationTrace standard = propagate(run.observable, run.circuit, pc, &run.state);

  pc.symmetry = run.group;
  pc.merge_policy = cfg.merge_policy.merging_enabled() ? cfg.merge_policy
                                                       : MergePolicy::after_each_layer();
  PropagationTrace symmetry = propagate(run.observable, run.circuit, pc, &run.state);

  std::ostringstream csv;
  csv << "layer,n_terms_standard,n_terms_symmetry,expectation_standard,"
         "expectation_symmetry\n";
  for (std::size_t i = 0; i < standard.rows.size(); ++i) {
    const TraceRow& s = standard.rows[i];
    const TraceRow& m = symmetry.rows[i];
    csv << s.layer << ',' << s.n_terms << ',' << m.n_terms << ','
        << format_double(s.expectation) << ',' << format_double(m.expectation) << '\n';
  }
  write_file(cfg.output_path, csv.str());
  log << "wrote " << standard.rows.size() << " rows to " << cfg.output_path << "\n";
}

std::string count_reps_csv(const std::string& group, int n_min, int n_max, int lx, int ly) {
  std::ostringstream out;
  out << "n,group,count,ratio\n";
  auto emit = [&out](int n, const std::string& name, count_t count) {
    const double ratio =
        static_cast<double>(count) / std::pow(4.0, static_cast<double>(n));
    out << n << ',' << name << ',' << to_decimal(count) << ',' << format_double(ratio)
        << '\n';
  };
  if (group == "translation_2d") {
    if (lx < 1 || ly < 1) {
      throw ValidationError("count-reps: translation_2d requires --lx and --ly");
    }
    emit(lx * ly, group, SymmetryGroup::translation_2d(lx, ly).count_representatives());
    return out.str();
  }
  if (n_min < 1 || n_max < n_min) {
    throw ValidationError("count-reps: need 1 <= n-min <= n-max");
  }
  for (int n = n_min; n <= n_max; ++n) {
    if (group == "trivial") emit(n, group, SymmetryGroup::trivial(n).count_representatives());
    else if (group == "translation_1d") {
      emit(n, group, count_representatives_translation_closed_form(n));
    } else if (group == "dihedral") {
      emit(n, group, SymmetryGroup::dihedral(n).count_representatives());
    } else if (group == "permutation_full") {
      emit(n, group, count_representatives_permutation_closed_form(n));
    } else {
      throw ValidationError("count-reps: unsupported group '" + group + "'");
    }
  }
  return out.str();
}

PauliString random_pauli(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> letter(0, 3);
  while (true) {
    pauli_bits b = 0;
    for (int i = 0; i < n; ++i) {
      b |= pauli_bits{static_cast<unsigned>(letter(rng))} << (2 * i);
    }
    if (b != 0) return PauliString(b, n);
  }
}

Circuit random_circuit(int n, int layers, int gates_per_layer, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> angle(-3.14159265358979312, 3.14159265358979312);
  Circuit circuit(n);
  for (int l = 0; l < layers; ++l) {
    CircuitLayer layer;
    for (int g = 0; g < gates_per_layer; ++g) {
      layer.gates.emplace_back(random_pauli(n, rng), angle(rng));
    }
    circuit.layers.push_back(std::move(layer));
  }
  return circuit;
}

Circuit random_symmetric_circuit(const SymmetryGroup& group, int layers,
                                 std::mt19937_64& rng) {
  const int n = group.n_qubits();
  std::uniform_real_distribution<double> angle(-3.14159265358979312, 3.14159265358979312);
  std::uniform_int_distribution<int> letter(1, 3);
  std::uniform_int_distribution<int> coin(0, 1);
  Circuit circuit(n);
  for (int l = 0; l < layers; ++l) {
    const Pauli w = static_cast<Pauli>(letter(rng));
    pauli_bits b = 0;
    for (int i = 0; i < n; ++i) {
      if (coin(rng)) b |= pauli_bits{static_cast<unsigned>(w)} << (2 * i);
    }
    if (b == 0) b = static_cast<unsigned>(w);  // at least one site
    const PauliString generator(b, n);
    const double theta = angle(rng);

    CircuitLayer layer;
    if (group.kind() == GroupKind::permutation_full) {
      // All arrangements of the letter multiset: enumerate by weight since the
      // letters are all equal -- every same-letter string of this weight.
      const int k = generator.weight();
      for (pauli_bits mask = 0; mask < (pauli_bits{1} << n); ++mask) {
        if (__builtin_popcountll(static_cast<std::uint64_t>(mask)) != k) continue;
        pauli_bits g = 0;
        for (int i = 0; i < n; ++i) {
          if ((mask >> i) & 1u) g |= pauli_bits{static_cast<unsigned>(w)} << (2 * i);
        }
        layer.gates.emplace_back(PauliString(g, n), theta);
      }
    } else {
      OrbitReport orbit = group.orbit(generator, /*with_members=*/true);
      for (const PauliString& member : *orbit.members) {
        layer.gates.emplace_back(member, theta);
      }
    }
    circuit.layers.push_back(std::move(layer));
  }
  return circuit;
}

OracleCheckResult oracle_check(int n, int trials, std::uint64_t seed, int threads) {
  if (n < 2) throw ValidationError("oracle-check: n must be >= 2");
  if (n > 10) throw ResourceError("oracle-check: dense oracle limited to n <= 10");
  if (trials < 1) throw ValidationError("oracle-check: trials must be >= 1");
  std::mt19937_64 rng(seed);
  OracleCheckResult result{trials, 0.0, 0.0};

  PropagationConfig standard_pc;
  standard_pc.merge_policy = MergePolicy::never();
  standard_pc.threads = threads;

  const SymmetryGroup translation = SymmetryGroup::translation_1d(n);
  PropagationConfig sym_pc;
  sym_pc.symmetry = translation;
  sym_pc.threads = threads;

  for (int t = 0; t < trials; ++t) {
    PauliSum observable(n);
    observable.add(random_pauli(n, rng), 1.0);
    const ProductState state = (t % 2 == 0) ? ProductState::plus_x(n)
                                            : ProductState::zero_z(n);

    // Arbitrary circuit vs. the oracle.
    Circuit circuit = random_circuit(n, 4, 10, rng);
    const double engine =
        expectation(propagate(observable, circuit, standard_pc).final_sum, state);
    const double exact =
        exact_expectation(conjugate_adjoint(DenseOperator::densify(observable), circuit), state);
    result.max_standard_error = std::max(result.max_standard_error, std::abs(engine - exact));

    // Symmetric circuit, merged propagation vs. the oracle.
    Circuit symmetric = random_symmetric_circuit(translation, 4, rng);
    const double merged =
        expectation(propagate(observable, symmetric, sym_pc).final_sum, state, translation);
    const double exact_sym = exact_expectation(
        conjugate_adjoint(DenseOperator::densify(observable), symmetric), state);
    result.max_symmetry_error =
        std::max(result.max_symmetry_error, std::abs(merged - exact_sym));
  }
  return result;
}

}  // namespace orbitprop
