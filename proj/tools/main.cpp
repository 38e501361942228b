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

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "orbitprop/runner.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitResource = 3;
constexpr int kExitIo = 4;

struct CommonFlags {
  std::string config_path;
  std::optional<std::string> output;
  std::optional<int> threads;
  std::optional<long long> memory_cap;
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("--config", flags.config_path, "JSON run-config file")->required();
  cmd->add_option("--output", flags.output, "output CSV path (overrides config)");
  cmd->add_option("--threads", flags.threads, "worker cap (overrides config)");
  cmd->add_option("--memory-cap", flags.memory_cap,
                  "maximum stored term count (overrides config)");
}

orbitprop::RunConfig load_with_overrides(const CommonFlags& flags) {
  orbitprop::RunConfig cfg = orbitprop::load_run_config(flags.config_path);
  if (flags.output) cfg.output_path = *flags.output;
  if (flags.threads) {
    if (*flags.threads < 1) throw orbitprop::ValidationError("--threads must be >= 1");
    cfg.threads = *flags.threads;
  }
  if (flags.memory_cap) {
    if (*flags.memory_cap <= 0) {
      throw orbitprop::ValidationError("--memory-cap must be a positive integer");
    }
    cfg.memory_cap = static_cast<std::size_t>(*flags.memory_cap);
  }
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pauli propagation with symmetry merging"};
  app.require_subcommand(1);

  CommonFlags prop_flags;
  bool compare_flag = false;
  CLI::App* prop = app.add_subcommand("propagate", "run one experiment, write the trace CSV");
  add_common(prop, prop_flags);
  prop->add_flag("--compare", compare_flag,
                 "run standard and symmetry modes, write the joined CSV");

  CommonFlags cmp_flags;
  CLI::App* cmp = app.add_subcommand("compare", "run standard and symmetry modes side by side");
  add_common(cmp, cmp_flags);

  std::string group = "translation_1d";
  int n_min = 1, n_max = 8, lx = 0, ly = 0;
  CLI::App* reps = app.add_subcommand("count-reps", "tabulate representative counts as CSV");
  reps->add_option("--group", group,
                   "trivial | translation_1d | dihedral | permutation_full | translation_2d");
  reps->add_option("--n-min", n_min, "first chain length");
  reps->add_option("--n-max", n_max, "last chain length");
  reps->add_option("--lx", lx, "torus width (translation_2d)");
  reps->add_option("--ly", ly, "torus height (translation_2d)");

  int oc_n = 4, oc_trials = 25;
  std::uint64_t oc_seed = 1;
  int oc_threads = 1;
  CLI::App* oc = app.add_subcommand("oracle-check",
                                    "randomized engine-vs-dense-oracle comparison");
  oc->add_option("--n", oc_n, "qubit count (2..10)");
  oc->add_option("--trials", oc_trials, "number of random circuits");
  oc->add_option("--seed", oc_seed, "RNG seed");
  oc->add_option("--threads", oc_threads, "worker cap");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);           // prints help or the parse error
    return code == 0 ? kExitOk : kExitValidation;
  }

  try {
    if (prop->parsed()) {
      const orbitprop::RunConfig cfg = load_with_overrides(prop_flags);
      if (compare_flag) orbitprop::run_compare(cfg, std::cout);
      else orbitprop::run_propagate(cfg, std::cout);
    } else if (cmp->parsed()) {
      orbitprop::run_compare(load_with_overrides(cmp_flags), std::cout);
    } else if (reps->parsed()) {
      std::cout << orbitprop::count_reps_csv(group, n_min, n_max, lx, ly);
    } else if (oc->parsed()) {
      const auto result = orbitprop::oracle_check(oc_n, oc_trials, oc_seed, oc_threads);
      std::cout << "trials," << result.trials << "\n"
                << "max_standard_error," << result.max_standard_error << "\n"
                << "max_symmetry_error," << result.max_symmetry_error << "\n";
      if (result.max_standard_error > 1e-8 || result.max_symmetry_error > 1e-8) {
        std::cerr << "oracle-check: deviation above 1e-8\n";
        return 1;
      }
    }
    return kExitOk;
  } catch (const orbitprop::ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const orbitprop::OverflowError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const orbitprop::ResourceError& e) {
    std::cerr << "resource error: " << e.what() << "\n";
    return kExitResource;
  } catch (const orbitprop::IoError& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
