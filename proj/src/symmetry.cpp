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

#include "orbitprop/symmetry.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace orbitprop {

namespace {

count_t checked_add(count_t a, count_t b) {
  const count_t s = a + b;
  if (s < a) throw OverflowError("count exceeds 128 bits");
  return s;
}

// Exact binomial via stepwise multiply-then-divide; each prefix is itself a
// binomial so the division is exact.
count_t binomial(count_t n, count_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  count_t res = 1;
  for (count_t i = 0; i < k; ++i) {
    const count_t num = n - i;
    const count_t before = res;
    res = res * num;
    if (num != 0 && res / num != before) throw OverflowError("binomial exceeds 128 bits");
    res /= (i + 1);
  }
  return res;
}

}  // namespace

std::string group_kind_name(GroupKind kind) {
  switch (kind) {
    case GroupKind::trivial: return "trivial";
    case GroupKind::translation_1d: return "translation_1d";
    case GroupKind::translation_2d: return "translation_2d";
    case GroupKind::dihedral: return "dihedral";
    case GroupKind::permutation_full: return "permutation_full";
    case GroupKind::generic: return "generic";
  }
  return "unknown";
}

count_t pow4_checked(int e) {
  if (e < 0) throw ValidationError("pow4: negative exponent");
  if (e >= 64) throw OverflowError("4^" + std::to_string(e) + " exceeds 128 bits");
  return count_t{1} << (2 * e);
}

count_t count_representatives_translation_closed_form(int n) {
  if (n < 1) throw ValidationError("translation count: n must be >= 1");
  count_t sum = 0;
  for (int j = 1; j <= n; ++j) {
    sum = checked_add(sum, pow4_checked(std::gcd(j, n)));
  }
  if (sum % static_cast<count_t>(n) != 0) {
    throw std::logic_error("necklace gcd sum not divisible by n");
  }
  return sum / static_cast<count_t>(n);
}

count_t count_representatives_permutation_closed_form(int n) {
  if (n < 1) throw ValidationError("permutation count: n must be >= 1");
  return binomial(static_cast<count_t>(n) + 3, 3);
}

SymmetryGroup::SymmetryGroup(GroupKind kind, int n_qubits, std::vector<Permutation> elements)
    : kind_(kind), n_qubits_(n_qubits), elements_(std::move(elements)) {
  if (n_qubits < 1 || n_qubits > kMaxQubits) {
    throw ValidationError("SymmetryGroup: n_qubits must be in [1, 64]");
  }
}

SymmetryGroup SymmetryGroup::trivial(int n_qubits) {
  return SymmetryGroup(GroupKind::trivial, n_qubits, {Permutation::identity(n_qubits)});
}

SymmetryGroup SymmetryGroup::translation_1d(int n_qubits) {
  std::vector<Permutation> elems;
  elems.reserve(n_qubits);
  for (int j = 0; j < n_qubits; ++j) elems.push_back(Permutation::cyclic_shift(n_qubits, j));
  return SymmetryGroup(GroupKind::translation_1d, n_qubits, std::move(elems));
}

SymmetryGroup SymmetryGroup::translation_2d(int lx, int ly) {
  if (lx < 1 || ly < 1) throw ValidationError("translation_2d: lx, ly must be >= 1");
  const int n = lx * ly;
  if (n > kMaxQubits) throw ValidationError("translation_2d: lx*ly exceeds 64 qubits");
  std::vector<Permutation> elems;
  elems.reserve(static_cast<std::size_t>(n));
  // Row-major indexing q = y*lx + x; shifts along x and y independently.
  for (int sy = 0; sy < ly; ++sy) {
    for (int sx = 0; sx < lx; ++sx) {
      std::vector<std::uint8_t> image(static_cast<std::size_t>(n));
      for (int q = 0; q < n; ++q) {
        const int x = q % lx, y = q / lx;
        image[q] = static_cast<std::uint8_t>(((y + sy) % ly) * lx + (x + sx) % lx);
      }
      elems.emplace_back(std::move(image));
    }
  }
  SymmetryGroup g(GroupKind::translation_2d, n, std::move(elems));
  g.lx_ = lx;
  g.ly_ = ly;
  return g;
}

SymmetryGroup SymmetryGroup::dihedral(int n_qubits) {
  std::vector<Permutation> elems;
  elems.reserve(2 * static_cast<std::size_t>(n_qubits));
  const Permutation rev = Permutation::reversal(n_qubits);
  for (int j = 0; j < n_qubits; ++j) elems.push_back(Permutation::cyclic_shift(n_qubits, j));
  for (int j = 0; j < n_qubits; ++j) {
    elems.push_back(Permutation::cyclic_shift(n_qubits, j).compose(rev));
  }
  // n <= 2 collapses (reflection coincides with a rotation); keep distinct set.
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  return SymmetryGroup(GroupKind::dihedral, n_qubits, std::move(elems));
}

SymmetryGroup SymmetryGroup::permutation_full(int n_qubits) {
  return SymmetryGroup(GroupKind::permutation_full, n_qubits, {});
}

SymmetryGroup SymmetryGroup::generic(int n_qubits, const std::vector<Permutation>& generators,
                                     std::size_t element_cap) {
  for (const Permutation& g : generators) {
    if (g.size() != n_qubits) throw ValidationError("generator size does not match n_qubits");
  }
  std::set<Permutation> closure;
  std::vector<Permutation> frontier;
  closure.insert(Permutation::identity(n_qubits));
  frontier.push_back(Permutation::identity(n_qubits));
  std::vector<Permutation> gens = generators;
  for (const Permutation& g : generators) gens.push_back(g.inverse());
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const Permutation& f : frontier) {
      for (const Permutation& g : gens) {
        Permutation h = g.compose(f);
        if (closure.insert(h).second) {
          if (closure.size() > element_cap) {
            throw ValidationError("generic group closure exceeds element cap of " +
                                  std::to_string(element_cap));
          }
          next.push_back(std::move(h));
        }
      }
    }
    frontier = std::move(next);
  }
  std::vector<Permutation> elems(closure.begin(), closure.end());
  return SymmetryGroup(GroupKind::generic, n_qubits, std::move(elems));
}

count_t SymmetryGroup::order() const {
  if (kind_ == GroupKind::permutation_full) {
    count_t f = 1;
    for (int i = 2; i <= n_qubits_; ++i) {
      const count_t before = f;
      f *= static_cast<count_t>(i);
      if (f / static_cast<count_t>(i) != before) throw OverflowError("n! exceeds 128 bits");
    }
    return f;
  }
  return static_cast<count_t>(elements_.size());
}

const std::vector<Permutation>& SymmetryGroup::elements() const {
  if (kind_ == GroupKind::permutation_full) {
    throw ValidationError("permutation_full elements are not materialized");
  }
  return elements_;
}

pauli_bits SymmetryGroup::canonical_rep_bits(pauli_bits b) const {
  switch (kind_) {
    case GroupKind::trivial:
      return b;
    case GroupKind::translation_1d: {
      pauli_bits best = b;
      for (int j = 1; j < n_qubits_; ++j) {
        best = std::min(best, bits::rotate_sites(b, j, n_qubits_));
      }
      return best;
    }
    case GroupKind::permutation_full: {
      int counts[4] = {0, 0, 0, 0};
      for (int i = 0; i < n_qubits_; ++i) {
        ++counts[static_cast<unsigned>(b >> (2 * i)) & 3u];
      }
      // Z block, then Y, then X, then I padding: largest codes at the
      // lowest-weight sites is the minimal arrangement.
      pauli_bits out = 0;
      int site = 0;
      for (int i = 0; i < counts[3]; ++i) out |= pauli_bits{3} << (2 * site++);
      for (int i = 0; i < counts[2]; ++i) out |= pauli_bits{2} << (2 * site++);
      for (int i = 0; i < counts[1]; ++i) out |= pauli_bits{1} << (2 * site++);
      return out;
    }
    default: {
      pauli_bits best = b;
      for (std::size_t i = 1; i < elements_.size(); ++i) {
        best = std::min(best, apply_permutation_bits(b, elements_[i]));
      }
      return best;
    }
  }
}

PauliString SymmetryGroup::canonical_rep(const PauliString& s) const {
  if (s.n_qubits() != n_qubits_) throw ValidationError("canonical_rep: size mismatch");
  return PauliString(canonical_rep_bits(s.bits()), n_qubits_);
}

OrbitReport SymmetryGroup::orbit(const PauliString& s, bool with_members) const {
  if (s.n_qubits() != n_qubits_) throw ValidationError("orbit: size mismatch");
  if (kind_ == GroupKind::permutation_full) {
    if (with_members) {
      throw ValidationError("materializing permutation_full orbits is unsupported");
    }
    int counts[4] = {0, 0, 0, 0};
    for (int i = 0; i < n_qubits_; ++i) {
      ++counts[static_cast<unsigned>(s.bits() >> (2 * i)) & 3u];
    }
    // Distinct arrangements: n! / (nI! nX! nY! nZ!) as a product of binomials.
    count_t size = binomial(static_cast<count_t>(n_qubits_), static_cast<count_t>(counts[0]));
    int rest = n_qubits_ - counts[0];
    size *= binomial(static_cast<count_t>(rest), static_cast<count_t>(counts[1]));
    rest -= counts[1];
    size *= binomial(static_cast<count_t>(rest), static_cast<count_t>(counts[2]));
    return OrbitReport{canonical_rep(s), size, std::nullopt};
  }
  std::vector<pauli_bits> members;
  members.reserve(elements_.size());
  for (const Permutation& g : elements_) {
    members.push_back(apply_permutation_bits(s.bits(), g));
  }
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  OrbitReport report{PauliString(members.front(), n_qubits_),
                     static_cast<count_t>(members.size()), std::nullopt};
  if (with_members) {
    std::vector<PauliString> out;
    out.reserve(members.size());
    for (pauli_bits b : members) out.emplace_back(b, n_qubits_);
    report.members = std::move(out);
  }
  return report;
}

count_t SymmetryGroup::count_representatives() const {
  switch (kind_) {
    case GroupKind::trivial:
      return pow4_checked(n_qubits_);
    case GroupKind::translation_1d:
      return count_representatives_translation_closed_form(n_qubits_);
    case GroupKind::permutation_full:
      return count_representatives_permutation_closed_form(n_qubits_);
    default: {
      count_t sum = 0;
      for (const Permutation& g : elements_) {
        sum = checked_add(sum, pow4_checked(g.cycle_count()));
      }
      const count_t size = static_cast<count_t>(elements_.size());
      if (sum % size != 0) throw std::logic_error("Burnside sum not divisible by |G|");
      return sum / size;
    }
  }
}

}  // namespace orbitprop
