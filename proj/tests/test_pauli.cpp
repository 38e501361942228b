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

#include <complex>
#include <random>
#include <vector>

#include "doctest.h"
#include "orbitprop/pauli.hpp"

using namespace orbitprop;

namespace {

// Test-local dense reference, kept independent of the library's bit tricks:
// explicit 2x2 matrices and Kronecker products.
using cx = std::complex<double>;
struct Mat {
  std::size_t dim;
  std::vector<cx> a;  // row-major
  cx& at(std::size_t r, std::size_t c) { return a[r * dim + c]; }
  const cx& at(std::size_t r, std::size_t c) const { return a[r * dim + c]; }
};

Mat dense_letter(unsigned code) {
  Mat m{2, std::vector<cx>(4, 0.0)};
  switch (code) {
    case 0: m.at(0, 0) = 1; m.at(1, 1) = 1; break;                    // I
    case 1: m.at(0, 1) = 1; m.at(1, 0) = 1; break;                    // X
    case 2: m.at(0, 1) = cx(0, -1); m.at(1, 0) = cx(0, 1); break;     // Y
    default: m.at(0, 0) = 1; m.at(1, 1) = -1; break;                  // Z
  }
  return m;
}

Mat kron(const Mat& a, const Mat& b) {
  Mat out{a.dim * b.dim, std::vector<cx>(a.dim * b.dim * a.dim * b.dim, 0.0)};
  for (std::size_t ar = 0; ar < a.dim; ++ar)
    for (std::size_t ac = 0; ac < a.dim; ++ac)
      for (std::size_t br = 0; br < b.dim; ++br)
        for (std::size_t bc = 0; bc < b.dim; ++bc)
          out.at(ar * b.dim + br, ac * b.dim + bc) = a.at(ar, ac) * b.at(br, bc);
  return out;
}

// Qubit 0 occupies the least-significant index bit, matching the bit layout.
Mat dense_pauli(pauli_bits bits, int n) {
  Mat m{1, {cx(1.0)}};
  for (int q = n - 1; q >= 0; --q) {
    m = kron(m, dense_letter(static_cast<unsigned>(bits >> (2 * q)) & 3u));
  }
  return m;
}

Mat matmul(const Mat& a, const Mat& b) {
  Mat out{a.dim, std::vector<cx>(a.dim * a.dim, 0.0)};
  for (std::size_t r = 0; r < a.dim; ++r)
    for (std::size_t k = 0; k < a.dim; ++k)
      for (std::size_t c = 0; c < a.dim; ++c) out.at(r, c) += a.at(r, k) * b.at(k, c);
  return out;
}

double max_abs_diff(const Mat& a, const Mat& b) {
  double m = 0;
  for (std::size_t i = 0; i < a.a.size(); ++i) m = std::max(m, std::abs(a.a[i] - b.a[i]));
  return m;
}

}  // namespace

TEST_CASE("encoding layout") {
  CHECK(PauliString::from_text("III").bits() == 0);
  CHECK(PauliString::from_text("XII").bits() == 0b000001);
  CHECK(PauliString::from_text("ZYX").bits() == 0b011011);
  CHECK(PauliString::from_text("IXI").bits() == 0b000100);
  CHECK_THROWS_AS(PauliString::from_text("XQZ"), ValidationError);
  CHECK_THROWS_AS(PauliString::from_text(""), ValidationError);
  // Bits above 2n-1 must be zero.
  CHECK_THROWS_AS(PauliString(pauli_bits{1} << 6, 3), ValidationError);
}

TEST_CASE("text round trip is exhaustive for small n") {
  for (int n = 1; n <= 6; ++n) {
    const pauli_bits total = pauli_bits{1} << (2 * n);
    for (pauli_bits b = 0; b < total; ++b) {
      const PauliString p(b, n);
      const std::string text = p.to_text();
      CHECK(PauliString::from_text(text).bits() == b);
      // Letters round trip too.
      std::vector<Pauli> letters;
      for (int i = 0; i < n; ++i) letters.push_back(p.letter(i));
      CHECK(PauliString::from_letters(letters) == p);
    }
  }
}

TEST_CASE("weight") {
  CHECK(PauliString::from_text("III").weight() == 0);
  CHECK(PauliString::from_text("XXIZ").weight() == 3);
  CHECK(PauliString::from_text("ZZZZZ").weight() == 5);
}

TEST_CASE("commutation examples") {
  auto c = [](const char* a, const char* b) {
    return commutes(PauliString::from_text(a), PauliString::from_text(b));
  };
  CHECK(c("XI", "IX"));
  CHECK_FALSE(c("X", "Z"));
  CHECK(c("XX", "YY"));
  CHECK_THROWS_AS(c("XX", "X"), ValidationError);
}

TEST_CASE("commutation agrees with the dense commutator exhaustively, n <= 3") {
  for (int n = 1; n <= 3; ++n) {
    const pauli_bits total = pauli_bits{1} << (2 * n);
    for (pauli_bits pb = 0; pb < total; ++pb) {
      const Mat dp = dense_pauli(pb, n);
      for (pauli_bits qb = 0; qb < total; ++qb) {
        const Mat dq = dense_pauli(qb, n);
        const double comm = max_abs_diff(matmul(dp, dq), matmul(dq, dp));
        CHECK(bits::commute(pb, qb) == (comm < 1e-12));
      }
    }
  }
}

TEST_CASE("product examples") {
  auto prod = [](const char* a, const char* b) {
    return product(PauliString::from_text(a), PauliString::from_text(b));
  };
  PhasedPauli xx = prod("X", "X");
  CHECK(xx.pauli.is_identity());
  CHECK(xx.phase() == cx(1.0, 0.0));

  PhasedPauli xy = prod("X", "Y");
  CHECK(xy.pauli == PauliString::from_text("Z"));
  CHECK(xy.phase() == cx(0.0, 1.0));

  PhasedPauli big = prod("XY", "YX");
  CHECK(big.pauli == PauliString::from_text("ZZ"));
  CHECK(big.phase() == cx(1.0, 0.0));

  // Identity is neutral.
  PhasedPauli idp = prod("II", "XZ");
  CHECK(idp.pauli == PauliString::from_text("XZ"));
  CHECK(idp.phase_exponent == 0);
}

TEST_CASE("product matches dense multiplication exhaustively, n <= 3") {
  for (int n = 1; n <= 3; ++n) {
    const pauli_bits total = pauli_bits{1} << (2 * n);
    for (pauli_bits pb = 0; pb < total; ++pb) {
      const PauliString p(pb, n);
      const Mat dp = dense_pauli(pb, n);
      for (pauli_bits qb = 0; qb < total; ++qb) {
        const PauliString q(qb, n);
        const PhasedPauli r = product(p, q);
        Mat expect = matmul(dp, dense_pauli(qb, n));
        Mat got = dense_pauli(r.pauli.bits(), n);
        const cx phase = r.phase();
        for (auto& v : got.a) v *= phase;
        CHECK(max_abs_diff(expect, got) < 1e-12);
      }
    }
  }
}

TEST_CASE("product phases are antisymmetric exactly on anticommuting pairs") {
  for (int n = 1; n <= 3; ++n) {
    const pauli_bits total = pauli_bits{1} << (2 * n);
    for (pauli_bits pb = 0; pb < total; ++pb) {
      for (pauli_bits qb = 0; qb < total; ++qb) {
        const PauliString p(pb, n), q(qb, n);
        const int kpq = product(p, q).phase_exponent;
        const int kqp = product(q, p).phase_exponent;
        const bool flipped = ((kpq - kqp) & 3) == 2;
        CHECK(flipped == !commutes(p, q));
      }
    }
  }
}

TEST_CASE("permutation action") {
  const PauliString ixi = PauliString::from_text("IXI");
  // Left shift of the chain: the letter at site 1 moves to site 0.
  const Permutation t_left = Permutation::cyclic_shift(3, -1);
  CHECK(apply_permutation(ixi, t_left) == PauliString::from_text("XII"));

  CHECK(apply_permutation(PauliString::from_text("XYZ"), Permutation::identity(3)) ==
        PauliString::from_text("XYZ"));

  const Permutation swap02({2, 1, 0});
  CHECK(apply_permutation(PauliString::from_text("XIZ"), swap02) ==
        PauliString::from_text("ZIX"));

  CHECK_THROWS_AS(Permutation({0, 0, 1}), ValidationError);
  CHECK_THROWS_AS(apply_permutation(ixi, Permutation::identity(4)), ValidationError);
}

TEST_CASE("permutations form a group action and preserve weight") {
  std::mt19937_64 rng(7);
  const int n = 8;
  auto random_perm = [&]() {
    std::vector<std::uint8_t> im(n);
    for (int i = 0; i < n; ++i) im[i] = static_cast<std::uint8_t>(i);
    std::shuffle(im.begin(), im.end(), rng);
    return Permutation(im);
  };
  std::uniform_int_distribution<std::uint64_t> dist(0, (std::uint64_t{1} << (2 * n)) - 1);
  for (int trial = 0; trial < 200; ++trial) {
    const PauliString s(dist(rng), n);
    const Permutation a = random_perm(), b = random_perm();
    const PauliString lhs = apply_permutation(apply_permutation(s, a), b);
    const PauliString rhs = apply_permutation(s, b.compose(a));
    CHECK(lhs == rhs);
    CHECK(apply_permutation(s, a).weight() == s.weight());
  }
}

TEST_CASE("site rotation matches the shift permutation") {
  std::mt19937_64 rng(11);
  for (int n : {3, 5, 8, 33}) {
    std::uniform_int_distribution<std::uint64_t> dist(0, 0xffffffffffffffffULL);
    for (int trial = 0; trial < 50; ++trial) {
      pauli_bits b = dist(rng);
      if (n < 32) b &= (pauli_bits{1} << (2 * n)) - 1;
      else b = (pauli_bits{dist(rng)} << 64 | b) & ((pauli_bits{1} << (2 * n)) - 1);
      const int amount = static_cast<int>(dist(rng) % n);
      CHECK(bits::rotate_sites(b, amount, n) ==
            apply_permutation_bits(b, Permutation::cyclic_shift(n, amount)));
    }
  }
}

TEST_CASE("decimal key rendering round trips") {
  CHECK(to_decimal(0) == "0");
  CHECK(to_decimal(27) == "27");
  const pauli_bits big = (pauli_bits{0x0123456789abcdefULL} << 64) | 0xfedcba9876543210ULL;
  CHECK(parse_decimal_u128(to_decimal(big)) == big);
  CHECK_THROWS_AS(parse_decimal_u128("12x"), ValidationError);
  CHECK_THROWS_AS(parse_decimal_u128("999999999999999999999999999999999999999999"),
                  OverflowError);
}
