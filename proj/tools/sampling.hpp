#pragma once

#include <random>

#include "ulift/matrix.hpp"

namespace ulift::cli {

// Uniform over SL_k(Z/n): a random matrix with unit determinant, first row
// rescaled.
inline IntMatrix random_sl_mod(std::mt19937_64& rng, std::size_t k,
                               Ideal const& n) {
  BigInt const& m = n.modulus();
  std::uniform_int_distribution<std::uint64_t> dist(
      0, static_cast<std::uint64_t>(m - 1));
  while (true) {
    IntMatrix a(k, k);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        a(i, j) = dist(rng);
      }
    }
    BigInt d = det(a);
    if (!is_unit_mod(d, n)) {
      continue;
    }
    BigInt dinv = mod_inverse(d, n);
    for (std::size_t j = 0; j < k; ++j) {
      a(0, j) = n.reduce(a(0, j) * dinv);
    }
    return a;
  }
}

// Product of random symmetric shears and block-diagonal SL factors mod n.
inline IntMatrix random_sp_mod(std::mt19937_64& rng, std::size_t k,
                               Ideal const& n) {
  BigInt const& m = n.modulus();
  std::uniform_int_distribution<std::uint64_t> dist(
      0, static_cast<std::uint64_t>(m - 1));
  auto sym = [&] {
    IntMatrix s(k, k);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = i; j < k; ++j) {
        s(i, j) = dist(rng);
        s(j, i) = s(i, j);
      }
    }
    return s;
  };
  IntMatrix g = IntMatrix::identity(2 * k);
  for (int round = 0; round < 2; ++round) {
    IntMatrix u = random_sl_mod(rng, k, n);
    IntMatrix block(2 * k, 2 * k);
    block.set_block(0, 0, u);
    // (U^T)^{-1} mod n via the adjugate, since det U = 1 mod n.
    block.set_block(k, k, mat_mod(transpose(adjugate(u)), n));
    g = mat_mod(g * embed_symmetric_shear(sym(), true), n);
    g = mat_mod(g * block, n);
    g = mat_mod(g * embed_symmetric_shear(sym(), false), n);
  }
  return g;
}

}  // namespace ulift::cli
