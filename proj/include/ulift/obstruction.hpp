#pragma once

#include "ulift/primes.hpp"
#include "ulift/projective.hpp"

namespace ulift {

enum class RowBand { first_p, last_q };

// Value of x_1^2 + .. + x_p^2 - x_{p+1}^2 - .. - x_{p+q}^2 mod r.
inline BigInt quadratic_form_value(std::span<BigInt const> x, std::size_t p,
                                   BigInt const& r) {
  BigInt v = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    BigInt sq = x[i] * x[i];
    v += i < p ? sq : BigInt(-sq);
  }
  return mod(v, r);
}

// True when no row of the given band of a matrix in O_{p,q}(Z) can reduce
// into the class of `point`: the form value is not eps * (unit square).
inline bool orthogonal_obstruction(ProjPoint const& point, std::size_t p,
                                   std::size_t q, RowBand band) {
  require(point.length() == p + q, ErrorCode::BadLength,
          "orthogonal_obstruction: point length must be p + q");
  BigInt const& r = point.ideal.modulus();
  require(r > 2 && r < factorization_budget() && is_prime(r),
          ErrorCode::NotPrimeModulus,
          "orthogonal_obstruction: modulus must be an odd prime");
  BigInt v = quadratic_form_value(point.coords, p, r);
  if (band == RowBand::last_q) {
    v = mod(-v, r);
  }
  if (v == 0) {
    return true;
  }
  return pow_mod(v, (r - 1) / 2, r) != 1;
}

}  // namespace ulift
