#pragma once

#include <numeric>
#include <vector>

#include "ulift/matrix.hpp"

namespace ulift {

namespace detail {

inline std::vector<std::size_t> transposition(std::size_t k, std::size_t a,
                                              std::size_t b) {
  std::vector<std::size_t> p(k);
  std::iota(p.begin(), p.end(), 0);
  std::swap(p[a], p[b]);
  return p;
}

inline std::vector<BigInt> row_times(std::span<BigInt const> a,
                                     IntMatrix const& m) {
  std::vector<BigInt> out(m.cols(), BigInt(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      out[j] += a[i] * m(i, j);
    }
  }
  return out;
}

// First row a with a[0] = +-1:
//   [[A, AB], [0, A^{-T}]],  A = diag(a1, a1^{-1}, 1, ...) + sum_j a_j E_{1j},
//   B symmetric, supported on its first row and column.
inline IntMatrix complete_row_unit_first(std::span<BigInt const> a,
                                         std::size_t k) {
  BigInt const& a1 = a[0];
  IntMatrix A = IntMatrix::identity(k);
  A(0, 0) = a1;
  if (k >= 2) {
    A(1, 1) = a1;
  }
  for (std::size_t j = 1; j < k; ++j) {
    A(0, j) += a[j];
  }
  IntMatrix B(k, k);
  B(0, 0) = a1 * a[k];
  for (std::size_t j = 1; j < k; ++j) {
    B(0, 0) -= a[j] * a[k + j];
    B(0, j) = a1 * a[k + j];
    B(j, 0) = B(0, j);
  }
  IntMatrix g(2 * k, 2 * k);
  g.set_block(0, 0, A);
  g.set_block(0, k, A * B);
  g.set_block(k, k, transpose(inverse_unimodular(A)));
  return g;
}

inline bool is_pm_one(BigInt const& x) { return x == 1 || x == -1; }

// Symplectic matrix with first row a; a must contain a +-1.
inline IntMatrix complete_row(std::span<BigInt const> a, std::size_t k) {
  std::size_t u = a.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (is_pm_one(a[i])) {
      u = i;
      break;
    }
  }
  require(u < a.size(), ErrorCode::NoUnitEntry,
          "sp_extend: no entry equal to +1 or -1");
  if (u == 0) {
    return complete_row_unit_first(a, k);
  }
  IntMatrix move;
  if (u < k) {
    move = embed_sp_permutation(transposition(k, 0, u),
                                PermutationFlavor::diagonal);
  } else {
    move = embed_sp_permutation(transposition(k, 0, u - k),
                                PermutationFlavor::off_diagonal);
  }
  std::vector<BigInt> moved = row_times(a, move);
  ensure(is_pm_one(moved[0]), "sp_extend: unit not moved to the front");
  return complete_row_unit_first(moved, k) * symplectic_inverse(move);
}

// [[E, 0], [S E, E^{-T}]] with column `pivot` equal to (eps; f).
// eps[pivot] must be 1; E is the identity except for column `pivot`,
// S = e_p f^T + f e_p^T - (f . eps) e_p e_p^T.
inline IntMatrix unit_column_conditioner(std::size_t k, std::size_t pivot,
                                         std::span<BigInt const> eps,
                                         std::span<BigInt const> f) {
  ensure(eps[pivot] == 1, "conditioner: pivot entry must be 1");
  IntMatrix E = IntMatrix::identity(k);
  IntMatrix Einv_t = IntMatrix::identity(k);
  for (std::size_t j = 0; j < k; ++j) {
    if (j != pivot) {
      E(j, pivot) = eps[j];
      Einv_t(pivot, j) = -eps[j];
    }
  }
  BigInt dot = 0;
  for (std::size_t j = 0; j < k; ++j) {
    dot += f[j] * eps[j];
  }
  IntMatrix S(k, k);
  for (std::size_t j = 0; j < k; ++j) {
    S(pivot, j) += f[j];
    S(j, pivot) += f[j];
  }
  S(pivot, pivot) -= dot;
  IntMatrix g(2 * k, 2 * k);
  g.set_block(0, 0, E);
  g.set_block(k, 0, S * E);
  g.set_block(k, k, Einv_t);
  return g;
}

}  // namespace detail

// A matrix in Sp_2k(Z) whose row `position` (0-based) is `row`.
inline IntMatrix sp_extend_row(std::span<BigInt const> row, std::size_t k,
                               std::size_t position) {
  require(k >= 1 && row.size() == 2 * k, ErrorCode::BadLength,
          "sp_extend_row: row length must be 2k");
  require(position < 2 * k, ErrorCode::OutOfRange,
          "sp_extend_row: position out of range");
  if (position == 0) {
    return detail::complete_row(row, k);
  }
  if (position < k) {
    IntMatrix n = embed_sp_permutation(detail::transposition(k, 0, position),
                                       PermutationFlavor::diagonal);
    return n * detail::complete_row(row, k);
  }
  // Row k+i of [[0, P], [-P, 0]] g is minus the first row of g.
  std::vector<BigInt> neg;
  for (auto const& x : row) {
    neg.push_back(-x);
  }
  IntMatrix n = embed_sp_permutation(detail::transposition(k, 0, position - k),
                                     PermutationFlavor::off_diagonal);
  return n * detail::complete_row(neg, k);
}

// A matrix in Sp_2k(Z) whose column `position` (0-based) is `col`.
inline IntMatrix sp_extend_column(std::span<BigInt const> col, std::size_t k,
                                  std::size_t position) {
  require(k >= 1 && col.size() == 2 * k, ErrorCode::BadLength,
          "sp_extend_column: column length must be 2k");
  return transpose(sp_extend_row(col, k, position));
}

}  // namespace ulift
