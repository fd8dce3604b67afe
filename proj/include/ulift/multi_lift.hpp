#pragma once

#include <vector>

#include "ulift/certificate.hpp"
#include "ulift/sl_lift.hpp"
#include "ulift/sp_extend.hpp"
#include "ulift/unital.hpp"

namespace ulift {

namespace detail {

inline void reduce_row(IntMatrix& m, std::size_t i, Ideal const& n,
                       std::size_t c0 = 0, std::size_t c1 = SIZE_MAX) {
  if (n.is_unit()) {
    return;
  }
  for (std::size_t j = c0; j < std::min(c1, m.cols()); ++j) {
    m(i, j) = n.reduce(m(i, j));
  }
}

inline IntMatrix diagonal(std::span<BigInt const> d) {
  IntMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) {
    m(i, i) = d[i];
  }
  return m;
}

// Diagonal units, off-diagonal entries in the row ideal, for rows < upto.
inline bool pivot_rows_ok(IntMatrix const& a, std::span<Ideal const> ideals,
                          std::size_t upto, std::size_t width) {
  for (std::size_t l = 0; l < upto; ++l) {
    if (ideals[l].is_unit()) {
      continue;
    }
    if (!is_unit_mod(a(l, l), ideals[l])) {
      return false;
    }
    for (std::size_t j = 0; j < width; ++j) {
      if (j != l && !ideals[l].contains(a(l, j))) {
        return false;
      }
    }
  }
  return true;
}

inline std::pair<BigInt, BigInt> partition_of_unity(Ideal const& a,
                                                    Ideal const& b) {
  Egcd e = egcd(a.modulus(), b.modulus());
  ensure(e.g == 1, "partition of unity: ideals not coprime");
  return {e.x * a.modulus(), e.y * b.modulus()};
}

inline IntMatrix sl_multi_matrix(CongruenceTarget const& target) {
  validate_target(target, false);
  std::size_t n = target.rows.rows();
  auto const& ideals = target.ideals;
  Ideal big = product(ideals);
  if (big.is_unit()) {
    return IntMatrix::identity(n);
  }
  IntMatrix a = target.rows;
  for (std::size_t i = 0; i < n; ++i) {
    reduce_row(a, i, ideals[i]);
  }
  IntMatrix rinv = IntMatrix::identity(n);
  auto col_op = [&](std::size_t src, std::size_t dst, BigInt const& c) {
    if (c == 0) {
      return;
    }
    ElementaryOp op = ElementaryOp::add_column(src, dst, c);
    op.apply_right(a);
    op.inverse().apply_left(rinv);
    for (std::size_t i = 0; i < n; ++i) {
      reduce_row(a, i, ideals[i]);
    }
  };
  BigInt done = 1;
  for (std::size_t i = 0; i < n; ++i) {
    Ideal const& ii = ideals[i];
    if (ii.is_unit()) {
      continue;
    }
    if (!is_unit_mod(a(i, i), ii)) {
      ShiftWitness w = bring_unit(a.row(i), i, ii, Ideal(done));
      for (std::size_t j = 0, c = 0; j < n; ++j) {
        if (j != i) {
          col_op(j, i, w.coefficients[c++]);
        }
      }
    }
    BigInt z = mod_inverse(a(i, i), ii);
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i) {
        col_op(i, j, ii.reduce(-z * a(i, j)));
      }
    }
    done *= ii.modulus();
    ensure(pivot_rows_ok(a, ideals, i + 1, n),
           "sl multi-lift: pivot invariants broken");
  }
  std::vector<BigInt> diag;
  for (std::size_t i = 0; i < n; ++i) {
    diag.push_back(a(i, i));
  }
  std::vector<BigInt> d = diag_det_one(diag, ideals);
  IntMatrix b0 = sl_lift_matrix(diagonal(d), big);
  ensure(rows_congruent(b0, a, ideals), "sl multi-lift: diagonal lift off");
  return b0 * rinv;
}

inline IntMatrix sp_multi_matrix(CongruenceTarget const& target) {
  validate_target(target, true);
  std::size_t n = target.rows.rows();
  std::size_t k = n / 2;
  auto const& ideals = target.ideals;
  std::span<Ideal const> top(ideals.data(), k);
  std::span<Ideal const> bottom(ideals.data() + k, k);
  Ideal ntop = product(top);
  Ideal nbot = product(bottom);
  if ((ntop * nbot).is_unit()) {
    return IntMatrix::identity(n);
  }
  // Sp_2 = SL_2, and a 1x1 top block cannot absorb a determinant.
  if (k == 1) {
    return sl_multi_matrix(target);
  }
  IntMatrix m = target.rows;
  IntMatrix r = IntMatrix::identity(n);
  auto reduce_rows = [&](bool tops, bool bottoms) {
    for (std::size_t i = 0; i < n; ++i) {
      if ((i < k && tops) || (i >= k && bottoms)) {
        reduce_row(m, i, ideals[i]);
      }
    }
  };
  auto right = [&](IntMatrix const& x, bool tops, bool bottoms) {
    m = m * x;
    r = r * x;
    reduce_rows(tops, bottoms);
  };
  // Column `pivot` of the conditioner, read off a bring_unit witness.
  auto conditioner = [&](std::size_t pivot, ShiftWitness const& w) {
    std::vector<BigInt> eps(k, BigInt(0)), f(k, BigInt(0));
    eps[pivot] = 1;
    for (std::size_t c = 0, idx = 0; c < n; ++c) {
      if (c == pivot) {
        continue;
      }
      BigInt const& x = w.coefficients[idx++];
      if (c < k) {
        eps[c] = x;
      } else {
        f[c - k] = x;
      }
    }
    return unit_column_conditioner(k, pivot, eps, f);
  };
  reduce_rows(true, true);

  if (ntop.is_unit()) {
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        m(i, j) = i == j ? 1 : 0;
      }
    }
  } else {
    // Top rows: unit diagonal, off-diagonal entries of A in the row ideal.
    BigInt done = 1;
    for (std::size_t i = 0; i < k; ++i) {
      Ideal const& ii = ideals[i];
      if (ii.is_unit()) {
        continue;
      }
      if (!is_unit_mod(m(i, i), ii)) {
        ShiftWitness w = bring_unit(m.row(i), i, ii, Ideal(done));
        right(conditioner(i, w), true, true);
      }
      BigInt z = mod_inverse(m(i, i), ii);
      IntMatrix u = IntMatrix::identity(k);
      for (std::size_t j = 0; j < k; ++j) {
        if (j != i) {
          u(i, j) = ii.reduce(-z * m(i, j));
        }
      }
      right(embed_sl_pair_block(u), true, true);
      done *= ii.modulus();
      ensure(pivot_rows_ok(m, ideals, i + 1, k),
             "sp multi-lift: pivot invariants broken");
    }
    std::vector<BigInt> diag;
    for (std::size_t i = 0; i < k; ++i) {
      diag.push_back(m(i, i));
    }
    std::vector<BigInt> d = diag_det_one(diag, top);
    IntMatrix at = sl_lift_matrix(diagonal(d), ntop);
    ensure(rows_congruent(at, m.block(0, 0, k, k), top),
           "sp multi-lift: diagonal lift off");
    m.set_block(0, 0, at);
    right(embed_sl_pair_block(inverse_unimodular(at)), true, true);
    ensure(m.block(0, 0, k, k) == IntMatrix::identity(k),
           "sp multi-lift: top-left block not the identity");
    // Make B symmetric, keeping each row's class.
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = i + 1; j < k; ++j) {
        auto [qi, qj] = partition_of_unity(ideals[i], ideals[j]);
        BigInt s = m(i, k + j) + qi * (m(j, k + i) - m(i, k + j));
        s = mod(s, ideals[i].modulus() * ideals[j].modulus());
        m(i, k + j) = s;
        m(j, k + i) = s;
      }
    }
    right(embed_symmetric_shear(-m.block(0, k, k, k), true), true, true);
  }
  ensure(m.block(0, 0, k, k) == IntMatrix::identity(k) &&
             m.block(0, k, k, k) == IntMatrix(k, k),
         "sp multi-lift: top rows not cleared");

  if (nbot.is_unit()) {
    for (std::size_t i = k; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        m(i, j) = i == j ? 1 : 0;
      }
    }
  } else {
    // From here on the top-left block U is kept exact.
    BigInt done = 1;
    for (std::size_t i = 0; i < k; ++i) {
      Ideal const& ii = ideals[k + i];
      if (ii.is_unit()) {
        continue;
      }
      if (!is_unit_mod(m(k + i, i), ii)) {
        ShiftWitness w = bring_unit(m.row(k + i), i, ii, Ideal(done));
        right(conditioner(i, w), false, true);
      }
      done *= ii.modulus();
    }
    IntMatrix s(k, k);
    for (std::size_t i = 0; i < k; ++i) {
      Ideal const& ii = ideals[k + i];
      if (ii.is_unit()) {
        continue;
      }
      ensure(is_unit_mod(m(k + i, i), ii), "sp multi-lift: C pivot lost");
      // c s + d = 1 mod I with s in the top ideal product
      BigInt inv = mod_inverse(m(k + i, i) * ntop.modulus(), ii);
      BigInt sigma = ii.reduce((1 - m(k + i, k + i)) * inv);
      s(i, i) = ntop.modulus() * sigma;
    }
    right(embed_symmetric_shear(s, true), false, true);
    // U S lies in the top ideal product: drop it.
    m.set_block(0, k, IntMatrix(k, k));
    for (std::size_t i = 0; i < k; ++i) {
      ensure(ideals[k + i].contains(m(k + i, k + i) - 1),
             "sp multi-lift: D diagonal not 1");
      m(k + i, k + i) = 1;
    }
    IntMatrix v = IntMatrix::identity(k);
    if (k > 1) {
      CongruenceTarget dt{m.block(k, k, k, k),
                          std::vector<Ideal>(bottom.begin(), bottom.end())};
      v = sl_multi_matrix(dt);
    }
    ensure(rows_congruent(v, m.block(k, k, k, k), bottom),
           "sp multi-lift: D lift off");
    m.set_block(k, k, v);
    right(embed_sl_pair_block(transpose(v)), false, true);
    ensure(m.block(k, k, k, k) == IntMatrix::identity(k),
           "sp multi-lift: bottom-right block not the identity");
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = i + 1; j < k; ++j) {
        auto [qi, qj] = partition_of_unity(ideals[k + i], ideals[k + j]);
        BigInt c = m(k + i, j) + qi * (m(k + j, i) - m(k + i, j));
        c = mod(c, ideals[k + i].modulus() * ideals[k + j].modulus());
        m(k + i, j) = c;
        m(k + j, i) = c;
      }
    }
    right(embed_symmetric_shear(-m.block(k, 0, k, k), false), false, true);
  }
  ensure(m.block(k, 0, k, k) == IntMatrix(k, k) &&
             m.block(k, k, k, k) == IntMatrix::identity(k) &&
             m.block(0, k, k, k) == IntMatrix(k, k),
         "sp multi-lift: bottom rows not cleared");

  // V = U^{-1} mod the top product, V = I mod the bottom product.
  IntMatrix u = m.block(0, 0, k, k);
  IntMatrix uinv = inverse_unimodular(u);
  IntMatrix w(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      w(i, j) = crt_pair(uinv(i, j), ntop, i == j ? 1 : 0, nbot);
    }
  }
  IntMatrix v = sl_lift_matrix(w, ntop * nbot);
  right(embed_sl_pair_block(v), true, true);
  ensure(rows_congruent(m, IntMatrix::identity(n), ideals),
         "sp multi-lift: did not reach the identity");
  return symplectic_inverse(r);
}

}  // namespace detail

inline LiftCertificate sl_multi_congruence_lift(CongruenceTarget const& t) {
  IntMatrix out = detail::sl_multi_matrix(t);
  return make_certificate(LiftKind::sl_multi, t, std::move(out));
}

inline LiftCertificate sp_multi_congruence_lift(CongruenceTarget const& t) {
  IntMatrix out = detail::sp_multi_matrix(t);
  return make_certificate(LiftKind::sp_multi, t, std::move(out));
}

}  // namespace ulift
