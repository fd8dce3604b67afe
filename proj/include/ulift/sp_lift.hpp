#pragma once

#include "ulift/certificate.hpp"
#include "ulift/sl_lift.hpp"
#include "ulift/sp_extend.hpp"

namespace ulift {

namespace detail {

inline IntMatrix diag2(BigInt a, BigInt b) {
  IntMatrix d(2, 2);
  d(0, 0) = std::move(a);
  d(1, 1) = std::move(b);
  return d;
}

// Reduces g to diag(1, .., t, 1, .., t^{-1}) mod n by symplectic left and
// right multiplications, pivot by pivot, then lifts the leftover SL_2 part.
inline IntMatrix sp_lift_matrix(IntMatrix const& m, Ideal const& n) {
  require(m.is_square() && m.rows() % 2 == 0 && m.rows() > 0,
          ErrorCode::BadShape, "sp_lift: matrix must be 2k x 2k");
  require_nonzero(n, "sp_lift");
  std::size_t k = m.rows() / 2;
  require(is_symplectic(m, SymplecticForm{k}, n), ErrorCode::NotSymplecticModN,
          "sp_lift: matrix is not symplectic modulo n");
  if (n.is_unit()) {
    return IntMatrix::identity(2 * k);
  }
  if (k == 1) {
    return sl_lift_matrix(m, n);
  }
  IntMatrix g = mat_mod(m, n);
  IntMatrix L = IntMatrix::identity(2 * k);
  IntMatrix R = IntMatrix::identity(2 * k);
  auto right = [&](IntMatrix const& x) {
    g = mat_mod(g * x, n);
    R = R * x;
  };
  auto left = [&](IntMatrix const& x) {
    g = mat_mod(x * g, n);
    L = x * L;
  };
  for (std::size_t p = 0; p < k; ++p) {
    // Unit pivot.  Entries b_{p,q}, q < p, vanish by symplecticity.
    if (!is_unit_mod(g(p, p), n)) {
      std::vector<BigInt> tail;
      for (std::size_t j = p; j < k; ++j) {
        tail.push_back(g(p, j));
      }
      for (std::size_t j = p; j < k; ++j) {
        tail.push_back(g(p, k + j));
      }
      ShiftWitness w = usc_shift_mod(tail, n);
      std::vector<BigInt> eps(k, BigInt(0)), f(k, BigInt(0));
      eps[p] = 1;
      std::size_t c = 0;
      for (std::size_t j = p + 1; j < k; ++j) {
        eps[j] = w.coefficients[c++];
      }
      for (std::size_t j = p; j < k; ++j) {
        f[j] = w.coefficients[c++];
      }
      right(unit_column_conditioner(k, p, eps, f));
    }
    ensure(is_unit_mod(g(p, p), n), "sp_lift: pivot is not a unit");
    if (p + 1 < k) {
      BigInt t = g(p, p);
      if (t != 1) {
        IntMatrix u2 = sl_lift_matrix(diag2(mod_inverse(t, n), t), n);
        right(embed_sl_pair_block(embed_2x2(u2, k, p, p + 1)));
      }
      ensure(g(p, p) == 1, "sp_lift: pivot not normalized");
      IntMatrix v = IntMatrix::identity(k);
      for (std::size_t j = p + 1; j < k; ++j) {
        v(p, j) = n.reduce(-g(p, j));
      }
      right(embed_sl_pair_block(v));
      IntMatrix w = IntMatrix::identity(k);
      for (std::size_t i = p + 1; i < k; ++i) {
        w(i, p) = n.reduce(-g(i, p));
      }
      left(embed_sl_pair_block(w));
    }
    BigInt tinv = mod_inverse(g(p, p), n);
    IntMatrix s(k, k);
    for (std::size_t j = 0; j < k; ++j) {
      BigInt const& b = g(p, k + j);
      if (j < p) {
        ensure(b == 0, "sp_lift: stray entry in B");
        continue;
      }
      s(p, j) = n.reduce(-tinv * b);
      s(j, p) = s(p, j);
    }
    right(embed_symmetric_shear(s, true));
    IntMatrix t(k, k);
    for (std::size_t j = 0; j < k; ++j) {
      BigInt const& c = g(k + j, p);
      if (j < p) {
        ensure(c == 0, "sp_lift: stray entry in C");
        continue;
      }
      t(j, p) = n.reduce(-tinv * c);
      t(p, j) = t(j, p);
    }
    left(embed_symmetric_shear(t, false));
  }
  BigInt t = g(k - 1, k - 1);
  IntMatrix h = IntMatrix::identity(2 * k);
  if (t != 1) {
    IntMatrix h2 = sl_lift_matrix(diag2(t, mod_inverse(t, n)), n);
    h = embed_2x2(h2, 2 * k, k - 1, 2 * k - 1);
  }
  ensure(congruent(h, g, n), "sp_lift: reduction did not reach a diagonal");
  IntMatrix out = symplectic_inverse(L) * h * symplectic_inverse(R);
  ensure(is_symplectic(out) && congruent(out, m, n),
         "sp_lift: lift failed verification");
  return out;
}

}  // namespace detail

// A matrix in Sp_2k(Z) reducing to m modulo n.
inline LiftCertificate sp_lift(IntMatrix const& m, Ideal const& n) {
  IntMatrix out = detail::sp_lift_matrix(m, n);
  return make_certificate(LiftKind::sp_lift, ModularMatrix{m, n},
                          std::move(out));
}

}  // namespace ulift
