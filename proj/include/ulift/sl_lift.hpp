#pragma once

#include <vector>

#include "ulift/certificate.hpp"
#include "ulift/matrix.hpp"
#include "ulift/unital.hpp"

namespace ulift {

namespace detail {

// Reduces m to the identity mod n by transvections, then multiplies the
// inverse transvections back together over Z.
inline IntMatrix sl_lift_matrix(IntMatrix const& m, Ideal const& n) {
  require(m.is_square(), ErrorCode::NotSquare, "sl_lift: matrix not square");
  require_nonzero(n, "sl_lift");
  require(is_sl_mod(m, n), ErrorCode::NotSLModN,
          "sl_lift: determinant is not 1 modulo n");
  std::size_t k = m.rows();
  if (n.is_unit() || k == 0) {
    return IntMatrix::identity(k);
  }
  BigInt const& nn = n.modulus();
  IntMatrix a = mat_mod(m, n);
  std::vector<ElementaryOp> left, right;
  auto reduce = [&] { a = mat_mod(a, n); };
  auto row_op = [&](std::size_t dst, std::size_t src, BigInt const& c) {
    BigInt r = mod(c, nn);
    if (r == 0) {
      return;
    }
    left.push_back(ElementaryOp::add_row(dst, src, r));
    left.back().apply_left(a);
    reduce();
  };
  auto col_op = [&](std::size_t src, std::size_t dst, BigInt const& c) {
    BigInt r = mod(c, nn);
    if (r == 0) {
      return;
    }
    right.push_back(ElementaryOp::add_column(src, dst, r));
    right.back().apply_right(a);
    reduce();
  };
  for (std::size_t p = 0; p + 1 < k; ++p) {
    if (!is_unit_mod(a(p, p), n)) {
      std::vector<BigInt> tail(a.row(p).begin() + p, a.row(p).end());
      ShiftWitness w = usc_shift_mod(tail, n);
      for (std::size_t j = 0; j < w.coefficients.size(); ++j) {
        col_op(p + 1 + j, p, w.coefficients[j]);
      }
    }
    BigInt u = a(p, p);
    if (u != 1) {
      // diag(u^{-1}, u) on rows p, p+1 as a word in transvections
      BigInt v = mod_inverse(u, n);
      row_op(p, p + 1, -1);
      row_op(p + 1, p, 1);
      row_op(p, p + 1, -1);
      row_op(p, p + 1, v);
      row_op(p + 1, p, -u);
      row_op(p, p + 1, v);
    }
    ensure(a(p, p) == 1, "sl_lift: pivot not normalized");
    for (std::size_t i = p + 1; i < k; ++i) {
      row_op(i, p, -a(i, p));
    }
    for (std::size_t j = p + 1; j < k; ++j) {
      col_op(p, j, -a(p, j));
    }
  }
  ensure(a == IntMatrix::identity(k), "sl_lift: reduction did not finish");
  IntMatrix out = IntMatrix::identity(k);
  for (auto const& op : left) {
    ElementaryOp inv = op.inverse();
    inv.coefficient = mod(inv.coefficient, nn);
    inv.apply_right(out);
  }
  for (auto it = right.rbegin(); it != right.rend(); ++it) {
    ElementaryOp inv = it->inverse();
    inv.coefficient = mod(inv.coefficient, nn);
    inv.apply_right(out);
  }
  ensure(det(out) == 1 && congruent(out, m, n),
         "sl_lift: lift failed verification");
  return out;
}

}  // namespace detail

// A matrix in SL_k(Z) reducing to m modulo n.
inline LiftCertificate sl_lift(IntMatrix const& m, Ideal const& n) {
  IntMatrix out = detail::sl_lift_matrix(m, n);
  return make_certificate(LiftKind::sl_lift, ModularMatrix{m, n},
                          std::move(out));
}

}  // namespace ulift
