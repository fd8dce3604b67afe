#pragma once

#include <vector>

#include "ulift/certificate.hpp"
#include "ulift/multi_lift.hpp"

namespace ulift {

namespace detail {

inline LiftCertificate surject(std::vector<ProjPoint> const& points,
                               bool symplectic) {
  require(!points.empty(), ErrorCode::BadShape, "surject: no points");
  require(!symplectic || points.size() % 2 == 0, ErrorCode::BadShape,
          "surject: symplectic case needs an even number of points");
  for (auto const& p : points) {
    p.validate();
  }
  CongruenceTarget t = target_from_points(points);
  IntMatrix out = symplectic ? sp_multi_matrix(t) : sl_multi_matrix(t);
  bool ok = false;
  std::vector<BigInt> lambdas = row_class_witnesses(out, points, &ok);
  ensure(ok, "surject: a row misses its class");
  return make_certificate(
      symplectic ? LiftKind::sp_surject : LiftKind::sl_surject, points,
      std::move(out), std::move(lambdas));
}

}  // namespace detail

// A matrix in SL_{k+1}(Z) whose row i lies in the class of points[i].
inline LiftCertificate sl_surject_projective(
    std::vector<ProjPoint> const& points) {
  return detail::surject(points, false);
}

// A matrix in Sp_2k(Z) whose row i lies in the class of points[i].
inline LiftCertificate sp_surject_projective(
    std::vector<ProjPoint> const& points) {
  return detail::surject(points, true);
}

}  // namespace ulift
