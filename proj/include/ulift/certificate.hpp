#pragma once

#include <string>
#include <variant>
#include <vector>

#include "ulift/matrix.hpp"
#include "ulift/projective.hpp"

namespace ulift {

// Row i of the answer must agree with rows(i, .) modulo ideals[i].
struct CongruenceTarget {
  IntMatrix rows;
  std::vector<Ideal> ideals;
};

struct ModularMatrix {
  IntMatrix matrix;
  Ideal modulus;
};

enum class LiftKind {
  sl_lift,
  sp_lift,
  sl_multi,
  sp_multi,
  sl_surject,
  sp_surject,
};

constexpr std::string_view to_string(LiftKind k) {
  switch (k) {
    case LiftKind::sl_lift: return "sl_lift";
    case LiftKind::sp_lift: return "sp_lift";
    case LiftKind::sl_multi: return "sl_multi_congruence_lift";
    case LiftKind::sp_multi: return "sp_multi_congruence_lift";
    case LiftKind::sl_surject: return "sl_surject_projective";
    case LiftKind::sp_surject: return "sp_surject_projective";
  }
  return "unknown";
}

inline bool is_symplectic_kind(LiftKind k) {
  return k == LiftKind::sp_lift || k == LiftKind::sp_multi ||
         k == LiftKind::sp_surject;
}

using CertificateInput =
    std::variant<ModularMatrix, CongruenceTarget, std::vector<ProjPoint>>;

struct Check {
  std::string name;
  bool pass = false;

  friend bool operator==(Check const&, Check const&) = default;
};

struct LiftCertificate {
  LiftKind kind = LiftKind::sl_lift;
  CertificateInput input;
  IntMatrix output;
  std::vector<BigInt> lambdas;
  std::vector<Check> checks;

  bool all_pass() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](Check const& c) { return c.pass; });
  }
};

inline bool is_valid_target(CongruenceTarget const& t, bool symplectic) {
  std::size_t n = t.rows.rows();
  if (!t.rows.is_square() || n == 0 || t.ideals.size() != n) {
    return false;
  }
  if (symplectic && n % 2 != 0) {
    return false;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (t.ideals[i].is_zero() || !is_unital_mod(t.rows.row(i), t.ideals[i])) {
      return false;
    }
  }
  return pairwise_coprime(t.ideals);
}

inline void validate_target(CongruenceTarget const& t, bool symplectic) {
  std::size_t n = t.rows.rows();
  require(t.rows.is_square() && n > 0 && t.ideals.size() == n,
          ErrorCode::BadShape,
          "congruence target must be square with one ideal per row");
  require(!symplectic || n % 2 == 0, ErrorCode::BadShape,
          "symplectic congruence target needs an even size");
  for (auto const& i : t.ideals) {
    require_nonzero(i, "congruence target");
  }
  require(pairwise_coprime(t.ideals), ErrorCode::NonCoprimeModuli,
          "congruence target ideals are not pairwise coprime");
  for (std::size_t i = 0; i < n; ++i) {
    require(is_unital_mod(t.rows.row(i), t.ideals[i]), ErrorCode::RowNotUnital,
            "row " + std::to_string(i) + " is not unital modulo its ideal");
  }
}

inline bool rows_congruent(IntMatrix const& m, IntMatrix const& rows,
                           std::span<Ideal const> ideals) {
  if (m.rows() != rows.rows() || m.cols() != rows.cols() ||
      ideals.size() != m.rows()) {
    return false;
  }
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!ideals[i].contains(m(i, j) - rows(i, j))) {
        return false;
      }
    }
  }
  return true;
}

inline CongruenceTarget target_from_points(std::vector<ProjPoint> const& pts) {
  CongruenceTarget t;
  t.rows = IntMatrix(pts.size(), pts.empty() ? 0 : pts[0].length());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    require(pts[i].length() == pts.size(), ErrorCode::BadShape,
            "each point needs as many coordinates as there are points");
    for (std::size_t j = 0; j < pts[i].length(); ++j) {
      t.rows(i, j) = pts[i].coords[j];
    }
    t.ideals.push_back(pts[i].ideal);
  }
  return t;
}

inline std::vector<BigInt> row_class_witnesses(
    IntMatrix const& m, std::vector<ProjPoint> const& pts, bool* ok) {
  std::vector<BigInt> lambdas;
  *ok = m.rows() == pts.size();
  for (std::size_t i = 0; *ok && i < pts.size(); ++i) {
    if (m.cols() != pts[i].length()) {
      *ok = false;
      break;
    }
    std::vector<BigInt> row(m.row(i).begin(), m.row(i).end());
    ProjPoint image(std::move(row), pts[i].ideal, pts[i].weights);
    Equivalence e = equivalent_points(pts[i], image);
    if (!e.equivalent) {
      *ok = false;
      break;
    }
    lambdas.push_back(e.lambda);
  }
  return lambdas;
}

// Every predicate the certificate claims, recomputed from input and output.
inline std::vector<Check> compute_checks(LiftKind kind,
                                         CertificateInput const& input,
                                         IntMatrix const& out,
                                         std::vector<BigInt> const& lambdas) {
  std::vector<Check> checks;
  bool sp = is_symplectic_kind(kind);
  auto group_check = [&] {
    if (sp) {
      checks.push_back({"symplectic", is_symplectic(out, Ideal::zero())});
    } else {
      checks.push_back({"det_one", out.is_square() && det(out) == 1});
    }
  };
  switch (kind) {
    case LiftKind::sl_lift:
    case LiftKind::sp_lift: {
      auto const* in = std::get_if<ModularMatrix>(&input);
      bool valid = in != nullptr && !in->modulus.is_zero() &&
                   in->matrix.is_square() &&
                   (sp ? is_symplectic(in->matrix, in->modulus)
                       : is_sl_mod(in->matrix, in->modulus));
      checks.push_back({"input_valid", valid});
      checks.push_back({"shape", in != nullptr &&
                                     out.rows() == in->matrix.rows() &&
                                     out.cols() == in->matrix.cols()});
      group_check();
      checks.push_back({"congruent_mod_n",
                        in != nullptr && congruent(out, in->matrix,
                                                   in->modulus)});
      break;
    }
    case LiftKind::sl_multi:
    case LiftKind::sp_multi: {
      auto const* in = std::get_if<CongruenceTarget>(&input);
      checks.push_back({"input_valid", in != nullptr && is_valid_target(*in, sp)});
      checks.push_back({"shape", in != nullptr &&
                                     out.rows() == in->rows.rows() &&
                                     out.cols() == in->rows.cols()});
      group_check();
      checks.push_back({"row_congruence",
                        in != nullptr &&
                            rows_congruent(out, in->rows, in->ideals)});
      break;
    }
    case LiftKind::sl_surject:
    case LiftKind::sp_surject: {
      auto const* in = std::get_if<std::vector<ProjPoint>>(&input);
      bool valid = in != nullptr && !in->empty();
      if (valid) {
        std::vector<Ideal> ideals;
        for (auto const& p : *in) {
          valid = valid && p.length() == in->size();
          ideals.push_back(p.ideal);
        }
        valid = valid && pairwise_coprime(ideals) &&
                (!sp || in->size() % 2 == 0);
      }
      checks.push_back({"input_valid", valid});
      checks.push_back({"shape", in != nullptr && out.rows() == in->size() &&
                                     out.cols() == in->size()});
      group_check();
      bool classes_ok = false;
      if (in != nullptr && valid) {
        row_class_witnesses(out, *in, &classes_ok);
      }
      checks.push_back({"row_classes", classes_ok});
      bool lambdas_ok = in != nullptr && valid && lambdas.size() == in->size() &&
                        out.rows() == in->size();
      for (std::size_t i = 0; lambdas_ok && i < in->size(); ++i) {
        ProjPoint const& p = (*in)[i];
        BigInt const& n = p.ideal.modulus();
        if (!is_unit_mod(lambdas[i], p.ideal) || out.cols() != p.length()) {
          lambdas_ok = false;
          break;
        }
        for (std::size_t j = 0; j < p.length(); ++j) {
          if (!p.ideal.contains(out(i, j) -
                                pow_mod(lambdas[i], p.weights[j], n) *
                                    p.coords[j])) {
            lambdas_ok = false;
            break;
          }
        }
      }
      checks.push_back({"lambdas", lambdas_ok});
      break;
    }
  }
  return checks;
}

// Ignores the stored checks and recomputes them.
inline std::vector<Check> verify(LiftCertificate const& cert) {
  return compute_checks(cert.kind, cert.input, cert.output, cert.lambdas);
}

inline bool verify_ok(LiftCertificate const& cert) {
  auto checks = verify(cert);
  return std::all_of(checks.begin(), checks.end(),
                     [](Check const& c) { return c.pass; });
}

inline LiftCertificate make_certificate(LiftKind kind, CertificateInput input,
                                        IntMatrix output,
                                        std::vector<BigInt> lambdas = {}) {
  LiftCertificate c;
  c.kind = kind;
  c.input = std::move(input);
  c.output = std::move(output);
  c.lambdas = std::move(lambdas);
  c.checks = compute_checks(c.kind, c.input, c.output, c.lambdas);
  for (auto const& ch : c.checks) {
    ensure(ch.pass, std::string(to_string(kind)) + ": check '" + ch.name +
                        "' failed on a freshly built certificate");
  }
  return c;
}

}  // namespace ulift
