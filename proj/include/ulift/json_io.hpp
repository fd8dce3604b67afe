#pragma once

// JSON encodings.  Integers are written as decimal strings; on input both
// strings and JSON integers are accepted.

#include <json.hpp>

#include "ulift/certificate.hpp"
#include "ulift/primes.hpp"
#include "ulift/projective.hpp"
#include "ulift/unital.hpp"

namespace ulift::io {

using json = nlohmann::json;

[[noreturn]] inline void malformed(std::string const& what) {
  fail(ErrorCode::MalformedInput, what);
}

inline json const& field(json const& j, char const* key) {
  if (!j.is_object() || !j.contains(key)) {
    malformed(std::string("missing field '") + key + "'");
  }
  return j.at(key);
}

inline json to_json(BigInt const& x) { return x.str(); }

inline BigInt bigint_from_json(json const& j) {
  if (j.is_string()) {
    return parse_bigint(j.get<std::string>());
  }
  if (j.is_number_integer()) {
    return j.is_number_unsigned() ? BigInt(j.get<std::uint64_t>())
                                  : BigInt(j.get<std::int64_t>());
  }
  malformed("expected an integer or a decimal string, got " + j.dump());
}

inline json to_json(std::span<BigInt const> xs) {
  json a = json::array();
  for (auto const& x : xs) {
    a.push_back(x.str());
  }
  return a;
}

inline std::vector<BigInt> vector_from_json(json const& j) {
  if (!j.is_array()) {
    malformed("expected an array of integers, got " + j.dump());
  }
  std::vector<BigInt> out;
  for (auto const& e : j) {
    out.push_back(bigint_from_json(e));
  }
  return out;
}

inline unsigned weight_from_json(json const& j) {
  BigInt w = bigint_from_json(j);
  if (w < 1 || w > std::numeric_limits<unsigned>::max()) {
    malformed("weights must be positive integers");
  }
  return static_cast<unsigned>(w);
}

inline Weights weights_from_json(json const& j) {
  if (!j.is_array()) {
    malformed("weights must be an array");
  }
  Weights w;
  for (auto const& e : j) {
    w.push_back(weight_from_json(e));
  }
  return w;
}

inline json to_json(IntMatrix const& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    rows.push_back(to_json(m.row(i)));
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

// Either {"rows", "cols", "entries"} or a bare array of rows.
inline IntMatrix matrix_from_json(json const& j) {
  json const& e = j.is_array() ? j : field(j, "entries");
  if (!e.is_array()) {
    malformed("matrix entries must be an array of rows");
  }
  std::vector<std::vector<BigInt>> rows;
  for (auto const& r : e) {
    rows.push_back(vector_from_json(r));
  }
  for (auto const& r : rows) {
    if (r.size() != rows[0].size()) {
      malformed("matrix rows have different lengths");
    }
  }
  IntMatrix m = IntMatrix::from_rows(rows);
  if (j.is_object()) {
    if (j.contains("rows") && bigint_from_json(j.at("rows")) != m.rows()) {
      malformed("matrix 'rows' disagrees with its entries");
    }
    if (j.contains("cols") && bigint_from_json(j.at("cols")) != m.cols()) {
      malformed("matrix 'cols' disagrees with its entries");
    }
  }
  return m;
}

inline Ideal ideal_from_json(json const& j) {
  BigInt n = bigint_from_json(j);
  if (n < 0) {
    malformed("moduli must be nonnegative");
  }
  return Ideal(n);
}

inline json to_json(ProjPoint const& p) {
  return {{"coords", to_json(p.coords)},
          {"modulus", p.ideal.modulus().str()},
          {"weights", p.weights}};
}

inline ProjPoint point_from_json(json const& j) {
  std::vector<BigInt> coords = vector_from_json(field(j, "coords"));
  Ideal n = ideal_from_json(field(j, "modulus"));
  Weights w = j.contains("weights") ? weights_from_json(j.at("weights"))
                                    : Weights(coords.size(), 1u);
  return ProjPoint(std::move(coords), n, std::move(w));
}

inline std::vector<ProjPoint> points_from_json(json const& j) {
  json const& a = j.is_array() ? j : field(j, "points");
  if (!a.is_array()) {
    malformed("points must be an array");
  }
  std::vector<ProjPoint> out;
  for (auto const& p : a) {
    out.push_back(point_from_json(p));
  }
  return out;
}

inline json to_json(std::vector<ProjPoint> const& pts) {
  json a = json::array();
  for (auto const& p : pts) {
    a.push_back(to_json(p));
  }
  return a;
}

inline json to_json(ShiftWitness const& w) {
  return {{"coefficients", to_json(w.coefficients)},
          {"result", w.result.str()},
          {"modulus", w.modulus.modulus().str()}};
}

inline json to_json(Factorization const& f) {
  json a = json::array();
  for (auto const& pp : f.factors) {
    a.push_back(json::array({pp.prime.str(), pp.exponent}));
  }
  return a;
}

inline json to_json(ClassTable const& t) {
  json classes = json::array();
  for (auto const& c : t.classes) {
    classes.push_back({{"representative", c.representative}, {"size", c.size}});
  }
  return {{"modulus", std::to_string(t.modulus)},
          {"weights", t.weights},
          {"class_count", t.count()},
          {"classes", classes}};
}

inline json to_json(CongruenceTarget const& t) {
  json rows = json::array();
  for (std::size_t i = 0; i < t.rows.rows(); ++i) {
    rows.push_back(to_json(t.rows.row(i)));
  }
  json ms = json::array();
  for (auto const& i : t.ideals) {
    ms.push_back(i.modulus().str());
  }
  return {{"rows", rows}, {"moduli", ms}};
}

inline CongruenceTarget target_from_json(json const& j) {
  CongruenceTarget t;
  t.rows = matrix_from_json(field(j, "rows"));
  json const& ms = field(j, "moduli");
  if (!ms.is_array()) {
    malformed("moduli must be an array");
  }
  for (auto const& m : ms) {
    t.ideals.push_back(ideal_from_json(m));
  }
  return t;
}

inline json to_json(ModularMatrix const& m) {
  return {{"matrix", to_json(m.matrix)},
          {"modulus", m.modulus.modulus().str()}};
}

inline ModularMatrix modular_from_json(json const& j) {
  return {matrix_from_json(field(j, "matrix")),
          ideal_from_json(field(j, "modulus"))};
}

inline LiftKind kind_from_string(std::string const& s) {
  for (LiftKind k : {LiftKind::sl_lift, LiftKind::sp_lift, LiftKind::sl_multi,
                     LiftKind::sp_multi, LiftKind::sl_surject,
                     LiftKind::sp_surject}) {
    if (to_string(k) == s) {
      return k;
    }
  }
  malformed("unknown certificate kind '" + s + "'");
}

inline json to_json(LiftCertificate const& c) {
  json input = std::visit([](auto const& in) { return to_json(in); }, c.input);
  if (c.kind == LiftKind::sl_surject || c.kind == LiftKind::sp_surject) {
    input = {{"points", input}};
  }
  json checks = json::array();
  for (auto const& ch : c.checks) {
    checks.push_back({{"name", ch.name}, {"pass", ch.pass}});
  }
  return {{"kind", std::string(to_string(c.kind))},
          {"input", input},
          {"output", to_json(c.output)},
          {"lambdas", to_json(c.lambdas)},
          {"checks", checks}};
}

inline LiftCertificate certificate_from_json(json const& j) {
  json const& kind = field(j, "kind");
  if (!kind.is_string()) {
    malformed("certificate kind must be a string");
  }
  LiftCertificate c;
  c.kind = kind_from_string(kind.get<std::string>());
  json const& in = field(j, "input");
  switch (c.kind) {
    case LiftKind::sl_lift:
    case LiftKind::sp_lift:
      c.input = modular_from_json(in);
      break;
    case LiftKind::sl_multi:
    case LiftKind::sp_multi:
      c.input = target_from_json(in);
      break;
    case LiftKind::sl_surject:
    case LiftKind::sp_surject:
      c.input = points_from_json(in);
      break;
  }
  c.output = matrix_from_json(field(j, "output"));
  if (j.contains("lambdas")) {
    c.lambdas = vector_from_json(j.at("lambdas"));
  }
  if (j.contains("checks") && j.at("checks").is_array()) {
    for (auto const& ch : j.at("checks")) {
      c.checks.push_back({field(ch, "name").get<std::string>(),
                          field(ch, "pass").get<bool>()});
    }
  }
  return c;
}

inline json parse(std::string const& text) {
  try {
    return json::parse(text);
  } catch (json::exception const& e) {
    malformed(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace ulift::io
