#pragma once

#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "repro.hpp"
#include "sampling.hpp"
#include "ulift/json_io.hpp"
#include "ulift/ulift.hpp"

namespace ulift::cli {

using io::json;

// "@path" reads the JSON from a file and "-" from stdin.
inline json json_arg(std::string const& s) {
  if (s == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    return io::parse(ss.str());
  }
  if (!s.empty() && s[0] == '@') {
    return io::parse(slurp_file(s.substr(1)));
  }
  return io::parse(s);
}

// Either a JSON array or a comma separated list.
inline std::vector<BigInt> list_arg(std::string const& s) {
  if (!s.empty() && s[0] == '[') {
    return io::vector_from_json(io::parse(s));
  }
  std::vector<BigInt> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    out.push_back(parse_bigint(item));
  }
  return out;
}

inline Weights weights_arg(std::string const& s) {
  return io::weights_from_json(io::to_json(list_arg(s)));
}

inline std::vector<Ideal> ideals_arg(std::string const& s) {
  std::vector<Ideal> out;
  for (auto const& x : list_arg(s)) {
    require(x >= 0, ErrorCode::MalformedInput, "moduli must be nonnegative");
    out.emplace_back(x);
  }
  return out;
}

inline json error_json(ErrorCode code, std::string const& message) {
  return {{"code", std::string(to_string(code))}, {"message", message}};
}

struct PropertyOptions {
  std::uint64_t seed = 1;
  std::size_t cases = 20;
  std::string group = "sl";
  std::size_t k = 2;
  std::string modulus = "9";
};

inline json property_check(PropertyOptions const& o) {
  std::mt19937_64 rng(o.seed);
  Ideal n(parse_bigint(o.modulus));
  require(n.modulus() >= 2 && n.modulus() < BigInt(1) << 62,
          ErrorCode::OutOfRange, "property-check: modulus out of range");
  require(o.group == "sl" || o.group == "sp", ErrorCode::MalformedInput,
          "property-check: group must be sl or sp");
  std::size_t passed = 0;
  for (std::size_t c = 0; c < o.cases; ++c) {
    if (o.group == "sl") {
      passed += verify_ok(sl_lift(random_sl_mod(rng, o.k, n), n)) ? 1 : 0;
    } else {
      passed += verify_ok(sp_lift(random_sp_mod(rng, o.k, n), n)) ? 1 : 0;
    }
  }
  return {{"group", o.group}, {"k", o.k}, {"modulus", o.modulus},
          {"seed", o.seed},   {"cases", o.cases}, {"passed", passed}};
}

struct Outcome {
  json body;
  int status = 0;
};

inline int run(std::vector<std::string> args, std::ostream& out,
               std::ostream& err) {
  CLI::App app{"Exact lifting of congruence data to SL and Sp over Z"};
  app.require_subcommand(1);
  std::string out_path;
  app.add_option("--out", out_path, "Write the JSON result to this file");

  std::string matrix, modulus, row, col, target, points, point, factors,
      weights, values, moduli, entries, certificate, band = "first_p";
  std::string a_arg, b_arg, m_arg;
  std::size_t k = 1, position = 1, p_arg = 0, q_arg = 0;
  std::uint64_t max_modulus = 101;
  bool modular = false;
  ReproOptions repro;
  PropertyOptions prop;

  auto add_matrix_cmd = [&](char const* name, char const* help) {
    auto* s = app.add_subcommand(name, help);
    s->add_option("--matrix", matrix, "Matrix as JSON (or @file)")->required();
    s->add_option("--modulus", modulus, "Modulus n >= 1")->required();
    return s;
  };
  auto* lift_sl = add_matrix_cmd("lift-sl", "Lift SL_k(Z/n) to SL_k(Z)");
  auto* lift_sp = add_matrix_cmd("lift-sp", "Lift Sp_2k(Z/n) to Sp_2k(Z)");
  auto* ext_row =
      app.add_subcommand("extend-row", "Symplectic matrix with a given row");
  ext_row->add_option("--row", row, "Row of length 2k")->required();
  ext_row->add_option("--k", k)->required();
  ext_row->add_option("--position", position, "1-based row index")
      ->required();
  auto* ext_col = app.add_subcommand("extend-col",
                                     "Symplectic matrix with a given column");
  ext_col->add_option("--col", col, "Column of length 2k")->required();
  ext_col->add_option("--k", k)->required();
  ext_col->add_option("--position", position, "1-based column index")
      ->required();
  auto add_target_cmd = [&](char const* name, char const* help) {
    auto* s = app.add_subcommand(name, help);
    s->add_option("--target", target,
                  "{\"rows\": [[..]], \"moduli\": [..]} (or @file)")
        ->required();
    return s;
  };
  auto* multi_sl =
      add_target_cmd("multi-lift-sl", "SL(Z) matrix with rows fixed mod I_i");
  auto* multi_sp =
      add_target_cmd("multi-lift-sp", "Sp(Z) matrix with rows fixed mod I_i");
  auto add_points_cmd = [&](char const* name, char const* help) {
    auto* s = app.add_subcommand(name, help);
    s->add_option("--points", points, "Array of points (or @file)")
        ->required();
    return s;
  };
  auto* surj_sl = add_points_cmd(
      "surject-sl", "SL(Z) matrix whose rows hit given projective classes");
  auto* surj_sp = add_points_cmd(
      "surject-sp", "Sp(Z) matrix whose rows hit given projective classes");
  auto* crt_lift = add_points_cmd(
      "crt-proj-lift", "Combine points over coprime moduli into one point");
  auto* crt_reduce = app.add_subcommand(
      "crt-proj-reduce", "Reduce a point modulo coprime factors");
  crt_reduce->add_option("--point", point, "Point as JSON (or @file)")
      ->required();
  crt_reduce->add_option("--factors", factors, "Comma separated factors")
      ->required();
  auto* enumerate = app.add_subcommand(
      "enumerate-classes", "All classes of a weighted projective space");
  enumerate->add_option("--modulus", modulus)->required();
  enumerate->add_option("--weights", weights, "Comma separated weights")
      ->required();
  enumerate->add_option("--max-modulus", max_modulus,
                        "Enumeration budget on the modulus");
  auto* ddo = app.add_subcommand(
      "diag-det-one", "Units d_i = a_i mod I_i with product 1 mod prod I_i");
  ddo->add_option("--values", values)->required();
  ddo->add_option("--moduli", moduli)->required();
  auto* cshift = app.add_subcommand("coprime-shift",
                                    "Some n0 >= 0 with gcd(a + n0 b, m) = 1");
  cshift->add_option("--a", a_arg)->required();
  cshift->add_option("--b", b_arg)->required();
  cshift->add_option("--m", m_arg)->required();
  auto* usc = app.add_subcommand(
      "usc-shift", "Shift the first entry into a unit mod the modulus");
  usc->add_option("--entries", entries)->required();
  usc->add_option("--modulus", modulus)->required();
  usc->add_flag("--modular", modular,
                "Entries need only be unital modulo the modulus");
  auto* cmh = app.add_subcommand(
      "cmh-perturb", "Perturb a vector within an ideal to make it unital");
  cmh->add_option("--entries", entries)->required();
  cmh->add_option("--modulus", modulus)->required();
  auto* obst = app.add_subcommand(
      "obstruction", "Whether an orthogonal row can reach a class");
  obst->add_option("--point", point)->required();
  obst->add_option("--p", p_arg)->required();
  obst->add_option("--q", q_arg)->required();
  obst->add_option("--band", band, "first_p or last_q")
      ->check(CLI::IsMember({"first_p", "last_q"}));
  auto* ver = app.add_subcommand("verify", "Recheck a lift certificate");
  ver->add_option("--certificate", certificate, "Certificate (or @file)")
      ->required();
  auto* rep = app.add_subcommand("repro", "Run the bundled example suite");
  rep->add_flag("--budget-small", repro.budget_small,
                "Skip enumerations with modulus above 101");
  rep->add_option("--fixtures", repro.fixture_dir,
                  "Directory of extra fixture files");
  rep->add_option("--fixture", repro.fixture_files, "Extra fixture file");
  auto* propc = app.add_subcommand(
      "property-check", "Lift random matrices and verify the certificates");
  propc->add_option("--seed", prop.seed);
  propc->add_option("--cases", prop.cases);
  propc->add_option("--group", prop.group)
      ->check(CLI::IsMember({"sl", "sp"}));
  propc->add_option("--k", prop.k);
  propc->add_option("--modulus", prop.modulus);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (CLI::CallForHelp const&) {
    out << app.help();
    return 0;
  } catch (CLI::CallForAllHelp const&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (CLI::ParseError const& e) {
    err << error_json(ErrorCode::MalformedInput, e.what()).dump() << "\n";
    return 2;
  }

  auto emit = [&](json const& j) {
    if (out_path.empty()) {
      out << j.dump(2) << "\n";
    } else {
      std::ofstream f(out_path);
      require(static_cast<bool>(f), ErrorCode::MalformedInput,
              "cannot write " + out_path);
      f << j.dump(2) << "\n";
    }
  };

  try {
    Outcome o;
    if (*lift_sl || *lift_sp) {
      IntMatrix m = io::matrix_from_json(json_arg(matrix));
      Ideal n(parse_bigint(modulus));
      o.body = io::to_json(*lift_sl ? sl_lift(m, n) : sp_lift(m, n));
    } else if (*ext_row || *ext_col) {
      std::vector<BigInt> v = list_arg(*ext_row ? row : col);
      require(position >= 1, ErrorCode::OutOfRange,
              "position is 1-based");
      IntMatrix g = *ext_row ? sp_extend_row(v, k, position - 1)
                             : sp_extend_column(v, k, position - 1);
      o.body = {{"matrix", io::to_json(g)}};
    } else if (*multi_sl || *multi_sp) {
      CongruenceTarget t = io::target_from_json(json_arg(target));
      o.body = io::to_json(*multi_sl ? sl_multi_congruence_lift(t)
                                     : sp_multi_congruence_lift(t));
    } else if (*surj_sl || *surj_sp) {
      auto pts = io::points_from_json(json_arg(points));
      o.body = io::to_json(*surj_sl ? sl_surject_projective(pts)
                                    : sp_surject_projective(pts));
    } else if (*crt_lift) {
      auto pts = io::points_from_json(json_arg(points));
      o.body = io::to_json(crt_lift_projective(pts));
    } else if (*crt_reduce) {
      ProjPoint p = io::point_from_json(json_arg(point));
      o.body = io::to_json(reduce_projective(p, ideals_arg(factors)));
    } else if (*enumerate) {
      BigInt n = parse_bigint(modulus);
      require(n >= 2 && n < BigInt(1) << 32, ErrorCode::OutOfRange,
              "enumerate-classes: modulus out of range");
      EnumerationBudget budget;
      budget.max_modulus = max_modulus;
      o.body = io::to_json(enumerate_classes(static_cast<std::uint64_t>(n),
                                             weights_arg(weights), budget));
    } else if (*ddo) {
      auto vs = list_arg(values);
      auto ms = ideals_arg(moduli);
      o.body = {{"values", io::to_json(diag_det_one(vs, ms))}};
    } else if (*cshift) {
      o.body = {{"n0", coprime_shift(parse_bigint(a_arg), parse_bigint(b_arg),
                                     parse_bigint(m_arg))
                           .str()}};
    } else if (*usc) {
      auto es = list_arg(entries);
      Ideal n(parse_bigint(modulus));
      o.body = io::to_json(modular ? usc_shift_mod(es, n) : usc_shift(es, n));
    } else if (*cmh) {
      auto es = list_arg(entries);
      o.body = {{"t", io::to_json(cmh_perturb(es, Ideal(parse_bigint(modulus))))}};
    } else if (*obst) {
      ProjPoint pt = io::point_from_json(json_arg(point));
      bool b = orthogonal_obstruction(
          pt, p_arg, q_arg,
          band == "first_p" ? RowBand::first_p : RowBand::last_q);
      o.body = {{"obstructed", b}};
    } else if (*ver) {
      LiftCertificate c = io::certificate_from_json(json_arg(certificate));
      auto checks = verify(c);
      json arr = json::array();
      bool ok = true;
      for (auto const& ch : checks) {
        arr.push_back({{"name", ch.name}, {"pass", ch.pass}});
        ok = ok && ch.pass;
      }
      o.body = {{"ok", ok}, {"checks", arr}};
      o.status = ok ? 0 : 2;
    } else if (*rep) {
      o.body = run_repro(repro);
      o.status = o.body.at("pass").get<bool>() ? 0 : 2;
    } else if (*propc) {
      o.body = property_check(prop);
      o.status = o.body.at("passed") == o.body.at("cases") ? 0 : 2;
    }
    emit(o.body);
    if (o.status == 2) {
      err << error_json(ErrorCode::VerificationFailed,
                        "one or more checks failed")
                 .dump()
          << "\n";
    }
    return o.status;
  } catch (Error const& e) {
    err << error_json(e.code(), e.what()).dump() << "\n";
    return e.code() == ErrorCode::Internal ? 1 : 2;
  } catch (json::exception const& e) {
    err << error_json(ErrorCode::MalformedInput, e.what()).dump() << "\n";
    return 2;
  } catch (std::exception const& e) {
    err << error_json(ErrorCode::Internal, e.what()).dump() << "\n";
    return 1;
  }
}

}  // namespace ulift::cli
