#pragma once

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "ulift/json_io.hpp"
#include "ulift/ulift.hpp"

namespace ulift::cli {

using io::json;

struct ReproOptions {
  bool budget_small = false;
  std::string fixture_dir;
  std::vector<std::string> fixture_files;
};

// Enumerations above this modulus only run without --budget-small.
inline constexpr std::uint64_t kSmallBudgetModulus = 101;
inline constexpr std::uint64_t kFullBudgetModulus = 1000;

inline EnumerationBudget full_budget() {
  EnumerationBudget b;
  b.max_modulus = kFullBudgetModulus;
  return b;
}

struct CaseResult {
  std::string name;
  bool skipped = false;
  std::vector<Check> checks;
  double seconds = 0;
  std::string error;

  bool pass() const {
    return skipped ||
           (error.empty() && std::all_of(checks.begin(), checks.end(),
                                         [](Check const& c) { return c.pass; }));
  }
};

inline json to_json(CaseResult const& r) {
  json failed = json::array();
  for (auto const& c : r.checks) {
    if (!c.pass) {
      failed.push_back(c.name);
    }
  }
  json j = {{"name", r.name},
            {"pass", r.pass()},
            {"skipped", r.skipped},
            {"seconds", r.seconds},
            {"failed_checks", failed}};
  if (!r.error.empty()) {
    j["error"] = r.error;
  }
  return j;
}

using CaseFn = std::function<std::vector<Check>()>;

inline CaseResult run_case(std::string name, CaseFn const& fn) {
  CaseResult r;
  r.name = std::move(name);
  auto t0 = std::chrono::steady_clock::now();
  try {
    r.checks = fn();
  } catch (std::exception const& e) {
    r.error = e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                            t0)
                  .count();
  return r;
}

inline std::map<std::uint64_t, std::uint64_t> size_profile(
    ClassTable const& t) {
  std::map<std::uint64_t, std::uint64_t> prof;
  for (auto const& c : t.classes) {
    ++prof[c.size];
  }
  return prof;
}

inline std::vector<Check> class_count_checks(
    std::uint64_t n, Weights const& w, std::uint64_t expected,
    std::map<std::uint64_t, std::uint64_t> const& profile) {
  ClassTable t = enumerate_classes(n, w, full_budget());
  std::vector<Check> out{{"class_count", t.count() == expected}};
  if (!profile.empty()) {
    out.push_back({"size_profile", size_profile(t) == profile});
  }
  return out;
}

inline std::vector<Check> bijectivity_checks(
    std::uint64_t n, std::vector<std::uint64_t> const& factors,
    Weights const& w) {
  BijectivityReport r = crt_bijectivity_check(n, factors, w, full_budget());
  return {{"injective", r.injective}, {"counts_multiply", r.counts_multiply}};
}

inline std::vector<Check> certificate_checks(LiftCertificate const& c) {
  return verify(c);
}

inline std::vector<ProjPoint> example_four_points() {
  BigInt const mods[] = {241, 601, 1201, 1321};
  std::vector<Weights> const w = {{2, 5, 3, 10},
                                  {8, 20, 30, 24},
                                  {1, 50, 48, 40},
                                  {11, 55, 44, 22}};
  std::vector<ProjPoint> pts;
  for (std::size_t i = 0; i < 4; ++i) {
    pts.emplace_back(std::vector<BigInt>(4, BigInt(1)), Ideal(mods[i]), w[i]);
  }
  return pts;
}

inline std::vector<CaseResult> builtin_cases(ReproOptions const& o) {
  std::vector<CaseResult> out;
  for (std::uint64_t p : {3, 5, 7, 11, 13, 103, 107}) {
    std::string name = "class-count/p=" + std::to_string(p) + "/weights=1,2";
    if (o.budget_small && p > kSmallBudgetModulus) {
      CaseResult r;
      r.name = name;
      r.skipped = true;
      out.push_back(r);
      continue;
    }
    out.push_back(run_case(name, [p] {
      return class_count_checks(p, {1, 2}, p + 2,
                                {{p - 1, p}, {(p - 1) / 2, 2}});
    }));
  }
  std::vector<std::pair<std::uint64_t, std::vector<std::uint64_t>>> const
      splits = {{15, {3, 5}}, {21, {3, 7}}, {35, {5, 7}}, {30, {2, 3, 5}}};
  std::vector<Weights> const ws = {{1, 1}, {1, 2}, {2, 3}};
  for (auto const& [n, fs] : splits) {
    for (auto const& w : ws) {
      std::string name = "crt-bijectivity/n=" + std::to_string(n) +
                         "/weights=" + std::to_string(w[0]) + "," +
                         std::to_string(w[1]);
      out.push_back(run_case(name, [n = n, fs = fs, w] {
        return bijectivity_checks(n, fs, w);
      }));
    }
  }
  out.push_back(run_case("four-points/sl", [] {
    return certificate_checks(sl_surject_projective(example_four_points()));
  }));
  out.push_back(run_case("four-points/sp", [] {
    return certificate_checks(sp_surject_projective(example_four_points()));
  }));
  out.push_back(run_case("diag-det-one/(2,3) mod (5,7)", [] {
    BigInt a[] = {2, 3};
    Ideal m[] = {5, 7};
    auto d = diag_det_one(a, m);
    return std::vector<Check>{{"values", d == std::vector<BigInt>{12, 3}}};
  }));
  out.push_back(run_case("cmh-perturb/(4,6) mod 9", [] {
    BigInt x[] = {4, 6};
    auto t = cmh_perturb(x, Ideal(9));
    return std::vector<Check>{{"values", t == std::vector<BigInt>{540, 135}}};
  }));
  return out;
}

inline std::string slurp_file(std::filesystem::path const& p) {
  std::ifstream in(p);
  require(static_cast<bool>(in), ErrorCode::MalformedInput,
          "cannot read " + p.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::vector<std::uint64_t> u64_list(json const& j) {
  std::vector<std::uint64_t> out;
  for (auto const& x : io::vector_from_json(j)) {
    require(x >= 1 && x < BigInt(1) << 32, ErrorCode::MalformedInput,
            "fixture: value out of range");
    out.push_back(static_cast<std::uint64_t>(x));
  }
  return out;
}

inline CaseResult run_fixture(json const& f, ReproOptions const& o) {
  std::string name = f.value("name", std::string("unnamed"));
  std::string type = io::field(f, "type").get<std::string>();
  name = "fixture/" + name;
  if (type == "class_count" || type == "crt_bijectivity") {
    BigInt n = io::bigint_from_json(io::field(f, "modulus"));
    if (o.budget_small && n > kSmallBudgetModulus) {
      CaseResult r;
      r.name = name;
      r.skipped = true;
      return r;
    }
  }
  return run_case(name, [&f, &type]() -> std::vector<Check> {
    if (type == "class_count") {
      auto n = static_cast<std::uint64_t>(
          io::bigint_from_json(io::field(f, "modulus")));
      Weights w = io::weights_from_json(io::field(f, "weights"));
      auto expected = static_cast<std::uint64_t>(
          io::bigint_from_json(io::field(f, "class_count")));
      std::map<std::uint64_t, std::uint64_t> prof;
      if (f.contains("size_profile")) {
        for (auto const& [size, count] : f.at("size_profile").items()) {
          prof[std::stoull(size)] =
              static_cast<std::uint64_t>(io::bigint_from_json(count));
        }
      }
      return class_count_checks(n, w, expected, prof);
    }
    if (type == "crt_bijectivity") {
      auto n = static_cast<std::uint64_t>(
          io::bigint_from_json(io::field(f, "modulus")));
      return bijectivity_checks(n, u64_list(io::field(f, "factors")),
                                io::weights_from_json(io::field(f, "weights")));
    }
    if (type == "certificate") {
      return certificate_checks(
          io::certificate_from_json(io::field(f, "certificate")));
    }
    if (type == "surject_sl" || type == "surject_sp") {
      auto pts = io::points_from_json(io::field(f, "points"));
      return certificate_checks(type == "surject_sl"
                                    ? sl_surject_projective(pts)
                                    : sp_surject_projective(pts));
    }
    if (type == "diag_det_one") {
      auto vs = io::vector_from_json(io::field(f, "values"));
      std::vector<Ideal> ms;
      for (auto const& m : io::field(f, "moduli")) {
        ms.push_back(io::ideal_from_json(m));
      }
      auto expected = io::vector_from_json(io::field(f, "expected"));
      return {{"values", diag_det_one(vs, ms) == expected}};
    }
    if (type == "cmh_perturb") {
      auto xs = io::vector_from_json(io::field(f, "entries"));
      Ideal n = io::ideal_from_json(io::field(f, "modulus"));
      auto expected = io::vector_from_json(io::field(f, "expected"));
      return {{"values", cmh_perturb(xs, n) == expected}};
    }
    io::malformed("fixture: unknown type '" + type + "'");
  });
}

inline json run_repro(ReproOptions const& o) {
  std::vector<CaseResult> results = builtin_cases(o);
  std::vector<std::filesystem::path> files;
  std::string dir = o.fixture_dir;
#ifdef ULIFT_FIXTURE_DIR
  if (dir.empty() && o.fixture_files.empty()) {
    dir = ULIFT_FIXTURE_DIR;
  }
#endif
  if (!dir.empty()) {
    require(std::filesystem::is_directory(dir), ErrorCode::MalformedInput,
            "fixture directory not found: " + dir);
    for (auto const& e : std::filesystem::directory_iterator(dir)) {
      if (e.path().extension() == ".json") {
        files.push_back(e.path());
      }
    }
    std::sort(files.begin(), files.end());
  }
  for (auto const& f : o.fixture_files) {
    files.emplace_back(f);
  }
  for (auto const& path : files) {
    json f = io::parse(slurp_file(path));
    results.push_back(run_fixture(f, o));
  }
  json cases = json::array();
  bool pass = true;
  for (auto const& r : results) {
    cases.push_back(to_json(r));
    pass = pass && r.pass();
  }
  return {{"pass", pass}, {"cases", cases}};
}

}  // namespace ulift::cli
