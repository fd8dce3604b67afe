// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Each criterion must also finish within its time limit.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "sampling.hpp"

using namespace ulift;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

struct Criterion {
  int id;
  std::string name;
  double limit_seconds;
  std::function<Outcome()> run;
};

Outcome fail_with(std::string msg) { return {false, std::move(msg)}; }

Outcome class_counts() {
  for (std::uint64_t p : {3, 5, 7, 11, 13}) {
    ClassTable t = enumerate_classes(p, {1, 2});
    std::map<std::uint64_t, std::uint64_t> prof;
    for (auto const& c : t.classes) {
      ++prof[c.size];
    }
    std::map<std::uint64_t, std::uint64_t> expected = {{p - 1, p},
                                                       {(p - 1) / 2, 2}};
    if (t.count() != p + 2 || prof != expected) {
      return fail_with("p=" + std::to_string(p) + " gave " +
                       std::to_string(t.count()) + " classes");
    }
  }
  return {true, "p in {3,5,7,11,13}: p+2 classes, sizes as expected"};
}

Outcome crt_bijectivity() {
  std::vector<std::pair<std::uint64_t, std::vector<std::uint64_t>>> grid = {
      {15, {3, 5}}, {21, {3, 7}}, {35, {5, 7}}, {30, {2, 3, 5}}};
  int cases = 0;
  for (auto const& [n, fs] : grid) {
    for (Weights w : {Weights{1, 1}, Weights{1, 2}, Weights{2, 3}}) {
      BijectivityReport r = crt_bijectivity_check(n, fs, w);
      if (!r.injective || !r.counts_multiply) {
        return fail_with("n=" + std::to_string(n) + " weights " +
                         std::to_string(w[0]) + "," + std::to_string(w[1]));
      }
      ++cases;
    }
  }
  return {true, std::to_string(cases) + " (n, weights) cases bijective"};
}

Outcome sl_lifts() {
  std::mt19937_64 rng(20240001);
  int done = 0;
  for (std::size_t k : {2, 3, 4}) {
    for (long long n : {4, 9, 25, 36, 101}) {
      Ideal id(n);
      for (int i = 0; i < 100; ++i) {
        IntMatrix m = cli::random_sl_mod(rng, k, id);
        IntMatrix a = sl_lift(m, id).output;
        if (det(a) != 1 || !congruent(a, m, id)) {
          return fail_with("k=" + std::to_string(k) +
                           " n=" + std::to_string(n));
        }
        ++done;
      }
    }
  }
  return {true, std::to_string(done) + " lifts, det 1 and congruent"};
}

Outcome sp_lifts() {
  std::mt19937_64 rng(20240002);
  int done = 0;
  for (std::size_t k : {1, 2, 3}) {
    for (long long n : {4, 9, 25, 101}) {
      Ideal id(n);
      for (int i = 0; i < 100; ++i) {
        IntMatrix m = cli::random_sp_mod(rng, k, id);
        IntMatrix a = sp_lift(m, id).output;
        if (!is_symplectic(a) || !congruent(a, m, id)) {
          return fail_with("k=" + std::to_string(k) +
                           " n=" + std::to_string(n));
        }
        ++done;
      }
    }
  }
  return {true, std::to_string(done) + " lifts, A^T J A = J and congruent"};
}

std::vector<ProjPoint> four_points() {
  long long const mods[] = {241, 601, 1201, 1321};
  std::vector<Weights> const w = {
      {2, 5, 3, 10}, {8, 20, 30, 24}, {1, 50, 48, 40}, {11, 55, 44, 22}};
  std::vector<ProjPoint> pts;
  for (std::size_t i = 0; i < 4; ++i) {
    pts.emplace_back(std::vector<BigInt>(4, BigInt(1)), Ideal(mods[i]), w[i]);
  }
  return pts;
}

Outcome four_point_surjection(bool symplectic) {
  auto pts = four_points();
  LiftCertificate c = symplectic ? sp_surject_projective(pts)
                                 : sl_surject_projective(pts);
  IntMatrix const& a = c.output;
  bool group_ok = symplectic ? is_symplectic(a) : det(a) == 1;
  if (!group_ok || c.lambdas.size() != pts.size()) {
    return fail_with("output not in the group");
  }
  std::ostringstream lam;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    ProjPoint row(std::vector<BigInt>(a.row(i).begin(), a.row(i).end()),
                  pts[i].ideal, pts[i].weights);
    Equivalence e = equivalent_points(pts[i], row);
    if (!e.equivalent || e.lambda != c.lambdas[i]) {
      return fail_with("row " + std::to_string(i) + " misses its class");
    }
    lam << (i ? "," : "") << c.lambdas[i];
  }
  if (!verify_ok(c)) {
    return fail_with("certificate does not verify");
  }
  return {true, "rows verified, lambdas (" + lam.str() + ")"};
}

Outcome completion() {
  std::mt19937_64 rng(20240007);
  int done = 0;
  for (std::size_t k : {1, 2, 3}) {
    for (int i = 0; i < 200; ++i) {
      auto v = oracle::random_row_with_unit(rng, 2 * k, 1000);
      for (std::size_t pos = 0; pos < 2 * k; ++pos) {
        IntMatrix g = sp_extend_row(v, k, pos);
        IntMatrix h = sp_extend_column(v, k, pos);
        bool row_ok = std::equal(v.begin(), v.end(), g.row(pos).begin());
        if (!is_symplectic(g) || !row_ok || !is_symplectic(h) ||
            h.column(pos) != v) {
          return fail_with("k=" + std::to_string(k) +
                           " position=" + std::to_string(pos + 1));
        }
        done += 2;
      }
    }
  }
  return {true, std::to_string(done) + " completions symplectic and verbatim"};
}

// Generators of O(2,1)(Z) for x^2 + y^2 - z^2: the three Barning matrices,
// the sign changes of x and y, and the swap of x and y.
std::vector<IntMatrix> orthogonal_generators() {
  return {
      IntMatrix{{1, -2, 2}, {2, -1, 2}, {2, -2, 3}},
      IntMatrix{{1, 2, 2}, {2, 1, 2}, {2, 2, 3}},
      IntMatrix{{-1, 2, 2}, {-2, 1, 2}, {-2, 2, 3}},
      IntMatrix{{-1, 0, 0}, {0, 1, 0}, {0, 0, 1}},
      IntMatrix{{1, 0, 0}, {0, -1, 0}, {0, 0, 1}},
      IntMatrix{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}},
  };
}

Outcome obstruction() {
  long long const r = 7;
  Weights w = {1, 1, 1};
  ClassTable t = enumerate_classes(r, w);
  std::size_t obstructed = 0;
  for (auto const& c : t.classes) {
    std::vector<BigInt> x(c.representative.begin(), c.representative.end());
    ProjPoint p(x, Ideal(r), w);
    BigInt norm = quadratic_form_value(x, 2, r);
    bool expected = norm == 0 || norm == 3 || norm == 5 || norm == 6;
    if (orthogonal_obstruction(p, 2, 1, RowBand::first_p) != expected) {
      return fail_with("class with norm " + to_string(norm) + " misjudged");
    }
    obstructed += expected ? 1 : 0;
  }

  IntMatrix j{{1, 0, 0}, {0, 1, 0}, {0, 0, -1}};
  auto gens = orthogonal_generators();
  for (auto const& g : gens) {
    if (transpose(g) * j * g != j) {
      return fail_with("a generator is not in O(2,1)(Z)");
    }
  }
  std::mt19937_64 rng(20240008);
  for (int s = 0; s < 500; ++s) {
    IntMatrix a = IntMatrix::identity(3);
    int len = 1 + static_cast<int>(rng() % 12);
    for (int i = 0; i < len; ++i) {
      a = a * gens[rng() % gens.size()];
    }
    if (transpose(a) * j * a != j) {
      return fail_with("product left O(2,1)(Z)");
    }
    std::vector<BigInt> row(a.row(0).begin(), a.row(0).end());
    ProjPoint p(row, Ideal(r), w);
    if (orthogonal_obstruction(p, 2, 1, RowBand::first_p)) {
      return fail_with("a sampled first row landed in an obstructed class");
    }
  }
  return {true, std::to_string(obstructed) + " of " +
                    std::to_string(t.count()) +
                    " classes obstructed; 500 products avoid them"};
}

Outcome oracles() {
  std::mt19937_64 rng(20240009);
  int mismatches = 0;
  for (int i = 0; i < 500; ++i) {
    std::size_t n = 1 + rng() % 5;
    IntMatrix m = oracle::random_matrix(rng, n, n, -1000, 1000);
    mismatches += det(m) != oracle::cofactor_det(m) ? 1 : 0;
  }
  std::vector<std::uint64_t> pool = {2, 3, 4, 5, 7, 8, 9, 11, 13, 17, 19, 25};
  int crt_cases = 0;
  while (crt_cases < 500) {
    std::vector<std::uint64_t> ns, rs;
    std::uint64_t prod = 1;
    for (auto m : pool) {
      bool coprime = rng() % 2 == 0;
      for (auto x : ns) {
        coprime = coprime && std::gcd(x, m) == 1;
      }
      if (coprime && prod * m <= 10000) {
        ns.push_back(m);
        rs.push_back(rng() % m);
        prod *= m;
      }
    }
    if (ns.empty()) {
      continue;
    }
    std::vector<BigInt> r(rs.begin(), rs.end());
    std::vector<Ideal> id;
    for (auto m : ns) {
      id.emplace_back(static_cast<long long>(m));
    }
    auto scan = oracle::crt_scan(rs, ns);
    mismatches += !scan || crt_list(r, id) != BigInt(*scan) ? 1 : 0;
    ++crt_cases;
  }
  std::uniform_int_distribution<std::int64_t> dm(1, 10000), dab(-10000, 10000);
  int shift_cases = 0;
  while (shift_cases < 500) {
    std::int64_t a = dab(rng), b = dab(rng), m = dm(rng);
    if (gcd(BigInt(a), BigInt(b)) != 1) {
      continue;
    }
    auto scan = oracle::coprime_shift_scan(a, b, m);
    BigInt n0 = coprime_shift(a, b, m);
    bool lib_ok = n0 >= 0 && gcd(a + n0 * b, BigInt(m)) == 1;
    mismatches += scan.has_value() != lib_ok ? 1 : 0;
    ++shift_cases;
  }
  if (mismatches != 0) {
    return fail_with(std::to_string(mismatches) + " discrepancies");
  }
  return {true, "500 determinants, 500 CRT systems, 500 shifts agree"};
}

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {1, "class counts for weights (1,2)", 1.0, class_counts},
      {2, "CRT bijectivity", 30.0, crt_bijectivity},
      {3, "SL lifts mod n", 10.0, sl_lifts},
      {4, "Sp lifts mod n", 60.0, sp_lifts},
      {5, "four-point SL_4 surjection", 10.0,
       [] { return four_point_surjection(false); }},
      {6, "four-point Sp_4 surjection", 60.0,
       [] { return four_point_surjection(true); }},
      {7, "symplectic row/column completion", 10.0, completion},
      {8, "orthogonal obstruction at r=7, (2,1)", 10.0, obstruction},
      {9, "oracle equivalences", 60.0, oracles},
  };
  int failures = 0;
  for (auto const& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (std::exception const& e) {
      o = fail_with(std::string("exception: ") + e.what());
    }
    double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    bool timely = secs < c.limit_seconds;
    bool pass = o.ok && timely;
    failures += pass ? 0 : 1;
    std::printf("[%s] criterion %d: %s (%.3fs, limit %.0fs) %s%s\n",
                pass ? "PASS" : "FAIL", c.id, c.name.c_str(), secs,
                c.limit_seconds, o.detail.c_str(),
                timely ? "" : " [time limit exceeded]");
  }
  std::printf("%d/%zu criteria passed\n",
              static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
