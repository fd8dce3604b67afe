#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "ulift/matrix.hpp"
#include "ulift/unital.hpp"

namespace ulift {

using Weights = std::vector<unsigned>;

// A representative of a weighted projective point over Z/n.  Coordinates
// need only be unital modulo n; crt_lift_projective returns coordinates
// that are unital over Z.
struct ProjPoint {
  std::vector<BigInt> coords;
  Ideal ideal;
  Weights weights;

  ProjPoint() = default;
  ProjPoint(std::vector<BigInt> c, Ideal n, Weights w)
      : coords(std::move(c)), ideal(std::move(n)), weights(std::move(w)) {
    validate();
  }

  void validate() const {
    require(coords.size() >= 2, ErrorCode::BadShape,
            "projective point needs at least two coordinates");
    require(weights.size() == coords.size(), ErrorCode::ShapeMismatch,
            "weights and coordinates differ in length");
    for (unsigned w : weights) {
      require(w >= 1, ErrorCode::PreconditionViolated,
              "weights must be positive");
    }
    require_nonzero(ideal, "projective point");
    require(is_unital_mod(coords, ideal), ErrorCode::PreconditionViolated,
            "coordinates are not unital modulo the ideal");
  }

  std::size_t length() const { return coords.size(); }

  friend bool operator==(ProjPoint const&, ProjPoint const&) = default;
};

struct EnumerationBudget {
  std::uint64_t max_modulus = 101;
  std::size_t max_length = 4;
  std::uint64_t max_tuples = 4'000'000;
};

// Moduli up to this bound are scanned unit by unit.
inline constexpr std::uint64_t kUnitScanLimit = 10'000;

namespace detail {

inline BigInt primitive_root(BigInt const& p) {
  if (p == 2) {
    return 1;
  }
  auto fs = factorize(p - 1).primes();
  for (BigInt g = 2;; ++g) {
    bool ok = true;
    for (auto const& q : fs) {
      if (pow_mod(g, (p - 1) / q, p) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) {
      return g;
    }
  }
}

// Calls f(lambda) for each unit of Z/n until f returns true.
template <typename F>
std::optional<BigInt> scan_units(Ideal const& n, F&& f) {
  BigInt const& m = n.modulus();
  if (m <= kUnitScanLimit) {
    for (BigInt l = 1; l < m; ++l) {
      if (gcd(l, m) == 1 && f(l)) {
        return l;
      }
    }
    return std::nullopt;
  }
  require(m < factorization_budget() && is_prime(m), ErrorCode::BudgetExceeded,
          "unit scan over composite modulus " + to_string(m) +
              " exceeds the budget");
  require(m <= 100'000'000, ErrorCode::BudgetExceeded,
          "unit scan over modulus " + to_string(m) + " exceeds the budget");
  BigInt g = primitive_root(m);
  BigInt l = 1;
  for (BigInt e = 0; e + 1 < m; ++e) {
    if (f(l)) {
      return l;
    }
    l = l * g % m;
  }
  return std::nullopt;
}

inline std::vector<BigInt> act(BigInt const& lambda,
                               std::vector<BigInt> const& x,
                               Weights const& w, Ideal const& n) {
  std::vector<BigInt> out;
  for (std::size_t i = 0; i < x.size(); ++i) {
    out.push_back(mod(pow_mod(lambda, w[i], n.modulus()) * x[i],
                      n.modulus()));
  }
  return out;
}

inline std::vector<BigInt> reduced(std::vector<BigInt> const& x,
                                   Ideal const& n) {
  std::vector<BigInt> out;
  for (auto const& v : x) {
    out.push_back(n.reduce(v));
  }
  return out;
}

}  // namespace detail

struct Equivalence {
  bool equivalent = false;
  BigInt lambda;  // b_i = lambda^{m_i} a_i mod n
};

inline Equivalence equivalent_points(ProjPoint const& a, ProjPoint const& b) {
  require(a.ideal == b.ideal, ErrorCode::ShapeMismatch,
          "equivalent_points: ideals differ");
  require(a.weights == b.weights, ErrorCode::ShapeMismatch,
          "equivalent_points: weights differ");
  if (a.ideal.is_unit()) {
    return {true, 1};
  }
  auto ra = detail::reduced(a.coords, a.ideal);
  auto rb = detail::reduced(b.coords, b.ideal);
  auto hit = detail::scan_units(a.ideal, [&](BigInt const& l) {
    return detail::act(l, ra, a.weights, a.ideal) == rb;
  });
  if (!hit) {
    return {false, 0};
  }
  return {true, *hit};
}

// Lexicographically least representative of the orbit, entries in [0, n).
inline std::vector<BigInt> canonical_form(ProjPoint const& p) {
  require(!p.ideal.is_unit(), ErrorCode::OutOfRange,
          "canonical_form: modulus must be at least 2");
  auto x = detail::reduced(p.coords, p.ideal);
  auto best = x;
  detail::scan_units(p.ideal, [&](BigInt const& l) {
    auto y = detail::act(l, x, p.weights, p.ideal);
    if (y < best) {
      best = std::move(y);
    }
    return false;
  });
  return best;
}

struct ClassEntry {
  std::vector<std::int64_t> representative;
  std::uint64_t size = 0;
};

struct ClassTable {
  std::uint64_t modulus = 0;
  Weights weights;
  std::vector<ClassEntry> classes;  // sorted by representative

  std::size_t count() const { return classes.size(); }
};

// Every orbit of unital tuples in (Z/n)^{l+1}.  Tuples are visited in
// lexicographic order so the first member of each orbit is its canonical
// representative.
inline ClassTable enumerate_classes(std::uint64_t n, Weights const& weights,
                                    EnumerationBudget const& budget = {}) {
  require(n >= 2, ErrorCode::OutOfRange,
          "enumerate_classes: modulus must be at least 2");
  require(weights.size() >= 2, ErrorCode::BadShape,
          "enumerate_classes: need at least two weights");
  for (unsigned w : weights) {
    require(w >= 1, ErrorCode::PreconditionViolated,
            "enumerate_classes: weights must be positive");
  }
  require(n <= budget.max_modulus && weights.size() <= budget.max_length,
          ErrorCode::BudgetExceeded,
          "enumerate_classes: modulus or length exceeds the budget");
  std::size_t len = weights.size();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < len; ++i) {
    require(total <= budget.max_tuples / n, ErrorCode::BudgetExceeded,
            "enumerate_classes: tuple count exceeds the budget");
    total *= n;
  }
  std::vector<std::uint64_t> units;
  for (std::uint64_t l = 1; l < n; ++l) {
    if (std::gcd(l, n) == 1) {
      units.push_back(l);
    }
  }
  // pw[u][i] = units[u]^{w_i} mod n
  std::vector<std::vector<std::uint64_t>> pw(units.size(),
                                             std::vector<std::uint64_t>(len));
  for (std::size_t u = 0; u < units.size(); ++u) {
    for (std::size_t i = 0; i < len; ++i) {
      pw[u][i] = detail::powmod64(units[u], weights[i], n);
    }
  }
  ClassTable table;
  table.modulus = n;
  table.weights = weights;
  std::vector<bool> seen(total, false);
  std::vector<std::uint64_t> x(len);
  std::vector<std::uint64_t> orbit;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    if (seen[idx]) {
      continue;
    }
    std::uint64_t r = idx, g = n;
    for (std::size_t i = len; i-- > 0;) {
      x[i] = r % n;
      r /= n;
      g = std::gcd(g, x[i]);
    }
    if (g != 1) {
      continue;
    }
    orbit.clear();
    for (std::size_t u = 0; u < units.size(); ++u) {
      std::uint64_t code = 0;
      for (std::size_t i = 0; i < len; ++i) {
        code = code * n + x[i] * pw[u][i] % n;
      }
      if (!seen[code]) {
        seen[code] = true;
        orbit.push_back(code);
      }
    }
    ClassEntry e;
    e.representative.assign(x.begin(), x.end());
    e.size = orbit.size();
    table.classes.push_back(std::move(e));
  }
  return table;
}

inline ProjPoint reduce_point(ProjPoint const& p, Ideal const& factor) {
  if (factor.is_unit()) {
    return ProjPoint(p.coords, factor, p.weights);
  }
  return ProjPoint(detail::reduced(p.coords, factor), factor, p.weights);
}

inline std::vector<ProjPoint> reduce_projective(
    ProjPoint const& p, std::vector<Ideal> const& factors) {
  require(!factors.empty(), ErrorCode::BadFactorization,
          "reduce_projective: no factors");
  require(pairwise_coprime(factors), ErrorCode::BadFactorization,
          "reduce_projective: factors are not pairwise coprime");
  require(product(factors) == p.ideal, ErrorCode::BadFactorization,
          "reduce_projective: factors do not multiply to the modulus");
  std::vector<ProjPoint> out;
  for (auto const& f : factors) {
    out.push_back(reduce_point(p, f));
  }
  return out;
}

namespace detail {

// Undo a logged sequence of column operations on a row vector.
inline void undo_column_ops(std::vector<BigInt>& v,
                            std::vector<ElementaryOp> const& ops) {
  IntMatrix row(1, v.size());
  for (std::size_t j = 0; j < v.size(); ++j) {
    row(0, j) = v[j];
  }
  for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
    it->inverse().apply_right(row);
  }
  for (std::size_t j = 0; j < v.size(); ++j) {
    v[j] = row(0, j);
  }
}

inline void apply_column_ops(IntMatrix& m,
                             std::vector<ElementaryOp> const& ops) {
  for (auto const& op : ops) {
    op.apply_right(m);
  }
}

// Column operations adding later columns to column 0 so that the entry of
// the given row in column 0 becomes a unit mod n.
inline std::vector<ElementaryOp> unit_in_first_column(
    std::span<BigInt const> row, Ideal const& n) {
  std::vector<ElementaryOp> ops;
  ShiftWitness w = usc_shift_mod(row, n);
  for (std::size_t j = 0; j < w.coefficients.size(); ++j) {
    if (w.coefficients[j] != 0) {
      ops.push_back(ElementaryOp::add_column(j + 1, 0, w.coefficients[j]));
    }
  }
  return ops;
}

}  // namespace detail

// Congruent mod n to x and unital over Z.
inline std::vector<BigInt> integral_representative(std::vector<BigInt> x,
                                                   Ideal const& n) {
  require(is_unital_mod(x, n), ErrorCode::PreconditionViolated,
          "integral_representative: not unital modulo the ideal");
  if (is_unital(x)) {
    return x;
  }
  if (!n.is_unit()) {
    x = detail::reduced(x, n);
  }
  IntMatrix row(1, x.size());
  for (std::size_t j = 0; j < x.size(); ++j) {
    row(0, j) = x[j];
  }
  auto ops = detail::unit_in_first_column(x, n);
  detail::apply_column_ops(row, ops);
  std::vector<BigInt> y(row.row(0).begin(), row.row(0).end());
  auto t = cmh_perturb(y, n);
  for (std::size_t j = 0; j < y.size(); ++j) {
    y[j] += t[j];
  }
  detail::undo_column_ops(y, ops);
  ensure(is_unital(y), "integral_representative: result not unital");
  return y;
}

namespace detail {

// One induction step: a mod I1 and b mod J with I1, J coprime.
inline ProjPoint crt_lift_pair(ProjPoint const& a, ProjPoint const& b) {
  Ideal const& i1 = a.ideal;
  Ideal const& j = b.ideal;
  std::size_t len = a.length();
  IntMatrix m(2, len);
  for (std::size_t c = 0; c < len; ++c) {
    m(0, c) = i1.reduce(a.coords[c]);
    m(1, c) = j.reduce(b.coords[c]);
  }
  std::vector<ElementaryOp> ops = unit_in_first_column(m.row(0), i1);
  apply_column_ops(m, ops);
  BigInt z = mod_inverse(m(0, 0), i1);
  std::vector<ElementaryOp> clear;
  for (std::size_t c = 1; c < len; ++c) {
    BigInt coef = i1.reduce(-z * m(0, c));
    if (coef != 0) {
      clear.push_back(ElementaryOp::add_column(0, c, coef));
    }
  }
  apply_column_ops(m, clear);
  ops.insert(ops.end(), clear.begin(), clear.end());
  // Later columns now lie in I1, so column 0 stays a unit mod I1.
  std::vector<BigInt> row1(m.row(1).begin(), m.row(1).end());
  auto more = unit_in_first_column(row1, j);
  apply_column_ops(m, more);
  ops.insert(ops.end(), more.begin(), more.end());
  Ideal both = i1 * j;
  std::vector<BigInt> x;
  for (std::size_t c = 0; c < len; ++c) {
    x.push_back(crt_pair(m(0, c), i1, m(1, c), j));
  }
  ensure(is_unit_mod(x[0], both), "crt lift: pivot is not a unit");
  auto t = cmh_perturb(x, both);
  for (std::size_t c = 0; c < len; ++c) {
    x[c] += t[c];
  }
  undo_column_ops(x, ops);
  ensure(is_unital(x), "crt lift: result not unital");
  return ProjPoint(std::move(x), both, a.weights);
}

}  // namespace detail

// A point mod prod I_i reducing to each input exactly, unital over Z.
inline ProjPoint crt_lift_projective(std::vector<ProjPoint> const& points) {
  require(!points.empty(), ErrorCode::PreconditionViolated,
          "crt_lift_projective: no points");
  std::vector<Ideal> ideals;
  for (auto const& p : points) {
    p.validate();
    require(p.weights == points[0].weights, ErrorCode::ShapeMismatch,
            "crt_lift_projective: weights differ");
    ideals.push_back(p.ideal);
  }
  require(pairwise_coprime(ideals), ErrorCode::NonCoprimeModuli,
          "crt_lift_projective: ideals are not pairwise coprime");
  std::vector<ProjPoint const*> proper;
  for (auto const& p : points) {
    if (!p.ideal.is_unit()) {
      proper.push_back(&p);
    }
  }
  if (proper.empty()) {
    ProjPoint const& p = points[0];
    return ProjPoint(integral_representative(p.coords, p.ideal), Ideal(1),
                     p.weights);
  }
  ProjPoint acc = *proper.back();
  acc.coords = integral_representative(acc.coords, acc.ideal);
  for (std::size_t i = proper.size() - 1; i-- > 0;) {
    acc = detail::crt_lift_pair(*proper[i], acc);
  }
  return acc;
}

struct BijectivityReport {
  std::uint64_t domain_count = 0;
  std::vector<std::uint64_t> factor_counts;
  bool injective = false;
  bool counts_multiply = false;

  bool bijective() const { return injective && counts_multiply; }
};

// Checks that reduction PF(Z/n) -> prod PF(Z/n_i) is bijective by
// enumeration.
inline BijectivityReport crt_bijectivity_check(
    std::uint64_t n, std::vector<std::uint64_t> const& factors,
    Weights const& weights, EnumerationBudget const& budget = {}) {
  std::vector<Ideal> fs;
  std::uint64_t prod = 1;
  for (auto f : factors) {
    fs.emplace_back(static_cast<long long>(f));
    prod *= f;
  }
  require(prod == n && pairwise_coprime(fs), ErrorCode::BadFactorization,
          "crt_bijectivity_check: bad factorization");
  ClassTable whole = enumerate_classes(n, weights, budget);
  BijectivityReport rep;
  rep.domain_count = whole.count();
  std::uint64_t expected = 1;
  for (auto f : factors) {
    std::uint64_t c = f == 1 ? 1 : enumerate_classes(f, weights, budget).count();
    rep.factor_counts.push_back(c);
    expected *= c;
  }
  rep.counts_multiply = expected == rep.domain_count;
  std::map<std::vector<std::vector<BigInt>>, std::size_t> images;
  rep.injective = true;
  for (auto const& cls : whole.classes) {
    std::vector<BigInt> coords(cls.representative.begin(),
                               cls.representative.end());
    std::vector<std::vector<BigInt>> key;
    for (auto f : factors) {
      if (f == 1) {
        continue;
      }
      Ideal fi(static_cast<long long>(f));
      key.push_back(canonical_form(
          ProjPoint(detail::reduced(coords, fi), fi, weights)));
    }
    if (!images.emplace(std::move(key), 0).second) {
      rep.injective = false;
    }
  }
  return rep;
}

}  // namespace ulift
