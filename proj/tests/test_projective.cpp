#include <gtest/gtest.h>

#include <map>
#include <numeric>
#include <set>
#include <random>

#include "oracles.hpp"

using namespace ulift;

namespace {

using V = std::vector<BigInt>;

ProjPoint pt(V c, long long n, Weights w) {
  return ProjPoint(std::move(c), Ideal(n), std::move(w));
}

}  // namespace

TEST(ProjPoint, ValidatesShapeAndUnitality) {
  EXPECT_THROW(pt({1}, 5, {1}), Error);
  EXPECT_THROW(pt({1, 2}, 5, {1}), Error);
  EXPECT_THROW(pt({1, 2}, 5, {0, 1}), Error);
  EXPECT_THROW(pt({5, 10}, 5, {1, 1}), Error);
  EXPECT_NO_THROW(pt({2, 3}, 6, {1, 1}));
}

TEST(EquivalentPoints, Examples) {
  auto e = equivalent_points(pt({1, 2}, 5, {1, 2}), pt({1, 2}, 5, {1, 2}));
  EXPECT_TRUE(e.equivalent);
  EXPECT_EQ(e.lambda, 1);

  e = equivalent_points(pt({1, 2}, 5, {1, 2}), pt({2, 3}, 5, {1, 2}));
  EXPECT_TRUE(e.equivalent);
  EXPECT_EQ(e.lambda, 2);

  // [0:1] and [0:n'] with n' a non-residue lie in different classes.
  for (long long p : {3, 5, 7, 11, 13}) {
    long long nr = 2;
    while (pow_mod(nr, (p - 1) / 2, p) == 1) {
      ++nr;
    }
    e = equivalent_points(pt({0, 1}, p, {1, 2}), pt({0, nr}, p, {1, 2}));
    EXPECT_FALSE(e.equivalent) << p;
  }
}

TEST(CanonicalForm, Examples) {
  EXPECT_EQ(canonical_form(pt({1, 0}, 5, {1, 1})), (V{1, 0}));
  EXPECT_EQ(canonical_form(pt({2, 4}, 5, {1, 1})), (V{1, 2}));
  EXPECT_EQ(canonical_form(pt({0, 2}, 5, {1, 2})), (V{0, 2}));
}

TEST(CanonicalForm, MatchesExhaustiveScan) {
  std::mt19937_64 rng(53);
  for (long long n : {4, 6, 9, 12, 15, 25, 49, 101}) {
    for (int rep = 0; rep < 40; ++rep) {
      std::size_t len = 2 + rng() % 2;
      Weights w(len);
      for (auto& x : w) {
        x = 1 + rng() % 3;
      }
      V c(len);
      do {
        for (auto& x : c) {
          x = static_cast<long long>(rng() % n);
        }
      } while (!is_unital_mod(c, Ideal(n)));
      ProjPoint p(c, Ideal(n), w);
      EXPECT_EQ(canonical_form(p), oracle::canonical_scan(p));
    }
  }
}

TEST(EnumerateClasses, ClassCountsForWeightsOneTwo) {
  for (std::uint64_t p : {3, 5, 7, 11, 13}) {
    ClassTable t = enumerate_classes(p, {1, 2});
    EXPECT_EQ(t.count(), p + 2);
    std::map<std::uint64_t, std::uint64_t> prof;
    for (auto const& c : t.classes) {
      ++prof[c.size];
    }
    std::map<std::uint64_t, std::uint64_t> expected = {{p - 1, p},
                                                       {(p - 1) / 2, 2}};
    EXPECT_EQ(prof, expected) << p;
  }
}

TEST(EnumerateClasses, ProjectiveLineOverF3) {
  EXPECT_EQ(enumerate_classes(3, {1, 1}).count(), 4u);
}

TEST(EnumerateClasses, SizesSumToUnitalTuples) {
  for (std::uint64_t n : {6, 8, 9, 12}) {
    for (Weights w : {Weights{1, 1}, Weights{1, 2, 3}}) {
      ClassTable t = enumerate_classes(n, w);
      std::uint64_t total = 0;
      for (auto const& c : t.classes) {
        total += c.size;
      }
      std::uint64_t unital = 0;
      std::vector<std::uint64_t> x(w.size(), 0);
      while (true) {
        std::uint64_t g = n;
        for (auto v : x) {
          g = std::gcd(g, v);
        }
        unital += g == 1 ? 1 : 0;
        std::size_t i = 0;
        while (i < x.size() && ++x[i] == n) {
          x[i++] = 0;
        }
        if (i == x.size()) {
          break;
        }
      }
      EXPECT_EQ(total, unital) << n;
      // Representatives are canonical and pairwise inequivalent.
      std::set<V> seen;
      for (auto const& c : t.classes) {
        V rep(c.representative.begin(), c.representative.end());
        EXPECT_EQ(canonical_form(ProjPoint(rep, Ideal(n), w)), rep);
        EXPECT_TRUE(seen.insert(rep).second);
      }
    }
  }
}

TEST(EnumerateClasses, BudgetIsEnforced) {
  try {
    enumerate_classes(103, {1, 2});
    FAIL();
  } catch (Error const& e) {
    EXPECT_EQ(e.code(), ErrorCode::BudgetExceeded);
  }
  EnumerationBudget b;
  b.max_modulus = 200;
  EXPECT_EQ(enumerate_classes(103, {1, 2}, b).count(), 105u);
}

TEST(ReduceProjective, Examples) {
  auto r = reduce_projective(pt({1, 7}, 15, {1, 1}), {Ideal(3), Ideal(5)});
  ASSERT_EQ(r.size(), 2u);
  EXPECT_EQ(r[0].coords, (V{1, 1}));
  EXPECT_EQ(r[0].ideal.modulus(), 3);
  EXPECT_EQ(r[1].coords, (V{1, 2}));

  ProjPoint p = pt({4, 7}, 9, {1, 1});
  auto same = reduce_projective(p, {Ideal(9)});
  ASSERT_EQ(same.size(), 1u);
  EXPECT_EQ(same[0], p);

  r = reduce_projective(pt({1, 0}, 6, {1, 1}), {Ideal(2), Ideal(3)});
  EXPECT_EQ(r[0].coords, (V{1, 0}));
  EXPECT_EQ(r[1].coords, (V{1, 0}));
}

TEST(ReduceProjective, RejectsBadFactorization) {
  ProjPoint p = pt({1, 7}, 15, {1, 1});
  EXPECT_THROW(reduce_projective(p, {Ideal(3), Ideal(3)}), Error);
  EXPECT_THROW(reduce_projective(p, {Ideal(5)}), Error);
}

TEST(CrtLiftProjective, Examples) {
  ProjPoint single = pt({2, 3}, 7, {1, 1});
  EXPECT_TRUE(
      equivalent_points(crt_lift_projective({single}), single).equivalent);

  ProjPoint a = pt({1, 1}, 3, {1, 1}), b = pt({1, 2}, 5, {1, 1});
  ProjPoint l = crt_lift_projective({a, b});
  EXPECT_EQ(l.ideal.modulus(), 15);
  EXPECT_TRUE(is_unital(l.coords));
  EXPECT_TRUE(equivalent_points(reduce_point(l, Ideal(3)), a).equivalent);
  EXPECT_TRUE(equivalent_points(reduce_point(l, Ideal(5)), b).equivalent);

  l = crt_lift_projective({pt({1, 0}, 2, {1, 1}), pt({1, 0}, 3, {1, 1})});
  EXPECT_TRUE(equivalent_points(l, pt({1, 0}, 6, {1, 1})).equivalent);
}

TEST(CrtLiftProjective, ReductionsRecoverEveryInput) {
  std::mt19937_64 rng(59);
  std::vector<std::vector<long long>> families = {
      {3, 5}, {4, 9, 5}, {8, 27, 25, 7}, {11, 13}, {2, 3, 5, 7, 11}};
  for (auto const& fam : families) {
    for (int rep = 0; rep < 25; ++rep) {
      std::size_t len = 2 + rng() % 3;
      Weights w(len);
      for (auto& x : w) {
        x = 1 + rng() % 4;
      }
      std::vector<ProjPoint> pts;
      for (long long n : fam) {
        V c(len);
        do {
          for (auto& x : c) {
            x = static_cast<long long>(rng() % n);
          }
        } while (!is_unital_mod(c, Ideal(n)));
        pts.emplace_back(c, Ideal(n), w);
      }
      ProjPoint l = crt_lift_projective(pts);
      EXPECT_TRUE(is_unital(l.coords));
      for (auto const& p : pts) {
        EXPECT_TRUE(
            equivalent_points(reduce_point(l, p.ideal), p).equivalent);
      }
    }
  }
}

TEST(CrtBijectivity, Examples) {
  BijectivityReport r = crt_bijectivity_check(15, {3, 5}, {1, 1});
  EXPECT_TRUE(r.bijective());
  EXPECT_EQ(r.domain_count, 24u);
  EXPECT_EQ(r.factor_counts, (std::vector<std::uint64_t>{4, 6}));
  EXPECT_TRUE(crt_bijectivity_check(15, {3, 5}, {1, 2}).bijective());
  EXPECT_TRUE(crt_bijectivity_check(9, {9}, {1, 1}).bijective());
}

TEST(CrtBijectivity, AcceptanceGrid) {
  std::vector<std::pair<std::uint64_t, std::vector<std::uint64_t>>> grid = {
      {15, {3, 5}}, {21, {3, 7}}, {35, {5, 7}}, {30, {2, 3, 5}}};
  for (auto const& [n, fs] : grid) {
    for (Weights w : {Weights{1, 1}, Weights{1, 2}, Weights{2, 3}}) {
      EXPECT_TRUE(crt_bijectivity_check(n, fs, w).bijective()) << n;
    }
  }
}

TEST(Obstruction, Examples) {
  EXPECT_FALSE(orthogonal_obstruction(pt({1, 1, 0}, 7, {1, 1, 1}), 2, 1,
                                      RowBand::first_p));
  EXPECT_TRUE(orthogonal_obstruction(pt({0, 0, 1}, 7, {1, 1, 1}), 2, 1,
                                     RowBand::first_p));
  EXPECT_TRUE(orthogonal_obstruction(pt({1, 0, 1}, 7, {1, 1, 1}), 2, 1,
                                     RowBand::first_p));
  // The last band needs form value -1 times a square.
  EXPECT_FALSE(orthogonal_obstruction(pt({0, 0, 1}, 7, {1, 1, 1}), 2, 1,
                                      RowBand::last_q));
}

TEST(Obstruction, RequiresOddPrimeModulus) {
  try {
    orthogonal_obstruction(pt({1, 1, 0}, 9, {1, 1, 1}), 2, 1,
                           RowBand::first_p);
    FAIL();
  } catch (Error const& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotPrimeModulus);
  }
}
