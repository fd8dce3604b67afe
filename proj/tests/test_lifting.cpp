#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "sampling.hpp"

using namespace ulift;

namespace {

using V = std::vector<BigInt>;

template <typename F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (Error const& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an ulift::Error";
  return ErrorCode::Internal;
}

ProjPoint pt(V c, long long n, Weights w) {
  return ProjPoint(std::move(c), Ideal(n), std::move(w));
}

std::vector<ProjPoint> four_points() {
  long long const mods[] = {241, 601, 1201, 1321};
  std::vector<Weights> const w = {
      {2, 5, 3, 10}, {8, 20, 30, 24}, {1, 50, 48, 40}, {11, 55, 44, 22}};
  std::vector<ProjPoint> pts;
  for (std::size_t i = 0; i < 4; ++i) {
    pts.push_back(pt({1, 1, 1, 1}, mods[i], w[i]));
  }
  return pts;
}

CongruenceTarget target(IntMatrix rows, std::vector<Ideal> ideals) {
  return {std::move(rows), std::move(ideals)};
}

}  // namespace

TEST(SlLift, Examples) {
  LiftCertificate c = sl_lift(IntMatrix::identity(3), Ideal(7));
  EXPECT_EQ(c.output, IntMatrix::identity(3));
  EXPECT_TRUE(c.all_pass());

  IntMatrix m{{2, 0}, {0, 3}};
  c = sl_lift(m, Ideal(5));
  EXPECT_EQ(det(c.output), 1);
  EXPECT_TRUE(congruent(c.output, m, Ideal(5)));

  EXPECT_EQ(code_of([] { sl_lift(IntMatrix{{0, 1}, {1, 0}}, Ideal(5)); }),
            ErrorCode::NotSLModN);
  EXPECT_TRUE(verify_ok(sl_lift(IntMatrix{{0, 4}, {1, 0}}, Ideal(5))));
}

TEST(SlLift, RandomInstances) {
  std::mt19937_64 rng(61);
  for (std::size_t k : {2, 3, 4, 5}) {
    for (long long n : {2, 4, 12, 49, 101, 1000003}) {
      for (int rep = 0; rep < 10; ++rep) {
        IntMatrix m = cli::random_sl_mod(rng, k, Ideal(n));
        LiftCertificate c = sl_lift(m, Ideal(n));
        EXPECT_EQ(det(c.output), 1);
        EXPECT_TRUE(congruent(c.output, m, Ideal(n)));
        EXPECT_TRUE(verify_ok(c));
      }
    }
  }
}

TEST(Lifts, ModulusBeyondSixtyFourBits) {
  std::mt19937_64 rng(89);
  Ideal n(BigInt("999999999999999989") * BigInt("1000000007"));
  for (std::size_t k : {2, 3}) {
    IntMatrix m = cli::random_sl_mod(rng, k, n);
    EXPECT_TRUE(verify_ok(sl_lift(m, n)));
    IntMatrix sp = cli::random_sp_mod(rng, k, n);
    EXPECT_TRUE(verify_ok(sp_lift(sp, n)));
  }
}

TEST(SlLift, AcceptsUnreducedInput) {
  IntMatrix m{{12, -5}, {5, 3}};
  LiftCertificate c = sl_lift(m, Ideal(5));
  EXPECT_TRUE(congruent(c.output, m, Ideal(5)));
  EXPECT_EQ(det(c.output), 1);
}

TEST(SpLift, Examples) {
  LiftCertificate c = sp_lift(IntMatrix::identity(4), Ideal(9));
  EXPECT_EQ(c.output, IntMatrix::identity(4));

  IntMatrix two{{2, 0}, {0, 3}};
  c = sp_lift(two, Ideal(5));
  EXPECT_TRUE(is_symplectic(c.output));
  EXPECT_TRUE(congruent(c.output, two, Ideal(5)));

  IntMatrix j = SymplecticForm{2}.materialize();
  c = sp_lift(mat_mod(j, Ideal(5)), Ideal(5));
  EXPECT_TRUE(is_symplectic(c.output));
  EXPECT_TRUE(congruent(c.output, j, Ideal(5)));
}

TEST(SpLift, RejectsNonSymplectic) {
  EXPECT_EQ(code_of([] { sp_lift(IntMatrix{{2, 0}, {0, 2}}, Ideal(5)); }),
            ErrorCode::NotSymplecticModN);
  EXPECT_EQ(code_of([] { sp_lift(IntMatrix::identity(3), Ideal(5)); }),
            ErrorCode::BadShape);
}

TEST(SpLift, RandomInstances) {
  std::mt19937_64 rng(67);
  for (std::size_t k : {1, 2, 3}) {
    for (long long n : {2, 4, 12, 27, 101}) {
      for (int rep = 0; rep < 8; ++rep) {
        IntMatrix m = cli::random_sp_mod(rng, k, Ideal(n));
        ASSERT_TRUE(is_symplectic(m, Ideal(n)));
        LiftCertificate c = sp_lift(m, Ideal(n));
        EXPECT_TRUE(is_symplectic(c.output));
        EXPECT_TRUE(congruent(c.output, m, Ideal(n)));
      }
    }
  }
}

TEST(SpExtend, RowExamples) {
  V e1 = {1, 0, 0, 0};
  IntMatrix g = sp_extend_row(e1, 2, 0);
  EXPECT_TRUE(is_symplectic(g));
  EXPECT_EQ(V(g.row(0).begin(), g.row(0).end()), e1);

  V r = {1, 2, 3, 4};
  g = sp_extend_row(r, 2, 0);
  EXPECT_TRUE(is_symplectic(g));
  EXPECT_EQ(V(g.row(0).begin(), g.row(0).end()), r);
  EXPECT_EQ(g.block(0, 0, 2, 2), (IntMatrix{{1, 2}, {0, 1}}));
  EXPECT_EQ(g.block(0, 2, 2, 2), (IntMatrix{{3, 4}, {4, 0}}));

  V u = {0, 0, 1, 0};
  g = sp_extend_row(u, 2, 0);
  EXPECT_TRUE(is_symplectic(g));
  EXPECT_EQ(V(g.row(0).begin(), g.row(0).end()), u);
}

TEST(SpExtend, ColumnExamples) {
  V r = {1, 2, 3, 4};
  IntMatrix g = sp_extend_column(r, 2, 0);
  EXPECT_TRUE(is_symplectic(g));
  EXPECT_EQ(g.column(0), r);
  EXPECT_EQ(g, transpose(sp_extend_row(r, 2, 0)));
  EXPECT_EQ(code_of([] { sp_extend_column(V{2, 0, 0, 0}, 2, 0); }),
            ErrorCode::NoUnitEntry);
  EXPECT_EQ(code_of([] { sp_extend_row(V{1, 0, 0}, 2, 0); }),
            ErrorCode::BadLength);
  EXPECT_EQ(code_of([] { sp_extend_row(V{1, 0, 0, 0}, 2, 4); }),
            ErrorCode::OutOfRange);
}

TEST(SpExtend, EveryPositionEmbedsVerbatim) {
  std::mt19937_64 rng(71);
  for (std::size_t k : {1, 2, 3, 4}) {
    for (int rep = 0; rep < 40; ++rep) {
      V v = oracle::random_row_with_unit(rng, 2 * k, 1000);
      for (std::size_t pos = 0; pos < 2 * k; ++pos) {
        IntMatrix g = sp_extend_row(v, k, pos);
        EXPECT_TRUE(is_symplectic(g));
        EXPECT_EQ(V(g.row(pos).begin(), g.row(pos).end()), v);
        IntMatrix h = sp_extend_column(v, k, pos);
        EXPECT_TRUE(is_symplectic(h));
        EXPECT_EQ(h.column(pos), v);
      }
    }
  }
}

TEST(SlMulti, Examples) {
  LiftCertificate c = sl_multi_congruence_lift(
      target(IntMatrix{{4, 7}, {3, 9}}, {Ideal(1), Ideal(1)}));
  EXPECT_EQ(c.output, IntMatrix::identity(2));

  CongruenceTarget t = target(IntMatrix{{1, 1}, {1, 1}}, {Ideal(3), Ideal(5)});
  c = sl_multi_congruence_lift(t);
  EXPECT_EQ(det(c.output), 1);
  EXPECT_TRUE(rows_congruent(c.output, t.rows, t.ideals));
  // A known valid answer also satisfies the predicate.
  EXPECT_TRUE(rows_congruent(IntMatrix{{7, 1}, {6, 1}}, t.rows, t.ideals));

  IntMatrix ones(4, 4);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      ones(i, j) = 1;
    }
  }
  t = target(ones, {Ideal(241), Ideal(601), Ideal(1201), Ideal(1321)});
  c = sl_multi_congruence_lift(t);
  EXPECT_EQ(det(c.output), 1);
  EXPECT_TRUE(rows_congruent(c.output, ones, t.ideals));
}

TEST(SlMulti, Preconditions) {
  EXPECT_EQ(code_of([] {
              sl_multi_congruence_lift(
                  target(IntMatrix{{1, 1}, {1, 1}}, {Ideal(3), Ideal(6)}));
            }),
            ErrorCode::NonCoprimeModuli);
  EXPECT_EQ(code_of([] {
              sl_multi_congruence_lift(
                  target(IntMatrix{{3, 6}, {1, 1}}, {Ideal(3), Ideal(5)}));
            }),
            ErrorCode::RowNotUnital);
}

TEST(SlMulti, RandomTargets) {
  std::mt19937_64 rng(73);
  std::vector<std::vector<std::int64_t>> families = {
      {3, 5}, {4, 9, 25}, {1, 7, 1}, {8, 27, 25, 49}, {2, 3, 5, 7, 11}};
  for (auto const& fam : families) {
    for (int rep = 0; rep < 10; ++rep) {
      CongruenceTarget t = oracle::random_target(rng, fam, fam.size());
      LiftCertificate c = sl_multi_congruence_lift(t);
      EXPECT_EQ(det(c.output), 1);
      EXPECT_TRUE(rows_congruent(c.output, t.rows, t.ideals));
      EXPECT_TRUE(verify_ok(c));
    }
  }
}

TEST(SpMulti, Examples) {
  IntMatrix any{{4, 7, 1, 2}, {3, 9, 5, 5}, {1, 1, 1, 1}, {2, 3, 4, 5}};
  LiftCertificate c = sp_multi_congruence_lift(
      target(any, {Ideal(1), Ideal(1), Ideal(1), Ideal(1)}));
  EXPECT_EQ(c.output, IntMatrix::identity(4));

  CongruenceTarget t = target(IntMatrix{{1, 0}, {0, 1}}, {Ideal(3), Ideal(5)});
  c = sp_multi_congruence_lift(t);
  EXPECT_TRUE(is_symplectic(c.output));
  EXPECT_TRUE(rows_congruent(c.output, t.rows, t.ideals));

  IntMatrix ones(4, 4);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      ones(i, j) = 1;
    }
  }
  t = target(ones, {Ideal(241), Ideal(601), Ideal(1201), Ideal(1321)});
  c = sp_multi_congruence_lift(t);
  EXPECT_TRUE(is_symplectic(c.output));
  EXPECT_TRUE(rows_congruent(c.output, ones, t.ideals));
}

TEST(SpMulti, RejectsOddSize) {
  EXPECT_EQ(code_of([] {
              sp_multi_congruence_lift(target(IntMatrix{{1, 0, 0}, {0, 1, 0},
                                                        {0, 0, 1}},
                                              {Ideal(3), Ideal(5), Ideal(7)}));
            }),
            ErrorCode::BadShape);
}

TEST(SpMulti, RandomTargets) {
  std::mt19937_64 rng(79);
  std::vector<std::vector<std::int64_t>> families = {
      {3, 5}, {4, 9, 25, 7}, {1, 7, 1, 11}, {8, 27, 25, 49, 11, 13}};
  for (auto const& fam : families) {
    for (int rep = 0; rep < 6; ++rep) {
      CongruenceTarget t = oracle::random_target(rng, fam, fam.size());
      LiftCertificate c = sp_multi_congruence_lift(t);
      EXPECT_TRUE(is_symplectic(c.output));
      EXPECT_TRUE(rows_congruent(c.output, t.rows, t.ideals));
    }
  }
}

TEST(Surject, SlExamples) {
  LiftCertificate c = sl_surject_projective(
      {pt({1, 0}, 3, {1, 1}), pt({0, 1}, 5, {1, 1})});
  EXPECT_TRUE(c.all_pass());

  c = sl_surject_projective(four_points());
  EXPECT_EQ(det(c.output), 1);
  EXPECT_TRUE(verify_ok(c));
  ASSERT_EQ(c.lambdas.size(), 4u);

  c = sl_surject_projective({pt({1, 2, 3}, 5, {2, 2, 2}),
                             pt({4, 0, 1}, 7, {2, 2, 2}),
                             pt({2, 5, 9}, 11, {2, 2, 2})});
  EXPECT_EQ(det(c.output), 1);
  EXPECT_TRUE(verify_ok(c));
}

TEST(Surject, SpExamples) {
  LiftCertificate c = sp_surject_projective(
      {pt({1, 1}, 3, {1, 1}), pt({1, 2}, 5, {1, 1})});
  EXPECT_TRUE(is_symplectic(c.output));
  EXPECT_TRUE(verify_ok(c));

  c = sp_surject_projective(four_points());
  EXPECT_TRUE(is_symplectic(c.output));
  EXPECT_TRUE(verify_ok(c));

  c = sp_surject_projective({pt({3, 4}, 1, {1, 1}), pt({5, 6}, 1, {1, 1})});
  EXPECT_EQ(c.output, IntMatrix::identity(2));
}

TEST(Surject, LambdasMapTargetsOntoRows) {
  auto pts = four_points();
  LiftCertificate c = sl_surject_projective(pts);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    BigInt const& n = pts[i].ideal.modulus();
    for (std::size_t j = 0; j < 4; ++j) {
      EXPECT_EQ(mod(c.output(i, j), n),
                mod(pow_mod(c.lambdas[i], pts[i].weights[j], n) *
                        pts[i].coords[j],
                    n));
    }
  }
}

TEST(Certificate, VerifyDetectsTampering) {
  LiftCertificate c = sl_lift(IntMatrix{{2, 0}, {0, 3}}, Ideal(5));
  ASSERT_TRUE(verify_ok(c));
  LiftCertificate bad = c;
  bad.output(0, 0) += 5;
  EXPECT_FALSE(verify_ok(bad));
  // Stored check fields are ignored.
  for (auto const& ch : bad.checks) {
    EXPECT_TRUE(ch.pass);
  }

  LiftCertificate s = sl_surject_projective(four_points());
  LiftCertificate wrong = s;
  wrong.lambdas[0] += 1;
  auto checks = verify(wrong);
  bool lambda_failed = false;
  for (auto const& ch : checks) {
    if (ch.name == "lambdas") {
      lambda_failed = !ch.pass;
    }
  }
  EXPECT_TRUE(lambda_failed);
}
