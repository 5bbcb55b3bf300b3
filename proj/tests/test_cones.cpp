#include <gtest/gtest.h>

#include <random>

#include "flagprim/cones.hpp"
#include "flagprim/linalg.hpp"
#include "test_support.hpp"

using namespace flagprim;

namespace {

QVec q(std::initializer_list<long> xs) {
  QVec v;
  for (long x : xs) v.push_back(Rational(x));
  return v;
}

}  // namespace

TEST(Cones, LpBasics) {
  // max x + y, x + 2y <= 4, 3x + y <= 6
  LinearProgram lp;
  lp.a_le = {q({1, 2}), q({3, 1})};
  lp.b_le = q({4, 6});
  lp.c = q({1, 1});
  auto s = solve_lp(lp, 2);
  ASSERT_EQ(s.status, LPSolution::Status::Optimal);
  EXPECT_EQ(s.value, make_rational(14, 5));
  lp.a_eq = {q({1, -1})};
  lp.b_eq = q({5});
  EXPECT_EQ(solve_lp(lp, 2).status, LPSolution::Status::Infeasible);
  LinearProgram unb;
  unb.a_le = {q({1, -1})};
  unb.b_le = q({1});
  unb.c = q({1, 1});
  EXPECT_EQ(solve_lp(unb, 2).status, LPSolution::Status::Unbounded);
}

TEST(Cones, MembershipExamples) {
  RationalCone c({q({1, 0}), q({0, 1})}, 2);
  EXPECT_TRUE(cone_member(c, q({1, 1}), true));
  EXPECT_FALSE(cone_member(c, q({1, 0}), true));
  EXPECT_TRUE(cone_member(c, q({1, 0}), false));
  RationalCone e1({q({1})}, 1);
  EXPECT_FALSE(cone_member(e1, q({-1}), false));
  RationalCone zero({q({0, 0})}, 2);
  EXPECT_TRUE(zero.generators.empty());
  EXPECT_FALSE(cone_member(zero, q({0, 0}), true));
  EXPECT_TRUE(cone_member(zero, q({0, 0}), false));
}

TEST(Cones, ConvexHullExamples) {
  EXPECT_TRUE(zero_in_interior_conv({q({1}), q({-1})}));
  EXPECT_FALSE(zero_in_interior_conv({q({1, 0}), q({0, 1})}));
  auto A2 = root_system("A2");
  std::vector<QVec> pts;
  for (const auto& w : weyl_orbit(*A2, Weight{2, 1})) pts.push_back(to_qvec(w));
  EXPECT_TRUE(zero_in_interior_conv(pts));
  EXPECT_EQ(affine_dimension(pts), 2);
  // 0 on the boundary: in conv, not in the relative interior
  EXPECT_TRUE(zero_in_conv({q({0, 0}), q({1, 0})}));
  EXPECT_FALSE(zero_in_interior_conv({q({0, 0}), q({1, 0})}));
}

TEST(Cones, InteriorsIntersect) {
  RationalCone full({q({1, 0}), q({0, 1}), q({-1, -1})}, 2);
  EXPECT_TRUE(interiors_intersect(full, full));
  RationalCone pos({q({1, 0}), q({0, 1})}, 2), neg({q({-1, 0}), q({0, -1})}, 2);
  EXPECT_FALSE(interiors_intersect(pos, neg));
  // A2, fundamental weights: cone{w1, w2} vs cone{w2, w1 + w2} overlap in their interiors
  RationalCone a({q({1, 0}), q({0, 1})}, 2), b({q({0, 1}), q({1, 1})}, 2);
  EXPECT_TRUE(interiors_intersect(a, b));
  // angle-sorted adjacent cones touching along a ray only
  RationalCone c({q({1, 0}), q({1, 1})}, 2), d({q({1, 1}), q({0, 1})}, 2);
  EXPECT_FALSE(interiors_intersect(c, d));
}

TEST(Cones, RayInCone) {
  EXPECT_TRUE(ray_in_cone(q({1, 0}), {q({1, 0}), q({0, 1})}));
  EXPECT_FALSE(ray_in_cone(q({1, 0}), {q({0, 1})}));
  EXPECT_FALSE(ray_in_cone(q({0, 0}), {q({0, 1})}));
  // d = 2: ray of l1* meets cone{l2} iff they are proportional
  EXPECT_TRUE(ray_in_cone(q({0, 2}), {q({0, 3})}));
  EXPECT_FALSE(ray_in_cone(q({1, 2}), {q({2, 1})}));
}

TEST(Cones, SimplexAgreesWithFourierMotzkin) {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> coef(-3, 3), dimd(1, 5), ngen(0, 5);
  int strict_true = 0, plain_true = 0;
  for (int it = 0; it < 10000; ++it) {
    int dim = dimd(rng), n = ngen(rng);
    std::vector<QVec> gens;
    for (int i = 0; i < n; ++i) {
      QVec g(dim);
      for (auto& x : g) x = coef(rng);
      gens.push_back(g);
    }
    QVec x(dim);
    if (n > 0 && it % 2 == 0) {
      // bias towards members: random nonnegative combination
      for (auto& v : x) v = 0;
      for (int i = 0; i < n; ++i) {
        int c = std::uniform_int_distribution<int>(0, 2)(rng);
        for (int k = 0; k < dim; ++k) x[k] += c * gens[i][k];
      }
    } else {
      for (auto& v : x) v = coef(rng);
    }
    RationalCone C(gens, dim);
    for (bool strict : {false, true}) {
      bool a = cone_member(C, x, strict), b = cone_member_fm(C, x, strict);
      ASSERT_EQ(a, b) << "iteration " << it << " strict " << strict;
      (strict ? strict_true : plain_true) += a;
    }
  }
  EXPECT_GT(strict_true, 100);
  EXPECT_GT(plain_true, 1000);
}

TEST(Cones, ConvInvariances) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> coef(-3, 3), scale(1, 5);
  for (int it = 0; it < 500; ++it) {
    int n = 2 + static_cast<int>(rng() % 4), dim = 1 + static_cast<int>(rng() % 3);
    std::vector<QVec> pts;
    for (int i = 0; i < n; ++i) {
      QVec p(dim);
      for (auto& x : p) x = coef(rng);
      pts.push_back(p);
    }
    bool base = zero_in_interior_conv(pts);
    auto scaled = pts;
    for (auto& p : scaled) {
      Rational s(scale(rng), scale(rng));
      s.canonicalize();
      for (auto& x : p) x *= s;
    }
    std::shuffle(scaled.begin(), scaled.end(), rng);
    EXPECT_EQ(zero_in_interior_conv(scaled), base);
  }
}

TEST(Cones, SuterChambers) {
  for (const auto& name : fpt::types_up_to_rank(4)) {
    auto R = root_system(name);
    auto ch = suter_chambers(*R);
    ASSERT_EQ(static_cast<int>(ch.size()), R->rank() + 1);
    EXPECT_TRUE(ch.back().owner.word.empty()) << name;
    std::mt19937_64 rng(1234);
    std::uniform_int_distribution<int> c(0, 6);
    const int draws = 10000 / 10;
    for (int it = 0; it < draws; ++it) {
      std::vector<QVec> pts;
      for (const auto& C : ch) {
        QVec x(R->rank(), 0);
        for (const auto& g : C.generators) {
          int k = c(rng);
          for (int j = 0; j < R->rank(); ++j) x[j] += k * g[j];
        }
        pts.push_back(x);
      }
      ASSERT_TRUE(zero_in_conv(pts)) << name;
    }
  }
  auto A1 = suter_chambers(*root_system("A1"));
  EXPECT_EQ(A1[0].generators[0], (Weight{-1}));
  EXPECT_EQ(A1[1].generators[0], (Weight{1}));
}
