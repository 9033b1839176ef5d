#include <gtest/gtest.h>

#include "jones/lab/fixtures.hpp"
#include "jones/net.hpp"

using namespace jones;

namespace {

std::vector<Point> line_samples(int n) {
  std::vector<Point> v;
  for (int i = 0; i <= n; ++i) v.push_back({static_cast<double>(i) / n, 0.0});
  return v;
}

}  // namespace

TEST(Nets, Singleton) {
  NetHierarchy h = build_nets({{0.5, 0.5}}, -2, 4, NormedSpace::l2());
  for (int k = -2; k <= 4; ++k) ASSERT_EQ(h.level(k).size(), 1u);
}

TEST(Nets, TwoPointsLevelZero) {
  NetHierarchy h = build_nets({{0, 0}, {1, 0}}, 0, 0, NormedSpace::l2());
  EXPECT_EQ(h.level(0).size(), 2u);
}

TEST(Nets, DenseUnitInterval) {
  NetHierarchy h = build_nets(line_samples(64), 0, 2, NormedSpace::l2());
  const auto& X = h.level(2);
  ASSERT_EQ(X.size(), 5u);
  std::vector<double> xs;
  for (const auto& x : X) xs.push_back(x[0]);
  std::sort(xs.begin(), xs.end());
  EXPECT_EQ(xs, (std::vector<double>{0.0, 0.25, 0.5, 0.75, 1.0}));
}

TEST(Nets, Errors) {
  EXPECT_THROW(build_nets({}, 0, 2, NormedSpace::l2()), InputError);
  EXPECT_THROW(build_nets({{0, 0}}, 3, 2, NormedSpace::l2()), InputError);
}

TEST(Nets, InvariantsOnRandomSets) {
  lab::Rng rng(3);
  for (double p : {1.0, 2.0, std::numeric_limits<double>::infinity()}) {
    NormedSpace s = NormedSpace::lp(2, p);
    auto pts = lab::random_cloud(rng, s, 150, 1.0);
    auto h = build_nets(pts, -1, 6, s);
    auto chk = verify_nets(h, pts);
    EXPECT_TRUE(chk.ok()) << chk.detail;
  }
}

TEST(Nets, Deterministic) {
  lab::Rng a(9), b(9);
  NormedSpace s = NormedSpace::l2();
  auto h1 = build_nets(lab::random_cloud(a, s, 80, 1.0), 0, 5, s);
  auto h2 = build_nets(lab::random_cloud(b, s, 80, 1.0), 0, 5, s);
  for (int k = 0; k <= 5; ++k) EXPECT_EQ(h1.level(k), h2.level(k));
}

TEST(Nets, PartialLevelSkipsMaximality) {
  NormedSpace s = NormedSpace::l2();
  auto pts = line_samples(8);
  NetHierarchy h(s, 0, 1, {{0, {{0, 0}}}, {1, {{0, 0}}}}, {{1, true}});
  auto chk = verify_nets(h, pts);
  EXPECT_TRUE(chk.ok()) << chk.detail;
  NetHierarchy full(s, 0, 1, {{0, {{0, 0}}}, {1, {{0, 0}}}});
  EXPECT_FALSE(verify_nets(full, pts).maximal);
}

TEST(Family, Radii) {
  NormedSpace s = NormedSpace::l2();
  MultiresFamily one(build_nets({{0, 0}}, 0, 3, s), 240.0);
  ASSERT_EQ(one.balls().size(), 4u);
  for (const auto& b : one.balls()) EXPECT_EQ(b.r(), std::ldexp(240.0, -b.level));

  MultiresFamily two(build_nets({{0, 0}, {1, 0}}, 0, 0, s), 4.0);
  ASSERT_EQ(two.balls().size(), 2u);
  for (const auto& b : two.balls()) EXPECT_EQ(b.r(), 4.0);

  MultiresFamily five(build_nets(line_samples(64), 2, 2, s), 4.0);
  ASSERT_EQ(five.balls().size(), 5u);
  for (const auto& b : five.balls()) EXPECT_EQ(b.r(), 1.0);
  EXPECT_EQ(five.ball({2, 3}).id.str(), "2:3");
}

TEST(Family, NetBall) {
  Ball q = make_ball({0, 0}, 0, 240.0);
  EXPECT_DOUBLE_EQ(net_ball(q).r(), 1.0 / 3.0);
  EXPECT_DOUBLE_EQ(net_ball(make_ball({0, 0}, 3, 4.0)).r(), 1.0 / 24.0);
}

TEST(Family, NetBallGap) {
  NormedSpace s = NormedSpace::l2();
  lab::Rng rng(21);
  auto pts = lab::random_cloud(rng, s, 200, 1.0);
  MultiresFamily f(build_nets(pts, 0, 5, s), 4.0);
  const auto& balls = f.balls();
  for (size_t i = 0; i < balls.size(); ++i)
    for (size_t j = i + 1; j < balls.size(); ++j) {
      if (balls[i].level != balls[j].level) continue;
      double r = net_ball(balls[i]).r();
      EXPECT_GE(s.distance(balls[i].center, balls[j].center) - 2 * r, r * (1 - 1e-12));
    }
}

TEST(Family, DefaultLevels) {
  EXPECT_EQ(default_k_max(1.0 / 64), 7);
  EXPECT_EQ(default_k_min(1.0), 0);
  EXPECT_EQ(default_k_min(3.0), -2);
}
