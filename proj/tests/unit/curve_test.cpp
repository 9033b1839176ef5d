#include <gtest/gtest.h>

#include "jones/constants.hpp"
#include "jones/curve.hpp"
#include "jones/lab/fixtures.hpp"
#include "jones/lab/generators.hpp"
#include "oracles.hpp"

using namespace jones;

namespace {

const NormedSpace kL2 = NormedSpace::l2();
constexpr double kEps2 = 0.05;

}  // namespace

TEST(Curve, Construction) {
  EXPECT_THROW(Curve(kL2, {{0, 0}}), InputError);
  EXPECT_THROW(Curve(kL2, {{0, 0}, {0, 0}, {1, 0}}), InputError);
  Curve sq(kL2, {{0, 0}, {1, 0}, {1, 1}, {0, 1}}, true);
  EXPECT_EQ(sq.path().size(), 5u);
  EXPECT_DOUBLE_EQ(curve_length(sq), 4.0);
  EXPECT_TRUE(sq.injective());
  Curve bow(kL2, {{0, 0}, {1, 1}, {1, 0}, {0, 1}});
  EXPECT_FALSE(bow.injective());
  Point m = sq.at(0.125);
  EXPECT_NEAR(m[0], 0.5, 1e-15);
  EXPECT_NEAR(m[1], 0.0, 1e-15);
}

TEST(Curve, Lengths) {
  EXPECT_DOUBLE_EQ(curve_length(lab::segment(kL2, 1.0)), 1.0);
  EXPECT_NEAR(curve_length(lab::koch(kL2, 1)), 4.0 / 3.0, 1e-15);
  EXPECT_EQ(lab::koch(kL2, 1).vertices().size(), 5u);
}

TEST(RestrictedMeasure, Examples) {
  Curve seg = lab::segment(kL2, 1.0);
  EXPECT_NEAR(restricted_measure(seg, BallUnion{{RBall{{0.5, 0}, 0.25}}}), 0.5, 1e-12);
  EXPECT_NEAR(restricted_measure(seg, BallUnion{{RBall{{0.5, 0}, 3}}}), 1.0, 1e-12);
  EXPECT_EQ(restricted_measure(seg, BallUnion{{RBall{{0.5, 5}, 1}}}), 0.0);
  // Overlapping balls are not double counted.
  BallUnion two{{RBall{{0.3, 0}, 0.2}, RBall{{0.5, 0}, 0.2}}};
  EXPECT_NEAR(restricted_measure(seg, two), 0.6, 1e-12);
}

TEST(RestrictedMeasure, LInfinityBox) {
  NormedSpace s = NormedSpace::linf();
  Curve diag(s, {{-1, -1}, {1, 1}});
  // The sup-norm ball of radius 0.5 around the origin cuts the middle half.
  EXPECT_NEAR(restricted_measure(diag, BallUnion{{RBall{{0, 0}, 0.5}}}) / curve_length(diag), 0.5, 1e-12);
}

TEST(LambdaArcs, Examples) {
  Curve line(kL2, {{-3, 0}, {3, 0}});
  Ball q = make_ball({0, 0}, 4, 4.0);
  EXPECT_EQ(lambda_arcs(line, q, 1.0).size(), 1u);
  Curve plus = lab::plus_sign(kL2);
  EXPECT_EQ(lambda_arcs(plus, q, 1.0).size(), 2u);
  EXPECT_EQ(lambda_arcs(plus, make_ball({0, 0}, 0, 4.0), 5.0).size(), 1u);
  EXPECT_TRUE(lambda_arcs(line, make_ball({0, 9}, 2, 1.0), 1.0).empty());
  EXPECT_THROW(lambda_arcs(line, q, 3.0), InputError);
  EXPECT_NO_THROW(lambda_arcs(line, q, 3.0, true));
}

TEST(ArcBeta, Examples) {
  Curve line(kL2, {{0, 0}, {1, 1}, {2, 2}});
  EXPECT_LT(arc_beta(line, {0.1, 0.9}), BETA_ZERO_TOL);
  oracle::BetaGrid g(kL2, 20000);

  std::vector<Point> arc;
  for (int i = 0; i <= 256; ++i) {
    double t = M_PI / 2 * i / 256;
    arc.push_back({std::cos(t), std::sin(t)});
  }
  Curve quarter(kL2, arc);
  double want = g.width(arc) / std::sqrt(2.0);
  EXPECT_NEAR(want, 0.10355, 1e-4);
  EXPECT_NEAR(arc_beta(quarter, {0, 1}), want, 1e-6);

  std::vector<Point> v{{std::sqrt(0.5), std::sqrt(0.5)}, {0, 0}, {std::sqrt(0.5), -std::sqrt(0.5)}};
  Curve vee(kL2, v);
  EXPECT_NEAR(g.width(v) / std::sqrt(2.0), 0.25, 1e-6);
  EXPECT_NEAR(arc_beta(vee, {0, 1}), 0.25, 1e-12);
}

TEST(CurveBeta, UsesClippedEndpoints) {
  Curve c(kL2, {{-2, 0}, {0, 0}, {0, 2}});
  auto r = curve_beta(c, RBall{{0, 0}, 1});
  // Gamma cap B(0,1) is an L with legs 1; best line parallel to the chord.
  EXPECT_NEAR(r.beta, 0.25 * std::sqrt(2.0) / 2.0, 1e-12);
}

TEST(Classify, StraightAllFlat) {
  Curve line(kL2, {{-3, 0}, {3, 0}});
  auto cls = classify(line, make_ball({0, 0}, 2, 4.0), 1.0, kEps2);
  EXPECT_EQ(cls.n_flat(), cls.arcs.size());
  EXPECT_EQ(cls.n_dominant(), 0u);
}

TEST(Classify, PlusSignBothFlat) {
  Curve plus = lab::plus_sign(kL2);
  auto cls = classify(plus, make_ball({0, 0}, 4, 4.0), 1.0, kEps2);
  ASSERT_EQ(cls.arcs.size(), 2u);
  EXPECT_EQ(cls.n_flat(), 2u);
  EXPECT_EQ(cls.n_star(), 2u);
  EXPECT_GT(cls.beta_gamma, 0.0);
  oracle::BetaGrid g(kL2, 20000);
  auto in = curve_in_ball(plus, RBall{{0, 0}, 0.25});
  EXPECT_NEAR(cls.beta_gamma, oracle::beta_ball(g, kL2, in, {0, 0}, 0.25), 1e-6);
}

TEST(Classify, BentArcDominant) {
  Curve vee(kL2, {{-1, 1}, {0, 0}, {1, 1}});
  auto cls = classify(vee, make_ball({0, 0}, 4, 4.0), 1.0, kEps2);
  ASSERT_EQ(cls.arcs.size(), 1u);
  EXPECT_TRUE(cls.dominant(0));
  EXPECT_FALSE(cls.flat[0]);
}

TEST(BBall, Examples) {
  double eps1 = 1.0 / (126 * 4.0);
  auto straight = is_B_ball(Curve(kL2, {{-3, 0}, {3, 0}}), make_ball({0, 0}, 4, 4.0), 1.0, eps1, kEps2);
  EXPECT_FALSE(straight.is_B);
  EXPECT_EQ(straight.failed, "i");

  auto plus = is_B_ball(lab::plus_sign(kL2), make_ball({0, 0}, 6, 4.0), 1.0, eps1, kEps2);
  EXPECT_TRUE(plus.clause_i && plus.clause_ii && plus.clause_iii);
  EXPECT_TRUE(plus.is_B);
  EXPECT_FALSE(plus.b0_excluded);

  auto bent = is_B_ball(Curve(kL2, {{-1, 1}, {0, 0}, {1, 1}}), make_ball({0, 0}, 6, 4.0), 1.0, eps1, kEps2);
  EXPECT_FALSE(bent.is_B);
  EXPECT_EQ(bent.failed, "ii");
}

TEST(Fragment, StraightDiametrical) {
  Curve line(kL2, {{-3, 0}, {3, 0}});
  Ball q = make_ball({0, 0}, 4, 4.0);
  RBall qs{{0, 0}, std::ldexp(0.2, -4)};
  auto h = maximal_fragment(line, q, BallUnion{{qs}}, qs, 1.0, kEps2, 4);
  EXPECT_NEAR(h.diam, 2 * qs.radius, 1e-12);
  EXPECT_TRUE(h.lower_ok && h.upper_ok && h.u_ok);
}

TEST(Fragment, RadialSpokeLowerEnd) {
  Curve spoke = lab::radial_spoke(kL2);
  Ball q = make_ball({0, 0}, 4, 4.0);
  RBall qs{{0, 0}, std::ldexp(0.2, -4)};
  auto h = maximal_fragment(spoke, q, BallUnion{{qs}}, qs, 1.0, kEps2, 4);
  EXPECT_NEAR(h.diam, 0.5 * h.diam_q_star, 1e-12);
  EXPECT_TRUE(h.lower_ok);
  EXPECT_TRUE(h.u_ok);
}

TEST(Fragment, TieTakesSmallestStart) {
  Curve plus = lab::plus_sign(kL2);
  Ball q = make_ball({0, 0}, 4, 4.0);
  RBall qs{{0, 0}, std::ldexp(0.2, -4)};
  auto h = maximal_fragment(plus, q, BallUnion{{qs}}, qs, 1.0, kEps2, 4);
  EXPECT_LT(h.source_arc.a(), 0.25);
}

TEST(Fragment, NoQualifyingArc) {
  Curve far(kL2, {{-3, 0.5}, {3, 0.5}});
  Ball q = make_ball({0, 0}, 2, 4.0);
  RBall qs{{0, 0}, 0.01};
  EXPECT_THROW(maximal_fragment(far, q, BallUnion{{qs}}, qs, 1.0, kEps2, 4), FragmentError);
}

TEST(Subarc, StraightFragment) {
  Curve line(kL2, {{-3, 0}, {3, 0}});
  Ball q = make_ball({0, 0}, 4, 4.0);
  RBall qs{{0, 0}, std::ldexp(0.2, -4)};
  auto h = maximal_fragment(line, q, BallUnion{{qs}}, qs, 1.0, kEps2, 19);
  auto g = efficient_subarc(line, h, qs);
  EXPECT_GT(g.efficiency, 0.99993);
  EXPECT_NEAR(g.endpoint_gap, g.arc.diam, 1e-9 * g.arc.diam);
  EXPECT_TRUE(g.in_q_star);
  EXPECT_TRUE(g.meets_quarter);
  EXPECT_TRUE(g.central_flat);
}

TEST(Subarc, DisconnectedFragment) {
  // The core pokes just outside Q_*, so H_Q has a second sliver component.
  Curve line(kL2, {{-2, 0}, {2, 0}});
  Ball q = make_ball({0, 0}, 0, 4.0);
  RBall qs{{0, 0}, 1.0};
  BallUnion core{{qs, RBall{{1.000008, 0}, 0.000002}}};
  auto h = maximal_fragment(line, q, core, qs, 1.0, kEps2, 19);
  ASSERT_EQ(h.pieces.size(), 2u);
  auto g = efficient_subarc(line, h, qs);
  EXPECT_GE(g.arc.a(), h.pieces[0].a);
  EXPECT_LE(g.arc.b(), h.pieces[0].b);
  EXPECT_GT(g.efficiency, 0.99993);
}

TEST(Subarc, MeetsQuarterOnRandomFlatFixtures) {
  lab::Rng rng(12);
  for (int i = 0; i < 20; ++i) {
    double off = lab::uniform(rng, 0.0, 0.24);
    double ang = lab::uniform(rng, 0.0, M_PI);
    Point u{std::cos(ang), std::sin(ang)}, n{-std::sin(ang), std::cos(ang)};
    Curve c(kL2, {off * n - 3.0 * u, off * n + 3.0 * u});
    RBall qs{{0, 0}, 1.0};
    auto h = maximal_fragment(c, make_ball({0, 0}, 0, 4.0), BallUnion{{qs}}, qs, 1.0, kEps2, 19);
    auto g = efficient_subarc(c, h, qs);
    EXPECT_TRUE(g.h_meets_quarter);
    EXPECT_TRUE(g.meets_quarter);
    EXPECT_GT(g.efficiency, 0.99993);
  }
}

TEST(Cylinder, Membership) {
  NormedSpace l2 = kL2;
  auto P = j_projection(l2, make_line(l2, {0, 0}, {1, 0}));
  BallUnion W{{RBall{{0, 0}, 1}}};
  EXPECT_EQ(cylinder_membership(P, W, {0.2, 0.3}), Side::Inside);
  EXPECT_EQ(cylinder_membership(P, W, {2, 0}), Side::Plus);
  EXPECT_EQ(cylinder_membership(P, W, {-2, 5}), Side::Minus);

  NormedSpace l1 = NormedSpace::l1();
  auto S = j_projection(l1, make_line(l1, {0, 0}, {1, 0}), 0.5);
  EXPECT_EQ(cylinder_membership(S, W, {2, 0.5}), Side::Plus);
  // Beyond x = 1 but behind the slanted fiber through (1, 0).
  EXPECT_EQ(cylinder_membership(S, W, {1.5, 1.0}), Side::Inside);
}

namespace {

struct ChildSetup {
  Ball q;
  RBall qs;
  BallUnion core;
  JProjection proj;
};

ChildSetup child_at_origin() {
  ChildSetup s;
  s.q = make_ball({0, 0}, 4, 4.0);
  s.qs = RBall{{0, 0}, std::ldexp(0.2, -4)};
  s.core = BallUnion{{s.qs}};
  s.proj = j_projection(kL2, make_line(kL2, {0, 0}, {1, 0}));
  return s;
}

}  // namespace

TEST(CoreType, DiametricalStraightRunIsN21) {
  auto s = child_at_origin();
  Curve line(kL2, {{-3, 0}, {3, 0}});
  EXPECT_EQ(classify_core(line, ArcRef{{0, 1}, 6}, s.proj, s.q, s.core, s.qs, 1.0, kEps2), CoreType::N2_1);
}

TEST(CoreType, OffCenterWideIsN22) {
  auto s = child_at_origin();
  Curve line(kL2, {{-3, 0.5 * s.qs.radius}, {3, 0.5 * s.qs.radius}});
  EXPECT_EQ(classify_core(line, ArcRef{{0, 1}, 6}, s.proj, s.q, s.core, s.qs, 1.0, kEps2), CoreType::N2_2);
}

TEST(CoreType, TJunctionIsN1) {
  auto s = child_at_origin();
  Curve t = lab::t_junction(kL2, 0.01);
  auto type = classify_core(t, ArcRef{{0, t.param(1)}, 2}, s.proj, s.q, s.core, s.qs, 1.0, kEps2);
  EXPECT_EQ(type, CoreType::N1);
}

TEST(CoreType, SameSideIsUnnecessary) {
  auto s = child_at_origin();
  double x0 = 1.00001 * s.qs.radius;
  Curve vee(kL2, {{0.5, 0.4}, {x0, 0}, {0.5, -0.4}});
  // A generous eps2 makes the V flat, so only the side test decides.
  auto type = classify_core(vee, ArcRef{{0, 1}, 1}, s.proj, s.q, s.core, s.qs, 1.0, 10.0);
  EXPECT_EQ(type, CoreType::Unnecessary);
}

TEST(CoreType, FarIsNotAdjacent) {
  auto s = child_at_origin();
  Curve line(kL2, {{-3, 1}, {3, 1}});
  EXPECT_EQ(classify_core(line, ArcRef{{0, 1}, 6}, s.proj, s.q, s.core, s.qs, 1.0, kEps2), CoreType::NotAdjacent);
}

TEST(ArcProperties, RandomWalks) {
  lab::Rng rng(6);
  for (int i = 0; i < 10; ++i) {
    Curve c = lab::random_walk(kL2, 10, rng());
    auto samples = lab::sample_curve(c);
    Ball q = make_ball(samples[samples.size() / 2], 3, 4.0);
    for (double lambda : {1.0, 5.0}) {
      auto cls = classify(c, q, lambda, kEps2);
      for (size_t a = 0; a + 1 < cls.arcs.size(); ++a) EXPECT_LT(cls.arcs[a].b(), cls.arcs[a + 1].a());
      for (size_t a = 0; a < cls.arcs.size(); ++a)
        if (cls.flat[a]) EXPECT_TRUE(cls.star_flat[a]);
      for (const auto& v : samples) {
        if (kL2.distance(v, q.center) > lambda * q.r()) continue;
        bool hit = false;
        for (const auto& arc : cls.arcs) hit = hit || min_distance(c, arc.interval, v) <= 1e-9;
        EXPECT_TRUE(hit);
      }
    }
  }
}
