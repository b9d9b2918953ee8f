#include <gtest/gtest.h>

#include <cmath>

#include <moeblox/loxodrome.hpp>

#include "expect.hpp"
#include "generators.hpp"

namespace moeblox {
namespace {

using testing::Generator;
using testing::PlacedTriple;
using testing::same_cycle;
using testing::same_point;

const Tolerances kTol{};

TEST(CycleProperties, ProductInvariance) {
  Generator g{101};
  for (int i = 0; i < 500; ++i) {
    const Cycle c = g.raw_cycle();
    const Cycle d = g.raw_cycle();
    const MoebiusMap m = g.sl2(5.0);
    const double scale = c.norm() * d.norm() * std::pow(std::max(1.0, testing::frobenius(m)), 4);
    EXPECT_LE(std::abs(product(apply_to_cycle(m, c), apply_to_cycle(m, d)) - product(c, d)),
              1e-9 * scale);
  }
}

TEST(CycleProperties, NormalizedProductInvariance) {
  Generator g{102};
  for (int i = 0; i < 300; ++i) {
    const Cycle c = g.real_cycle();
    const Cycle d = g.real_cycle();
    const MoebiusMap m = g.moderate_map();
    const double base = normalized_product(c, d);
    // Canonical signs can flip under a map, the magnitude cannot.
    EXPECT_NEAR(std::abs(normalized_product(apply_to_cycle(m, c), apply_to_cycle(m, d))),
                std::abs(base), 1e-9 * (1 + std::abs(base)));
    EXPECT_NEAR(normalized_product(g.uniform(-5, 5) * c, g.uniform(0.1, 5) * d), base,
                1e-12 * (1 + std::abs(base)));
  }
}

TEST(CycleProperties, IncidencePreserved) {
  Generator g{103};
  for (int i = 0; i < 300; ++i) {
    const Cycle c = g.real_cycle();
    const MoebiusMap m = g.moderate_map();
    // A point on c and a point off it.
    const auto on = intersect(c, c.k() != 0.0 ? from_line(center_radius(c).center,
                                                        center_radius(c).center + 1.0)
                                            : g.real_circle());
    if (on.empty()) continue;
    EXPECT_TRUE(passes(apply_to_cycle(m, c), apply_to_point(m, on.front()), {1e-8}));
    const Complex off = g.complex(3.0);
    EXPECT_EQ(passes(c, off), passes(apply_to_cycle(m, c), apply_to_point(m, off)));
  }
}

TEST(CycleProperties, DeterminantAndRadius) {
  Generator g{104};
  for (int i = 0; i < 500; ++i) {
    const Cycle c = g.raw_cycle();
    EXPECT_NEAR(product(c, c), -2.0 * c.matrix().det().real(), 1e-13);
    const Cycle circle = from_circle(g.complex(1.0), g.uniform(0.1, 1.0));
    EXPECT_NEAR(std::pow(center_radius(circle).radius, 2), product(circle, circle) / 2, 1e-13);
    const Cycle point = zero_radius_at(g.complex(3.0));
    EXPECT_EQ(classify(point), CycleKind::PointCircle);
    EXPECT_NEAR(product(point, point), 0.0, 1e-12);
    EXPECT_NE(classify(g.real_circle()), CycleKind::PointCircle);
  }
}

TEST(CycleProperties, CompositionLaw) {
  Generator g{105};
  for (int i = 0; i < 300; ++i) {
    const Cycle c = g.raw_cycle();
    const MoebiusMap m1 = g.moderate_map();
    const MoebiusMap m2 = g.moderate_map();
    EXPECT_TRUE(same_cycle(apply_to_cycle(m2, apply_to_cycle(m1, c)), apply_to_cycle(m2 * m1, c),
                           1e-10));
  }
}

TEST(CycleProperties, IntersectionCountMatchesPencil) {
  Generator g{106};
  int checked = 0;
  for (int i = 0; i < 1000; ++i) {
    const Cycle a = g.real_cycle();
    const Cycle b = g.real_cycle();
    const std::size_t count = intersect(a, b).size();
    const PencilKind kind = classify_pencil(Pencil{a, b});
    const std::size_t expected = kind == PencilKind::Elliptic ? 2 : kind == PencilKind::Parabolic ? 1 : 0;
    EXPECT_EQ(count, expected) << i;
    ++checked;
  }
  EXPECT_EQ(checked, 1000);
}

TEST(PencilProperties, KindIsInvariant) {
  Generator g{201};
  for (int i = 0; i < 300; ++i) {
    const Cycle a = g.real_cycle();
    const Cycle b = g.real_cycle();
    const MoebiusMap m = g.moderate_map();
    EXPECT_EQ(classify_pencil(Pencil{a, b}),
              classify_pencil(Pencil{apply_to_cycle(m, a), apply_to_cycle(m, b)}));
  }
}

TEST(PencilProperties, LimitPointsAndDuality) {
  Generator g{202};
  int hyperbolic = 0;
  for (int i = 0; i < 500 && hyperbolic < 200; ++i) {
    const Pencil p{g.real_cycle(), g.real_cycle()};
    if (classify_pencil(p) != PencilKind::Hyperbolic) continue;
    ++hyperbolic;
    const auto [z0, zinf] = zero_radius_members(p);
    for (const Cycle& z : {z0, zinf}) {
      EXPECT_LE(std::abs(product(z, z)), 1e-9 * z.norm() * z.norm());
      EXPECT_LE(span_fit(p, z).residual, 1e-9);
    }
    const Complex q = g.complex(3.0);
    const Cycle x = orthogonal_cycle_through(p.first(), p.second(), zero_radius_at(q));
    EXPECT_LE(std::abs(product(x, z0)), 1e-8 * x.norm() * z0.norm());
    EXPECT_LE(std::abs(product(x, zinf)), 1e-8 * x.norm() * zinf.norm());
    const auto h = hyperbolic_member_through(p.first(), p.second(), zero_radius_at(q));
    EXPECT_LE(std::abs(product(h.cycle, zero_radius_at(q))),
              1e-9 * h.cycle.norm() * zero_radius_at(q).norm());
  }
  EXPECT_GE(hyperbolic, 100);
}

TEST(LoxodromeProperties, LambdaRecovery) {
  Generator g{301};
  for (const double x : {0.25, 0.5, 1.0, 2.0, 5.0}) {
    for (int i = 0; i < 40; ++i) {
      const int sign = g.sign();
      const LoxodromeTriple t =
          apply_map(g.moderate_map(), standard_triple(SlsParameter::finite(sign * x)));
      EXPECT_NEAR(lambda_from_triple(t).lambda_tilde(), sign * x, 1e-8);
    }
  }
}

TEST(LoxodromeProperties, NormalisationRoundTrip) {
  Generator g{302};
  for (int i = 0; i < 200; ++i) {
    const PlacedTriple p = testing::random_triple(g);
    const LoxodromeTriple back = apply_map(standard_map(p.triple), p.triple);
    EXPECT_LE(testing::triple_residual(back, standard_triple(lambda_from_triple(p.triple))), 1e-8);
  }
}

TEST(LoxodromeProperties, Stabiliser) {
  Generator g{303};
  for (int i = 0; i < 200; ++i) {
    const SlsParameter param = SlsParameter::finite(g.sign() * g.uniform(0.25, 3.0));
    MoebiusMap shift = diagonal_flow(param.lambda(), g.uniform(-1.5, 1.5));
    if (g.coin()) shift = shift * branch_swap();
    const LoxodromeTriple t = standard_triple(param);
    EXPECT_TRUE(equivalent(apply_map(shift, t), t)) << i;
  }
}

TEST(LoxodromeProperties, MembershipMatchesOracle) {
  Generator g{304};
  for (int i = 0; i < 300; ++i) {
    const PlacedTriple p = testing::random_triple(g);
    const Branch branch = g.coin() ? Branch::Plus : Branch::Minus;
    const double t = g.uniform(-1.5, 1.5);
    const ExtendedPoint on = testing::curve_point(p.map, p.param, t, branch);
    const ExtendedPoint later = testing::curve_point(p.map, p.param, t + 0.05, branch);
    const Complex w = std::exp(p.param.lambda() * t) * std::exp(0.05 * p.param.lambda_tilde()) *
                      (branch == Branch::Plus ? 1.0 : -1.0);
    const ExtendedPoint radial = apply_to_point(p.map, ExtendedPoint{w});
    EXPECT_TRUE(contains_point(p.triple, on).member) << i;
    EXPECT_TRUE(contains_point_oracle(p.triple, on)) << i;
    EXPECT_FALSE(contains_point(p.triple, radial).member) << i;
    EXPECT_FALSE(contains_point_oracle(p.triple, radial)) << i;
    EXPECT_TRUE(contains_point(p.triple, later).member) << i;
  }
}

TEST(LoxodromeProperties, ConstantAngleWithHyperbolicPencil) {
  Generator g{305};
  for (int i = 0; i < 200; ++i) {
    const PlacedTriple p = testing::random_triple(g);
    const double t = g.uniform(-1.5, 1.5);
    const ExtendedPoint q = testing::curve_point(p.map, p.param, t);
    const Complex z = q.value();
    const Cycle ch = hyperbolic_member_through(p.triple.c2(), p.triple.c3(), zero_radius_at(q)).cycle;
    const Complex curve = testing::curve_velocity(p, t, Branch::Plus);
    const double angle = wrap_half_turn(std::arg(tangent_direction(ch, z) / curve));
    EXPECT_NEAR(angle, std::atan(p.param.lambda_tilde() / kTwoPi), 1e-5) << i;
  }
}

TEST(LoxodromeProperties, TangencyDuality) {
  Generator g{306};
  for (int i = 0; i < 200; ++i) {
    const PlacedTriple p = testing::random_triple(g);
    const ExtendedPoint q = testing::curve_point(p.map, p.param, g.uniform(-1.5, 1.5),
                                                 g.coin() ? Branch::Plus : Branch::Minus);
    if (q.is_infinite(1e-9)) continue;
    const Cycle line = tangent_line_at(p.triple, q);
    EXPECT_TRUE(tangent_check(p.triple, line, q)) << i;
    const Complex z = q.value();
    const Complex dir = tangent_direction(line, z);
    for (const double turn : {0.01, -0.01, 0.3}) {
      const Cycle rotated = from_line(z, z + dir * std::polar(1.0, turn));
      EXPECT_FALSE(tangent_check(p.triple, rotated, q)) << i;
    }
  }
}

}  // namespace
}  // namespace moeblox
