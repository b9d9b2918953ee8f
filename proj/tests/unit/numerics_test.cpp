#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>

#include <moeblox/error.hpp>
#include <moeblox/numerics.hpp>

#include "expect.hpp"

namespace moeblox {
namespace {

using testing::expect_code;

// Independent inverses: Newton on cos and on the exponential form of cosh.
double newton_acos(double x) {
  double y = kPi / 2.0 - x;  // start near the inflection point
  for (int i = 0; i < 60; ++i) y -= (std::cos(y) - x) / -std::sin(y);
  return y;
}

double newton_acosh(double x) {
  double y = std::log(2.0 * x);
  for (int i = 0; i < 60; ++i) {
    const double e = std::exp(y);
    y -= ((e + 1.0 / e) / 2.0 - x) / ((e - 1.0 / e) / 2.0);
  }
  return y;
}


const Tolerances kTol{};

TEST(ClampedAcos, Boundaries) {
  EXPECT_EQ(clamped_acos(1.0, kTol), 0.0);
  EXPECT_DOUBLE_EQ(clamped_acos(-1.0, kTol), kPi);
  EXPECT_EQ(clamped_acos(1.0 + 5e-10, kTol), 0.0);
  expect_code(Errc::DomainError, [] { clamped_acos(1.0 + 1e-6, kTol); });
  expect_code(Errc::DomainError, [] { clamped_acos(-1.0 - 1e-6, kTol); });
}

TEST(ClampedAcos, MatchesNewtonOracle) {
  EXPECT_NEAR(clamped_acos(0.5403023, kTol), 1.0, 1e-7);
  EXPECT_NEAR(newton_acos(0.5403023), 1.0, 1e-7);
  for (double x = -0.95; x < 0.96; x += 0.05) {
    EXPECT_NEAR(clamped_acos(x, kTol), newton_acos(x), 1e-12) << x;
  }
}

TEST(ClampedAcosh, BoundariesAndDomain) {
  EXPECT_EQ(clamped_acosh(1.0, kTol), 0.0);
  EXPECT_EQ(clamped_acosh(1.0 - 5e-10, kTol), 0.0);
  expect_code(Errc::DomainError, [] { clamped_acosh(0.9, kTol); });
}

TEST(ClampedAcosh, MatchesExponentialOracle) {
  EXPECT_NEAR(clamped_acosh(1.5430806, kTol), 1.0, 1e-7);
  for (double x = 1.1; x < 500.0; x *= 1.7) {
    EXPECT_NEAR(clamped_acosh(x, kTol), newton_acosh(x), 1e-12 * (1 + x)) << x;
  }
}

TEST(ClampedInverses, RoundTrip) {
  for (double y = 1e-3; y < kPi - 1e-3; y += 0.01) {
    EXPECT_NEAR(clamped_acos(std::cos(y), kTol), y, kTol.eps_angle);
  }
  for (double y = 1e-3; y <= 20.0; y += 0.05) {
    EXPECT_NEAR(clamped_acosh(std::cosh(y), kTol), y, kTol.eps_angle * (1 + y));
  }
}

TEST(CongruentMod, Examples) {
  EXPECT_TRUE(congruent_mod(0.75, 0.25, 0.5, kTol));
  EXPECT_FALSE(congruent_mod(0.3, 0.0, 0.5, kTol));
  EXPECT_TRUE(congruent_mod(1.0, 0.0, 1.0, kTol));
  EXPECT_TRUE(congruent_mod(0.5 + 5e-7, 0.0, 0.5, kTol));
  EXPECT_FALSE(congruent_mod(0.5 + 5e-6, 0.0, 0.5, kTol));
}

TEST(CongruentMod, SymmetricAndPeriodic) {
  for (double a = -2.0; a < 2.0; a += 0.137) {
    for (double b = -2.0; b < 2.0; b += 0.213) {
      for (const double modulus : {0.5, 1.0}) {
        const bool base = congruent_mod(a, b, modulus, kTol);
        EXPECT_EQ(base, congruent_mod(b, a, modulus, kTol));
        EXPECT_EQ(base, congruent_mod(a + 3 * modulus, b, modulus, kTol));
        EXPECT_EQ(base, congruent_mod(a, b - 2 * modulus, modulus, kTol));
      }
    }
  }
}

TEST(WrapHalfTurn, Range) {
  EXPECT_DOUBLE_EQ(wrap_half_turn(-kPi / 2.0), kPi / 2.0);
  EXPECT_DOUBLE_EQ(wrap_half_turn(kPi / 2.0), kPi / 2.0);
  EXPECT_NEAR(wrap_half_turn(kPi + 0.1), 0.1, 1e-15);
  EXPECT_NEAR(wrap_half_turn(-0.1 - 3 * kPi), -0.1, 1e-14);
}

TEST(Tolerances, DefaultsAndValidation) {
  const Tolerances t;
  EXPECT_EQ(t.eps_product, 1e-9);
  EXPECT_EQ(t.eps_angle, 1e-7);
  EXPECT_EQ(t.eps_mod, 1e-6);
  EXPECT_EQ(t.eps_domain, 1e-9);
  EXPECT_NO_THROW(t.validate());
  expect_code(Errc::InvalidArgument, [] { Tolerances{0.0}.validate(); });
  expect_code(Errc::InvalidArgument, [] { Tolerances{1e-9, 0.5}.validate(); });
}

TEST(Tolerances, Parse) {
  const Tolerances one = Tolerances::parse("1e-8");
  EXPECT_EQ(one.eps_product, 1e-8);
  EXPECT_EQ(one.eps_angle, 1e-7);
  const Tolerances three = Tolerances::parse("1e-8,2e-6,3e-5");
  EXPECT_EQ(three.eps_angle, 2e-6);
  EXPECT_EQ(three.eps_mod, 3e-5);
  expect_code(Errc::InvalidArgument, [] { Tolerances::parse("abc"); });
  expect_code(Errc::InvalidArgument, [] { Tolerances::parse("1e-8,1e-8,1e-8,1e-8"); });
  expect_code(Errc::InvalidArgument, [] { Tolerances::parse("0.5"); });
}

TEST(Tolerances, Environment) {
  ::setenv("MOEBLOX_TOL", "2e-9,3e-7", 1);
  const Tolerances t = Tolerances::from_environment();
  ::unsetenv("MOEBLOX_TOL");
  EXPECT_EQ(t.eps_product, 2e-9);
  EXPECT_EQ(t.eps_angle, 3e-7);
  EXPECT_EQ(Tolerances::from_environment().eps_product, 1e-9);
}

}  // namespace
}  // namespace moeblox
