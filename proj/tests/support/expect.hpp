#pragma once

#include <gtest/gtest.h>

#include <moeblox/cycle.hpp>
#include <moeblox/error.hpp>

namespace moeblox::testing {

template <typename Fn>
void expect_code(Errc code, Fn&& fn) {
  try {
    fn();
    ADD_FAILURE() << "expected " << to_string(code);
  } catch (const GeometryError& e) {
    EXPECT_EQ(e.code(), code) << e.what();
  }
}

inline ::testing::AssertionResult same_cycle(const Cycle& a, const Cycle& b, double eps = 1e-9) {
  const double d = projective_distance(a, b);
  if (d <= eps) return ::testing::AssertionSuccess();
  return ::testing::AssertionFailure()
         << "(" << a.k() << "," << a.l() << "," << a.n() << "," << a.m() << ") vs (" << b.k()
         << "," << b.l() << "," << b.n() << "," << b.m() << "), distance " << d;
}

inline ::testing::AssertionResult same_point(const ExtendedPoint& a, const ExtendedPoint& b,
                                             double eps = 1e-9) {
  if (a.same_as(b, eps)) return ::testing::AssertionSuccess();
  return ::testing::AssertionFailure() << "[" << a.w1() << ":" << a.w2() << "] vs [" << b.w1()
                                       << ":" << b.w2() << "]";
}

}  // namespace moeblox::testing
