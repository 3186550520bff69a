#pragma once

#include <gtest/gtest.h>

#include "octslice/octonion.hpp"

namespace octslice::testing {

inline ::testing::AssertionResult near(const Octonion& a, const Octonion& b, double tol) {
  const double d = (a - b).norm();
  if (d <= tol) return ::testing::AssertionSuccess();
  return ::testing::AssertionFailure() << a << " vs " << b << " differ by " << d << " > " << tol;
}

}  // namespace octslice::testing

#define EXPECT_OCT_NEAR(a, b, tol) EXPECT_TRUE(::octslice::testing::near((a), (b), (tol)))
