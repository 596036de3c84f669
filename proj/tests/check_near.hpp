#pragma once

#include <doctest.h>

#include <cmath>

#define CHECK_NEAR(a, b, tol)                                                      \
  CHECK_MESSAGE(std::abs((a) - (b)) <= (tol), "lhs=", (a), " rhs=", (b), " tol=", (tol))
#define REQUIRE_NEAR(a, b, tol)                                                    \
  REQUIRE_MESSAGE(std::abs((a) - (b)) <= (tol), "lhs=", (a), " rhs=", (b), " tol=", (tol))
