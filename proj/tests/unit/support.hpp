#pragma once

#include <gtest/gtest.h>

#include "hyperdet/error.hpp"
#include "hyperdet/polynomial.hpp"

#define EXPECT_ERROR_KIND(stmt, k)                                        \
  do {                                                                    \
    try {                                                                 \
      stmt;                                                               \
      ADD_FAILURE() << "expected " << hyperdet::to_string(k);             \
    } catch (const hyperdet::Error& e) {                                  \
      EXPECT_EQ(e.kind(), k) << e.what();                                 \
    }                                                                     \
  } while (0)

inline hyperdet::Polynomial P(const char* text) { return hyperdet::parse_polynomial(text); }
