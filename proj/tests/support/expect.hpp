#pragma once

#include <gtest/gtest.h>

#include "scout/core/error.hpp"

// Asserts that `stmt` throws scout::Error carrying `expected`.
#define EXPECT_SCOUT_ERROR(stmt, expected)                          \
  do {                                                              \
    try {                                                           \
      stmt;                                                         \
      ADD_FAILURE() << "expected " << scout::to_string(expected);   \
    } catch (const scout::Error& e) {                               \
      EXPECT_EQ(e.code(), expected) << e.what();                    \
    }                                                               \
  } while (0)
