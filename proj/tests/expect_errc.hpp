#pragma once

#include "paley/error.hpp"

#include <gtest/gtest.h>

/// Expects `stmt` to throw paley::Error with the given code.
#define EXPECT_ERRC(stmt, errc)                                                                    \
  do {                                                                                             \
    try {                                                                                          \
      stmt;                                                                                        \
      ADD_FAILURE() << "no exception from " #stmt;                                                 \
    } catch (const paley::Error &e) {                                                              \
      EXPECT_EQ(e.code(), errc) << e.what();                                                       \
    }                                                                                              \
  } while (0)
