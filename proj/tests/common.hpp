#pragma once

#include "error.hpp"

#include <doctest.h>

#include <string>

#define MAXSOLV_CHECK_CODE(expr, expected)                         \
  do {                                                             \
    bool thrown_ = false;                                          \
    try {                                                          \
      (void)(expr);                                                \
    } catch (const maxsolv::Error& e_) {                           \
      thrown_ = true;                                              \
      CHECK_MESSAGE(e_.code() == (expected), e_.what());           \
    }                                                              \
    CHECK_MESSAGE(thrown_, "expected an error from " #expr);       \
  } while (0)

inline std::string data_path(const std::string& rel) { return std::string(MAXSOLV_DATA) + "/" + rel; }
inline std::string test_data_path(const std::string& rel) { return std::string(MAXSOLV_TEST_DATA) + "/" + rel; }
