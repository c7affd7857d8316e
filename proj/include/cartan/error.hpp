// Copyright cartan-spinors contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace cartan {

/// Error categories. The numeric values are shared with the C API status
/// codes in cartan.h.
enum class ErrorCode : int {
  size = 1,
  algebra_mismatch = 2,
  representation_kind = 3,
  dimension_mismatch = 4,
  tangency = 5,
  frame = 6,
  degree_bound = 7,
  zero_spinor = 8,
  overflow = 9,
  io = 10,
  usage = 11,
  numeric = 12,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace cartan
