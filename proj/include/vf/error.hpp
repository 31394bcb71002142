// Copyright 2026 The vfgraph Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace vf {

enum class Errc {
  unsupported_kind,
  dimension_mismatch,
  invalid_argument,
  zero_degree,
  zero_signal,
  condition_violated,
  lambda_max_mismatch,
  order_too_high,
  non_finite,
  io,
  parse,
};

std::string_view to_string(Errc code) noexcept;

/// Exception type thrown by every vfgraph operation. The code identifies the
/// failure class so callers and tests can branch without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace vf
