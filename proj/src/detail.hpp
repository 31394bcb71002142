// Copyright 2026 The vfgraph Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <string>

#include "vf/error.hpp"

namespace vf::detail {

// Flip v so its largest-magnitude entry is positive; near-ties (within a
// relative 1e-10) resolve to the lowest index.
inline void normalize_sign(Eigen::Ref<Eigen::VectorXd> v) {
  const double peak = v.cwiseAbs().maxCoeff();
  if (peak == 0.0) return;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (std::abs(v(i)) >= peak * (1.0 - 1e-10)) {
      if (v(i) < 0) v = -v;
      return;
    }
  }
}

inline void require(bool ok, Errc code, const std::string& msg) {
  if (!ok) throw Error(code, msg);
}

inline void require_size(Eigen::Index got, Eigen::Index want,
                         const char* what) {
  if (got != want) {
    throw Error(Errc::dimension_mismatch,
                std::string(what) + ": expected length " +
                    std::to_string(want) + ", got " + std::to_string(got));
  }
}

}  // namespace vf::detail
