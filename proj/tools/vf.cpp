// Copyright 2026 The vfgraph Authors
// SPDX-License-Identifier: Apache-2.0

#include <Eigen/Core>

#include <cstdlib>

#include "cli/commands.hpp"

int main(int argc, char** argv) {
  if (const char* threads = std::getenv("VF_THREADS")) {
    const int n = std::atoi(threads);
    if (n > 0) Eigen::setNbThreads(n);
  }
  return vf::cli::run_cli(argc, argv);
}
