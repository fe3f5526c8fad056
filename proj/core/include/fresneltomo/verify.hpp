// Copyright 2026 The fresneltomo Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef FRESNELTOMO_VERIFY_HPP
#define FRESNELTOMO_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "fresneltomo/grid.hpp"

namespace fresneltomo {

// Self-verification suite: every consistency guarantee the library makes,
// as executable checks with pinned tolerances. Used by both the acceptance
// test binary and the CLI verify subcommand.
//
// fock_dim = 0 selects each check's documented dimension (64..256 depending
// on the check); a positive value overrides all of them, which is useful to
// watch checks degrade under aggressive truncation (warnings surface and the
// report marks failures, but the function still returns normally).
struct VerifyOptions {
  std::uint64_t seed = 7;
  int fock_dim = 0;
  GridSpec grid{};
};

struct CheckResult {
  std::string name;
  double value = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  bool all_pass() const;
};

// Runs the full suite (runtime well under a minute on commodity hardware):
//   central_identity_position   route-vs-route max deviation, 6 states x 20
//                               random matrices with |b| >= 0.05
//   central_identity_momentum   same suite in momentum mode
//   vacuum_variance             tomogram second moment vs (d^2 + b^2)/2
//   kernel_operator_consistency grid transform vs Fock-operator synthesis
//   group_law                   operator product vs composed-chart operator
//   integral_oracle             quadrature construction vs closed form
//   eigen_residual              position and momentum eigen-relations
//   completeness                eigenbasis completeness defect, 3 matrices
//   rotation_reduction          Radon of rotations vs fractional-Fourier
//                               homodyne distributions
//   fbp_round_trip              Radon + filtered back-projection vs Wigner
//   wigner_sanity               normalization, marginals, energy moments
VerifyReport run_verification(const VerifyOptions& options = {});

}  // namespace fresneltomo

#endif  // FRESNELTOMO_VERIFY_HPP
