// Copyright 2026 The fresneltomo Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef FRESNELTOMO_GRID_HPP
#define FRESNELTOMO_GRID_HPP

#include <Eigen/Dense>

#include "fresneltomo/common.hpp"

namespace fresneltomo {

// Uniform symmetric sample grid x_j = -extent + j * step, j = 0..samples-1,
// step = 2 * extent / (samples - 1). The same grid doubles as the momentum
// axis of Wigner functions. Defaults hold every standard test state with
// edge values below 1e-8.
struct GridSpec {
  double extent = 10.0;
  int samples = 1024;

  double step() const { return 2.0 * extent / (samples - 1); }
  Eigen::VectorXd axis() const;

  bool operator==(const GridSpec& other) const = default;
};

// Throws std::invalid_argument unless extent > 0 and samples >= 8.
void validate(const GridSpec& grid);

// Complex wavefunction sampled on a GridSpec. Normalized states satisfy
// trapezoid-quadrature norm 1 to 1e-8.
struct GridWavefunction {
  GridSpec grid;
  Eigen::VectorXcd samples;
};

// Trapezoid quadrature weights: step everywhere except half-step endpoints.
Eigen::VectorXd trapezoid_weights(const GridSpec& grid);

// Trapezoid L2 norm and inner product <phi|psi> (conjugate-linear in phi).
double l2_norm(const GridWavefunction& psi);
complexd inner_product(const GridWavefunction& phi, const GridWavefunction& psi);

// |psi|^2 mass on the outermost 2 samples of each edge; the transform and
// phase-space routines warn when this exceeds their preconditions.
double edge_mass(const GridWavefunction& psi);

}  // namespace fresneltomo

#endif  // FRESNELTOMO_GRID_HPP
