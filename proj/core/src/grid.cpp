// Copyright 2026 The fresneltomo Authors
// SPDX-License-Identifier: Apache-2.0

#include "fresneltomo/grid.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace fresneltomo {

Eigen::VectorXd GridSpec::axis() const {
  validate(*this);
  return Eigen::VectorXd::LinSpaced(samples, -extent, extent);
}

void validate(const GridSpec& grid) {
  if (!(grid.extent > 0.0)) {
    throw std::invalid_argument("GridSpec: extent must be positive, got " +
                                std::to_string(grid.extent));
  }
  if (grid.samples < 8) {
    throw std::invalid_argument("GridSpec: need at least 8 samples, got " +
                                std::to_string(grid.samples));
  }
}

Eigen::VectorXd trapezoid_weights(const GridSpec& grid) {
  validate(grid);
  Eigen::VectorXd w = Eigen::VectorXd::Constant(grid.samples, grid.step());
  w(0) *= 0.5;
  w(grid.samples - 1) *= 0.5;
  return w;
}

double l2_norm(const GridWavefunction& psi) {
  const Eigen::VectorXd w = trapezoid_weights(psi.grid);
  return std::sqrt(w.dot(psi.samples.cwiseAbs2()));
}

complexd inner_product(const GridWavefunction& phi,
                       const GridWavefunction& psi) {
  if (!(phi.grid == psi.grid)) {
    throw std::invalid_argument("inner_product: mismatched grids");
  }
  const Eigen::VectorXd w = trapezoid_weights(psi.grid);
  return (phi.samples.conjugate().cwiseProduct(psi.samples).array() *
          w.array().cast<complexd>())
      .sum();
}

double edge_mass(const GridWavefunction& psi) {
  validate(psi.grid);
  const Eigen::Index n = psi.samples.size();
  double mass = 0.0;
  for (Eigen::Index j : {Eigen::Index(0), Eigen::Index(1), n - 2, n - 1}) {
    mass += std::norm(psi.samples(j));
  }
  return mass;
}

}  // namespace fresneltomo
