// Copyright 2026 The fresneltomo Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "fresneltomo/common.hpp"
#include "fresneltomo/fockspace.hpp"
#include "fresneltomo/grid.hpp"
#include "fresneltomo/symplectic.hpp"

namespace ft = fresneltomo;
using ft::complexd;

namespace {
constexpr double kPi = 3.14159265358979323846;

ft::SRPair random_sr(std::mt19937_64& rng, double rmax) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double rr = rmax * u(rng);
  const double phis = 2.0 * kPi * u(rng);
  const double phir = 2.0 * kPi * u(rng);
  return {std::polar(std::sqrt(1.0 + rr * rr), phis), std::polar(rr, phir)};
}
}  // namespace

TEST_SUITE("fockspace") {
  TEST_CASE("ladder and quadrature commutators") {
    const int dim = 24;
    const auto [a, adag] = ft::ladder(dim);
    const auto [x, p] = ft::quadratures(dim);
    // [a, adag] = 1 and [x, p] = i hold exactly below the truncation row.
    const ft::FockOperator comm = a * adag - adag * a;
    const ft::FockOperator xp = x * p - p * x;
    for (int i = 0; i < dim - 1; ++i) {
      for (int j = 0; j < dim - 1; ++j) {
        const complexd want_c = i == j ? complexd(1, 0) : complexd(0, 0);
        const complexd want_xp = i == j ? complexd(0, 1) : complexd(0, 0);
        CHECK(std::abs(comm(i, j) - want_c) < 1e-13);
        CHECK(std::abs(xp(i, j) - want_xp) < 1e-13);
      }
    }
  }

  TEST_CASE("rotation operator is a pure phase ladder") {
    const int dim = 32;
    const double theta = 0.7;
    const ft::FockOperator f =
        ft::fresnel_operator(ft::abcd_to_sr(ft::rotation(theta)), dim);
    for (int i = 0; i < dim; ++i) {
      for (int j = 0; j < dim; ++j) {
        const complexd want =
            i == j ? std::polar(1.0, -theta * (i + 0.5)) : complexd(0, 0);
        CHECK(std::abs(f(i, j) - want) < 1e-13);
      }
    }
  }

  TEST_CASE("vacuum matrix element matches the closed form") {
    std::mt19937_64 rng(21);
    for (int i = 0; i < 10; ++i) {
      const ft::SRPair p = random_sr(rng, 1.5);
      const ft::FockOperator f = ft::fresnel_operator(p, 16);
      CHECK(std::abs(f(0, 0) - 1.0 / std::sqrt(std::conj(p.s))) < 1e-13);
    }
  }

  TEST_CASE("operator composition follows the chart product") {
    const int dim = 256;
    const int block = 32;
    std::mt19937_64 rng(22);
    for (int i = 0; i < 5; ++i) {
      const ft::SRPair p1 = random_sr(rng, 0.8);
      const ft::SRPair p2 = random_sr(rng, 0.8);
      const ft::FockOperator lhs =
          ft::fresnel_operator(p1, dim) * ft::fresnel_operator(p2, dim);
      const ft::FockOperator rhs =
          ft::fresnel_operator(ft::sr_compose(p1, p2), dim);
      const double dev = (lhs.topLeftCorner(block, block) -
                          rhs.topLeftCorner(block, block))
                             .cwiseAbs()
                             .maxCoeff();
      CHECK(dev < 1e-10);
    }
  }

  TEST_CASE("integral construction agrees with the ladder form") {
    const ft::SRPair p{complexd(std::cosh(0.3), 0.0),
                       complexd(-std::sinh(0.3), 0.0)};
    const ft::FockOperator direct = ft::fresnel_operator(p, 8);

    SUBCASE("default quadrature reaches 1e-6") {
      const ft::FockOperator viaint = ft::fresnel_operator_integral(p, 8);
      CHECK((direct - viaint).cwiseAbs().maxCoeff() < 1e-6);
    }
    SUBCASE("radius 8 reaches 1e-10") {
      ft::QuadratureSpec quad;
      quad.radius = 8.0;
      quad.radial_nodes = 240;
      quad.angular_nodes = 240;
      quad.tolerance = 1e-10;
      const ft::FockOperator viaint =
          ft::fresnel_operator_integral(p, 8, quad);
      CHECK((direct - viaint).cwiseAbs().maxCoeff() < 1e-10);
    }
    SUBCASE("truncated domain fails the self-check") {
      ft::QuadratureSpec quad;
      quad.radius = 1.0;
      CHECK_THROWS_AS(
          (void)ft::fresnel_operator_integral(p, 8, quad),
          std::invalid_argument);
    }
  }

  TEST_CASE("coherent matrix element agrees with the operator sandwich") {
    const int dim = 64;
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int i = 0; i < 5; ++i) {
      const ft::SRPair p = random_sr(rng, 0.9);
      const complexd z(u(rng), u(rng));
      const complexd zp(u(rng), u(rng));
      const ft::FockVector vz = ft::coherent_vector(z, dim);
      const ft::FockVector vzp = ft::coherent_vector(zp, dim);
      const complexd sandwich =
          (vz.adjoint() * ft::fresnel_operator(p, dim) * vzp)(0);
      CHECK(std::abs(sandwich - ft::coherent_matrix_element(p, z, zp)) <
            1e-8);
    }
  }

  TEST_CASE("coherent vector is a ladder eigenvector") {
    const int dim = 48;
    const complexd z(0.7, -0.4);
    const ft::FockVector v = ft::coherent_vector(z, dim);
    CHECK(std::abs(v.norm() - 1.0) < 1e-12);
    const auto [a, adag] = ft::ladder(dim);
    const ft::FockVector av = a * v;
    CHECK((av - z * v).head(dim - 1).cwiseAbs().maxCoeff() < 1e-12);
  }

  TEST_CASE("quadrature eigenstate residuals vanish below the top row") {
    const int dim = 128;
    const std::vector<ft::RayMatrix> mats = {
        ft::identity_matrix(), ft::free_propagation(1.0), ft::lens(0.5),
        ft::rotation(1.1), ft::scaling(1.2)};
    for (const ft::RayMatrix& m : mats) {
      for (const double value : {-2.0, -1.0, 0.0, 0.5, 2.0}) {
        const ft::FockVector vx = ft::tomo_eigenstate(m, value, dim);
        CHECK(ft::eigen_residual_position(m, value, vx) < 1e-12);
        const ft::FockVector vp = ft::momentum_eigenstate(m, value, dim);
        CHECK(ft::eigen_residual_momentum(m, value, vp) < 1e-12);
      }
    }
  }

  TEST_CASE("eigenstates beyond the trust radius warn") {
    std::vector<std::string> captured;
    ft::set_warning_handler(
        [&](std::string_view msg) { captured.emplace_back(msg); });
    const double far = ft::trust_radius(32) + 1.0;
    (void)ft::tomo_eigenstate(ft::identity_matrix(), far, 32);
    ft::set_warning_handler({});
    REQUIRE(captured.size() == 1);
    CHECK(captured[0].find("trust") != std::string::npos);
  }

  TEST_CASE("hermite functions are orthonormal and match closed forms") {
    const ft::GridSpec grid{10.0, 512};
    const Eigen::VectorXd xs = grid.axis();
    const Eigen::VectorXd w = ft::trapezoid_weights(grid);
    const Eigen::MatrixXd h = ft::hermite_functions(xs, 8);
    for (int m = 0; m < 8; ++m) {
      for (int n = 0; n < 8; ++n) {
        const double overlap = (h.col(m).array() * h.col(n).array() * w.array()).sum();
        CHECK(std::abs(overlap - (m == n ? 1.0 : 0.0)) < 1e-10);
      }
    }
    const double x0 = xs(300);
    CHECK(h(300, 0) ==
          doctest::Approx(std::pow(kPi, -0.25) * std::exp(-x0 * x0 / 2))
              .epsilon(1e-12));
    CHECK(h(300, 1) == doctest::Approx(std::pow(kPi, -0.25) * std::sqrt(2.0) *
                                       x0 * std::exp(-x0 * x0 / 2))
                           .epsilon(1e-12));
  }

  TEST_CASE("grid and ladder representations round trip") {
    const ft::GridSpec grid{};
    const ft::FockVector c = ft::coherent_vector(complexd(1.0, 0.0), 64);
    const ft::GridWavefunction psi = ft::fock_to_grid(c, grid);
    CHECK(std::abs(ft::l2_norm(psi) - 1.0) < 1e-10);
    const ft::FockVector back = ft::grid_to_fock(psi, 64);
    CHECK((back - c).cwiseAbs().maxCoeff() < 1e-10);
  }

  TEST_CASE("narrow grids for a wide state warn") {
    std::vector<std::string> captured;
    ft::set_warning_handler(
        [&](std::string_view msg) { captured.emplace_back(msg); });
    ft::FockVector top = ft::FockVector::Zero(512);
    top(511) = 1.0;
    (void)ft::fock_to_grid(top, ft::GridSpec{10.0, 256});
    ft::set_warning_handler({});
    CHECK(captured.size() == 1);
  }

  TEST_CASE("tomographic completeness on the identity") {
    CHECK(ft::completeness_defect(ft::identity_matrix(), 64, ft::GridSpec{}) <
          1e-8);
  }
}
