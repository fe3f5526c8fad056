// Copyright 2026 The fresneltomo Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include <Eigen/Dense>

#include "fresneltomo/detail/numerics.hpp"

namespace nd = fresneltomo::detail;
using fresneltomo::complexd;

namespace {
constexpr double kPi = 3.14159265358979323846;

Eigen::VectorXcd random_signal(int n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Eigen::VectorXcd x(n);
  for (int i = 0; i < n; ++i) x(i) = complexd(u(rng), u(rng));
  return x;
}
}  // namespace

TEST_SUITE("numerics") {
  TEST_CASE("fft matches the direct transform and inverts") {
    for (const int n : {7, 16, 33}) {
      const Eigen::VectorXcd x = random_signal(n, 100 + n);
      const Eigen::VectorXcd spec = nd::fft(x);
      for (int k = 0; k < n; ++k) {
        complexd direct = 0.0;
        for (int j = 0; j < n; ++j) {
          direct += x(j) * std::polar(1.0, -2.0 * kPi * j * k / n);
        }
        CHECK(std::abs(spec(k) - direct) < 1e-12);
      }
      CHECK((nd::ifft(spec) - x).cwiseAbs().maxCoeff() < 1e-14);
      CHECK(std::abs(spec.squaredNorm() / n - x.squaredNorm()) < 1e-12);
    }
  }

  TEST_CASE("chirp sum matches direct evaluation") {
    const int n = 33;
    const int count = 50;
    const double phi = 0.37;
    const Eigen::VectorXcd x = random_signal(n, 5);
    const Eigen::VectorXcd out = nd::chirp_sum(x, count, phi);
    REQUIRE(out.size() == count);
    for (int q = 0; q < count; ++q) {
      complexd direct = 0.0;
      for (int k = 0; k < n; ++k) direct += x(k) * std::polar(1.0, phi * k * q);
      CHECK(std::abs(out(q) - direct) < 1e-10);
    }
  }

  TEST_CASE("upsampling keeps original samples and band-limited values") {
    const int n = 32;
    const int q = 4;
    // Band-limited: frequencies up to +-5 of the n-periodic basis.
    Eigen::VectorXcd x(n);
    auto value = [&](double j) {
      complexd v = 0.0;
      for (int f = -5; f <= 5; ++f) {
        v += std::polar(1.0 / (1.0 + std::abs(f)), 2.0 * kPi * f * j / n);
      }
      return v;
    };
    for (int j = 0; j < n; ++j) x(j) = value(j);
    const Eigen::VectorXcd fine = nd::upsample_fft(x, q);
    REQUIRE(fine.size() == n * q);
    for (int j = 0; j < n; ++j) {
      CHECK(std::abs(fine(q * j) - x(j)) < 1e-12);
    }
    for (int jf = 0; jf < n * q; ++jf) {
      CHECK(std::abs(fine(jf) - value(static_cast<double>(jf) / q)) < 1e-12);
    }
  }

  TEST_CASE("gauss-legendre integrates polynomials exactly") {
    const auto [nodes, weights] = nd::gauss_legendre(8, 0.0, 2.0);
    CHECK(std::abs(weights.sum() - 2.0) < 1e-14);
    // 8 nodes are exact through degree 15.
    double acc = 0.0;
    for (int i = 0; i < nodes.size(); ++i) {
      acc += weights(i) * std::pow(nodes(i), 15);
    }
    CHECK(std::abs(acc - std::pow(2.0, 16) / 16.0) < 1e-10);
  }

  TEST_CASE("bicubic interpolation reproduces cubics away from edges") {
    const int n = 41;
    const double extent = 4.0;
    const double step = 2.0 * extent / (n - 1);
    Eigen::MatrixXd values(n, n);
    auto f = [](double x, double p) {
      return x * x * x - 2.0 * p * p * p + x * p;
    };
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        values(j, k) = f(-extent + j * step, -extent + k * step);
      }
    }
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-extent + 2 * step,
                                             extent - 2 * step);
    for (int i = 0; i < 200; ++i) {
      const double x = u(rng);
      const double p = u(rng);
      CHECK(nd::bicubic_at(values, extent, step, x, p) ==
            doctest::Approx(f(x, p)).epsilon(1e-10));
    }
    CHECK(nd::bicubic_at(values, extent, step, extent + 1.0, 0.0) == 0.0);
    CHECK(nd::bilinear_at(values, extent, step, 0.0, -extent - 0.5) == 0.0);
  }

  TEST_CASE("bilinear interpolation reproduces planes") {
    const int n = 17;
    const double extent = 2.0;
    const double step = 2.0 * extent / (n - 1);
    Eigen::MatrixXd values(n, n);
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        values(j, k) = 2.0 * (-extent + j * step) - 3.0 * (-extent + k * step) + 1.0;
      }
    }
    CHECK(nd::bilinear_at(values, extent, step, 0.37, -1.21) ==
          doctest::Approx(2.0 * 0.37 + 3.0 * 1.21 + 1.0).epsilon(1e-12));
  }

  TEST_CASE("cubic interpolation on a sampled cubic") {
    const int n = 33;
    Eigen::VectorXcd ys(n);
    auto f = [](double t) {
      return complexd(t * t * t - t, 2.0 * t * t);
    };
    for (int i = 0; i < n; ++i) ys(i) = f(i);
    CHECK(std::abs(nd::cubic_interp(ys, 12.566) - f(12.566)) < 1e-10);
    CHECK(std::abs(nd::cubic_interp(ys, 1.5) - f(1.5)) < 1e-10);
    CHECK(nd::cubic_interp(ys, -0.1) == complexd(0.0, 0.0));
    CHECK(nd::cubic_interp(ys, n - 0.5) == complexd(0.0, 0.0));
    CHECK(std::abs(nd::cubic_interp(ys, n - 1.0) - ys(n - 1)) < 1e-12);
  }
}
