// Copyright 2026 The fresneltomo Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>

#include "fresneltomo/symplectic.hpp"

namespace ft = fresneltomo;
using ft::complexd;

namespace {
constexpr double kPi = 3.14159265358979323846;

double matrix_dev(const ft::RayMatrix& m1, const ft::RayMatrix& m2) {
  return std::max(std::max(std::abs(m1.a - m2.a), std::abs(m1.b - m2.b)),
                  std::max(std::abs(m1.c - m2.c), std::abs(m1.d - m2.d)));
}
}  // namespace

TEST_SUITE("symplectic") {
  TEST_CASE("chart of the free-propagation example") {
    const ft::SRPair p = ft::abcd_to_sr(ft::RayMatrix{1, 2, 0, 1});
    CHECK(std::abs(p.s - complexd(1, -1)) < 1e-15);
    CHECK(std::abs(p.r - complexd(0, -1)) < 1e-15);
  }

  TEST_CASE("chart of the quarter-turn example") {
    const ft::SRPair p = ft::abcd_to_sr(ft::RayMatrix{0, 1, -1, 0});
    CHECK(std::abs(p.s - complexd(0, -1)) < 1e-15);
    CHECK(std::abs(p.r) < 1e-15);
  }

  TEST_CASE("rotations map to a pure phase in s") {
    for (const double theta : {0.0, 0.3, 1.2, kPi / 2, 2.9}) {
      const ft::SRPair p = ft::abcd_to_sr(ft::rotation(theta));
      CHECK(std::abs(p.s - std::polar(1.0, -theta)) < 1e-14);
      CHECK(std::abs(p.r) < 1e-14);
    }
  }

  TEST_CASE("chart round trip and hyperbolic constraint") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 20; ++i) {
      const ft::RayMatrix m = ft::random_unimodular_box(rng);
      const ft::SRPair p = ft::abcd_to_sr(m);
      CHECK(std::abs(std::norm(p.s) - std::norm(p.r) - 1.0) < 1e-12);
      CHECK(matrix_dev(ft::sr_to_abcd(p), m) < 1e-13);
    }
  }

  TEST_CASE("composition agrees between charts") {
    std::mt19937_64 rng(12);
    for (int i = 0; i < 20; ++i) {
      const ft::RayMatrix m1 = ft::random_unimodular(rng);
      const ft::RayMatrix m2 = ft::random_unimodular(rng);
      const ft::SRPair direct = ft::abcd_to_sr(ft::compose(m1, m2));
      const ft::SRPair chained =
          ft::sr_compose(ft::abcd_to_sr(m1), ft::abcd_to_sr(m2));
      CHECK(std::abs(direct.s - chained.s) < 1e-12);
      CHECK(std::abs(direct.r - chained.r) < 1e-12);
    }
  }

  TEST_CASE("inverse composes to the identity") {
    std::mt19937_64 rng(13);
    const ft::RayMatrix m = ft::random_unimodular_box(rng);
    CHECK(matrix_dev(ft::compose(m, ft::inverse(m)), ft::identity_matrix()) <
          1e-13);
    CHECK(matrix_dev(ft::compose(ft::inverse(m), m), ft::identity_matrix()) <
          1e-13);
  }

  TEST_CASE("elementary factory") {
    CHECK(matrix_dev(ft::elementary("identity"), ft::identity_matrix()) == 0);
    CHECK(matrix_dev(ft::elementary("rotation", 0.4), ft::rotation(0.4)) == 0);
    CHECK(matrix_dev(ft::elementary("free", 1.5), ft::free_propagation(1.5)) ==
          0);
    CHECK(matrix_dev(ft::elementary("lens", -0.3), ft::lens(-0.3)) == 0);
    CHECK(matrix_dev(ft::elementary("scale", 2.0), ft::scaling(2.0)) == 0);
    CHECK_THROWS_AS((void)ft::elementary("prism", 1.0), std::invalid_argument);
    CHECK_THROWS_AS((void)ft::scaling(0.0), std::invalid_argument);
  }

  TEST_CASE("non-unimodular input is rejected") {
    const ft::RayMatrix bad{1, 1, 1, 1};
    CHECK_FALSE(ft::is_unimodular(bad));
    CHECK_THROWS_AS((void)ft::abcd_to_sr(bad), std::invalid_argument);
    const ft::SRPair badp{complexd(1, 0), complexd(1, 0)};
    CHECK_FALSE(ft::is_valid(badp));
    CHECK_THROWS_AS((void)ft::sr_to_abcd(badp), std::invalid_argument);
  }

  TEST_CASE("samplers respect their constraints") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 50; ++i) {
      const ft::RayMatrix m = ft::random_unimodular(rng, 0.05);
      CHECK(std::abs(m.det() - 1.0) < 1e-12);
      CHECK(std::abs(m.b) >= 0.05);
    }
    for (int i = 0; i < 50; ++i) {
      const ft::RayMatrix m = ft::random_unimodular_box(rng);
      CHECK(std::abs(m.det() - 1.0) < 1e-12);
      CHECK(std::abs(m.a) >= 0.2);
      CHECK(std::abs(m.d) <= 5.0);
    }
  }

  TEST_CASE("seeded sampling is reproducible") {
    std::mt19937_64 rng1(42);
    std::mt19937_64 rng2(42);
    for (int i = 0; i < 5; ++i) {
      CHECK(matrix_dev(ft::random_unimodular(rng1),
                       ft::random_unimodular(rng2)) == 0);
    }
  }
}
