// Copyright 2026 The fresneltomo Authors
// SPDX-License-Identifier: Apache-2.0

#include "fresneltomo/symplectic.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace fresneltomo {

namespace {

void require_unimodular(const RayMatrix& m, const char* where) {
  if (!is_unimodular(m)) {
    throw std::invalid_argument(std::string(where) + ": det = " +
                                std::to_string(m.det()) + ", expected 1");
  }
}

void require_valid(const SRPair& p, const char* where) {
  if (!is_valid(p)) {
    throw std::invalid_argument(
        std::string(where) + ": |s|^2 - |r|^2 = " +
        std::to_string(std::norm(p.s) - std::norm(p.r)) + ", expected 1");
  }
}

}  // namespace

bool is_unimodular(const RayMatrix& m, double tol) {
  return std::abs(m.det() - 1.0) <= tol;
}

bool is_valid(const SRPair& p, double tol) {
  return std::abs(std::norm(p.s) - std::norm(p.r) - 1.0) <= tol;
}

SRPair abcd_to_sr(const RayMatrix& m) {
  require_unimodular(m, "abcd_to_sr");
  SRPair p;
  p.s = 0.5 * complexd(m.a + m.d, -(m.b - m.c));
  p.r = -0.5 * complexd(m.a - m.d, m.b + m.c);
  return p;
}

RayMatrix sr_to_abcd(const SRPair& p) {
  require_valid(p, "sr_to_abcd");
  RayMatrix m;
  m.a = std::real(p.s - p.r);
  m.b = -std::imag(p.s + p.r);
  m.c = std::imag(p.s - p.r);
  m.d = std::real(p.s + p.r);
  return m;
}

RayMatrix compose(const RayMatrix& m1, const RayMatrix& m2) {
  require_unimodular(m1, "compose");
  require_unimodular(m2, "compose");
  RayMatrix m;
  m.a = m1.a * m2.a + m1.b * m2.c;
  m.b = m1.a * m2.b + m1.b * m2.d;
  m.c = m1.c * m2.a + m1.d * m2.c;
  m.d = m1.c * m2.b + m1.d * m2.d;
  return m;
}

SRPair sr_compose(const SRPair& p1, const SRPair& p2) {
  require_valid(p1, "sr_compose");
  require_valid(p2, "sr_compose");
  SRPair p;
  p.s = p1.s * p2.s + p1.r * std::conj(p2.r);
  p.r = p1.s * p2.r + p1.r * std::conj(p2.s);
  return p;
}

RayMatrix inverse(const RayMatrix& m) {
  require_unimodular(m, "inverse");
  return RayMatrix{m.d, -m.b, -m.c, m.a};
}

RayMatrix identity_matrix() { return RayMatrix{}; }

RayMatrix rotation(double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  return RayMatrix{c, s, -s, c};
}

RayMatrix free_propagation(double lambda) {
  return RayMatrix{1.0, lambda, 0.0, 1.0};
}

RayMatrix lens(double kappa) { return RayMatrix{1.0, 0.0, kappa, 1.0}; }

RayMatrix scaling(double mu) {
  if (mu == 0.0) {
    throw std::invalid_argument("scaling: mu must be nonzero");
  }
  return RayMatrix{mu, 0.0, 0.0, 1.0 / mu};
}

RayMatrix elementary(std::string_view kind, double parameter) {
  if (kind == "identity") return identity_matrix();
  if (kind == "rotation") return rotation(parameter);
  if (kind == "free") return free_propagation(parameter);
  if (kind == "lens") return lens(parameter);
  if (kind == "scale") return scaling(parameter);
  throw std::invalid_argument("elementary: unknown kind '" +
                              std::string(kind) + "'");
}

RayMatrix random_unimodular(std::mt19937_64& rng, double bmin) {
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  constexpr double kPi = 3.14159265358979323846;
  for (;;) {
    const double theta = 2.0 * kPi * u01(rng);
    const double mu = std::exp(0.25 * (2.0 * u01(rng) - 1.0));
    const double kappa = 0.3 * (2.0 * u01(rng) - 1.0);
    const RayMatrix m = compose(rotation(theta), compose(scaling(mu), lens(kappa)));
    if (std::abs(m.b) >= bmin) return m;
  }
}

RayMatrix random_unimodular_box(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  for (;;) {
    const double a = u(rng);
    const double b = u(rng);
    const double c = u(rng);
    if (std::abs(a) < 0.2) continue;
    const double d = (1.0 + b * c) / a;
    if (std::abs(d) > 5.0) continue;
    return RayMatrix{a, b, c, d};
  }
}

}  // namespace fresneltomo
