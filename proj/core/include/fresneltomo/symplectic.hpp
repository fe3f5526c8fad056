// Copyright 2026 The fresneltomo Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef FRESNELTOMO_SYMPLECTIC_HPP
#define FRESNELTOMO_SYMPLECTIC_HPP

#include <random>
#include <string_view>

#include "fresneltomo/common.hpp"

namespace fresneltomo {

// Real 2x2 ray-transfer matrix [[a, b], [c, d]] with det = ad - bc = 1.
// Constructors perform no renormalization; operations validate on entry
// against kUnimodularTol and throw std::invalid_argument on violation.
struct RayMatrix {
  double a = 1.0;
  double b = 0.0;
  double c = 0.0;
  double d = 1.0;

  double det() const { return a * d - b * c; }
};

// Complex chart (s, r) of RayMatrix with |s|^2 - |r|^2 = 1. The map to the
// matrix is A = Re(s - r), B = -Im(s + r), C = Im(s - r), D = Re(s + r);
// rotation matrices map to (s, r) = (e^{-i theta}, 0).
struct SRPair {
  complexd s{1.0, 0.0};
  complexd r{0.0, 0.0};
};

inline constexpr double kUnimodularTol = 1e-12;

bool is_unimodular(const RayMatrix& m, double tol = kUnimodularTol);
bool is_valid(const SRPair& p, double tol = kUnimodularTol);

// Chart maps. Both directions validate their input invariant.
//   abcd_to_sr: s = ((A+D) - i(B-C))/2, r = -((A-D) + i(B+C))/2.
//   sr_to_abcd: inverse map; round trip is exact to rounding.
SRPair abcd_to_sr(const RayMatrix& m);
RayMatrix sr_to_abcd(const SRPair& p);

// Standard matrix product m1 * m2. Result is unimodular to rounding.
RayMatrix compose(const RayMatrix& m1, const RayMatrix& m2);

// Composition in the (s, r) chart, consistent with compose through the chart
// maps: abcd_to_sr(compose(M1, M2)) == sr_compose(abcd_to_sr(M1),
// abcd_to_sr(M2)). Equals the product of the 2x2 complex matrices
// [[s, -r], [-conj(r), conj(s)]].
SRPair sr_compose(const SRPair& p1, const SRPair& p2);

// Inverse of a unimodular matrix: (a, b, c, d) -> (d, -b, -c, a).
RayMatrix inverse(const RayMatrix& m);

// Elementary matrices.
//   rotation(theta) = (cos t,  sin t, -sin t, cos t)
//   free_propagation(lambda) = (1, lambda, 0, 1)
//   lens(kappa) = (1, 0, kappa, 1)
//   scaling(mu) = (mu, 0, 0, 1/mu), mu != 0
RayMatrix identity_matrix();
RayMatrix rotation(double theta);
RayMatrix free_propagation(double lambda);
RayMatrix lens(double kappa);
RayMatrix scaling(double mu);

// Named lookup used by the CLI: kind is one of "identity", "rotation",
// "free", "lens", "scale". Throws std::invalid_argument on unknown kinds or
// invalid parameters. "identity" ignores the parameter.
RayMatrix elementary(std::string_view kind, double parameter = 0.0);

// Exactly unimodular random matrix sampled as
// rotation(theta) * scaling(mu) * lens(kappa) with theta ~ U[0, 2pi),
// log mu ~ U[-1/4, 1/4], kappa ~ U[-0.3, 0.3]; resamples until |b| >= bmin.
// The factorization bounds row norms: sqrt(d^2 + b^2) = 1/mu <= e^{1/4} and
// sqrt(a^2 + c^2) <= sqrt(mu^2 + kappa^2/mu^2), so tomograms of the standard
// test states stay inside the default grid.
RayMatrix random_unimodular(std::mt19937_64& rng, double bmin = 0.0);

// Random matrix with entries spanning [-5, 5] for chart round-trip tests:
// a, b, c drawn uniformly, d = (1 + b c)/a, rejected unless |a| >= 0.2 and
// |d| <= 5.
RayMatrix random_unimodular_box(std::mt19937_64& rng);

}  // namespace fresneltomo

#endif  // FRESNELTOMO_SYMPLECTIC_HPP
