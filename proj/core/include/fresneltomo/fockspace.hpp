// Copyright 2026 The fresneltomo Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef FRESNELTOMO_FOCKSPACE_HPP
#define FRESNELTOMO_FOCKSPACE_HPP

#include <Eigen/Dense>
#include <utility>

#include "fresneltomo/grid.hpp"
#include "fresneltomo/symplectic.hpp"

namespace fresneltomo {

// Truncated number-basis objects of dimension N. Operator identities hold up
// to truncation effects confined to the top rows; tests compare on leading
// blocks accordingly.
using FockVector = Eigen::VectorXcd;
using FockOperator = Eigen::MatrixXcd;

// Lowering/raising matrices: a|n> = sqrt(n)|n-1>, adag|n> = sqrt(n+1)|n+1>
// (top entry truncated). [a, adag] = I except the last diagonal entry.
// Throws std::invalid_argument for dim < 2.
std::pair<FockOperator, FockOperator> ladder(int dim);

// Quadratures X = (a + adag)/sqrt(2), P = i(adag - a)/sqrt(2); Hermitian.
std::pair<FockOperator, FockOperator> quadratures(int dim);

// Unitary generalized-squeezing operator for the chart pair (s, r):
//   F = (1/sqrt(conj(s))) exp(-(r/2conj(s)) adag^2)
//       * (1/conj(s))^{adag a} * exp((conj(r)/2conj(s)) a^2),
// principal branch for the square root. The nilpotent factors are exact
// finite series in truncation, so matrix elements carry no iteration error;
// unitarity holds on leading blocks up to squeezing leakage past dimension
// dim (grows with |r|).
FockOperator fresnel_operator(const SRPair& p, int dim);

// Polar 2D quadrature (Gauss-Legendre radial x trapezoid angular) of the
// coherent-state integral sqrt(s)/pi * Int d^2z |s z - r conj(z)><z| using
// <n|z> = e^{-|z|^2/2} z^n / sqrt(n!). Independent oracle for
// fresnel_operator: no shared code path beyond the chart types. Intended for
// small dim (<= 16). Throws std::invalid_argument when the vacuum-element
// quadrature self-check deviates from 1/sqrt(conj(s)) by more than
// tolerance (the integrand decays as e^{-|z|^2}; radius 6 covers 1e-6,
// radius 8 reaches rounding).
struct QuadratureSpec {
  double radius = 6.0;
  int radial_nodes = 200;
  int angular_nodes = 200;
  double tolerance = 1e-6;
};
FockOperator fresnel_operator_integral(const SRPair& p, int dim,
                                       const QuadratureSpec& quad = {});

// Closed-form coherent-state matrix element
//   <z|F|z'> = (1/sqrt(conj(s))) exp[-|z|^2/2 - |z'|^2/2
//              - (r/2conj(s)) conj(z)^2 + (conj(r)/2conj(s)) z'^2
//              + conj(z) z' / conj(s)],
// branch consistent with fresnel_operator. Note the plus sign on the z'^2
// term: it is fixed by agreement with both the truncated-matrix and the
// integral construction (the sign pairing mirrors the adag^2 / a^2 factors).
complexd coherent_matrix_element(const SRPair& p, complexd z, complexd zp);

// Coefficients <n|z> of a coherent state, n = 0..dim-1.
FockVector coherent_vector(complexd z, int dim);

// Delta-normalized eigenvector of d*X - b*P with eigenvalue x:
//   |x>_M = pi^{-1/4} (d + i b)^{-1/2}
//           exp{-[(a - i c)/(d + i b)] x^2/2 + alpha adag + beta adag^2/2}|0>,
//   alpha = sqrt(2) x / (d + i b), beta = -(d - i b)/(d + i b),
// generated by the three-term recursion c_{n+1} = (alpha c_n + beta sqrt(n)
// c_{n-1}) / sqrt(n+1). Delta-normalized coefficients do not decay, so the
// truncated vector is meaningful through row dim-2 only (the last row of any
// quadrature acting on it is corrupted by the missing row dim). Warns when
// |x| exceeds the trust radius 0.7 sqrt(2 dim).
FockVector tomo_eigenstate(const RayMatrix& m, double x, int dim);

// Analogue for a*P - c*X with eigenvalue p:
//   alpha = sqrt(2) i p / (a - i c), beta = (a + i c)/(a - i c),
// prefactor pi^{-1/4} (a - i c)^{-1/2}.
FockVector momentum_eigenstate(const RayMatrix& m, double p, int dim);

// Max-abs residual of (d X - b P) v = x v over rows 0..dim-2 (see
// tomo_eigenstate for why the top row is excluded).
double eigen_residual_position(const RayMatrix& m, double x,
                               const FockVector& v);
double eigen_residual_momentum(const RayMatrix& m, double p,
                               const FockVector& v);

// Largest-magnitude eigenvalue argument for which truncated expansions at
// dimension dim are trustworthy (harmonic-oscillator turning point with
// margin).
double trust_radius(int dim);

// Orthonormal Hermite functions h_0..h_{count-1} evaluated at the given
// points (column n holds h_n). Stable forward recurrence
//   h_{n+1} = sqrt(2/(n+1)) x h_n - sqrt(n/(n+1)) h_{n-1}.
Eigen::MatrixXd hermite_functions(const Eigen::VectorXd& points, int count);

// Basis synthesis psi(x_j) = sum_n c_n h_n(x_j) and its quadrature adjoint.
// fock_to_grid warns when the grid extent is below the trust radius;
// round trips are 1e-8-accurate for states with tail mass <= 1e-10.
GridWavefunction fock_to_grid(const FockVector& v, const GridSpec& grid);
FockVector grid_to_fock(const GridWavefunction& psi, int dim);

// Completeness defect of the tomographic eigenbasis:
//   max_abs entry of (Int dx |x>_M <x|_M - I) over the leading
//   (dim/2) x (dim/2) block, with the x integral by trapezoid quadrature
// over the grid. Wider matrices need wider grids: the eigenfunction width
// scales with sqrt(d^2 + b^2).
double completeness_defect(const RayMatrix& m, int dim, const GridSpec& grid);

}  // namespace fresneltomo

#endif  // FRESNELTOMO_FOCKSPACE_HPP
