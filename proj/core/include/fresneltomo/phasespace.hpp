// Copyright 2026 The fresneltomo Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef FRESNELTOMO_PHASESPACE_HPP
#define FRESNELTOMO_PHASESPACE_HPP

#include <Eigen/Dense>
#include <functional>
#include <vector>

#include "fresneltomo/grid.hpp"
#include "fresneltomo/gridtransform.hpp"
#include "fresneltomo/symplectic.hpp"

namespace fresneltomo {

// Real Wigner values W(j, k) = W(x_j, p_k) on the square grid of `grid`
// (same axis for x and p). Normalized states integrate to 1 and satisfy
// |W| <= 1/pi in these units.
struct WignerGrid {
  GridSpec grid;
  Eigen::MatrixXd values;
};

enum class TomogramMode { position, momentum };

// Quadrature probability distribution tagged with the full matrix that
// produced it; position curves depend on m only through (d, b), momentum
// curves only through (a, c).
struct TomogramCurve {
  RayMatrix matrix;
  TomogramMode mode = TomogramMode::position;
  Eigen::VectorXd abscissas;
  Eigen::VectorXd values;
};

// W(x, p) = (1/2 pi) Int du e^{i p u} conj(psi(x + u/2)) psi(x - u/2),
// evaluated per x row as a chirp sum over u = 2 k step (row length adapts to
// the distance from the grid edge). The symmetric sum is real by
// construction; throws std::runtime_error if the imaginary residue exceeds
// 1e-8 and drops it otherwise.
WignerGrid wigner(const GridWavefunction& psi);

// Line-integral projection along the quadrature direction defined by m.
// Position mode integrates W over the lines d x' - b p' = x:
//   R(x) = (d^2 + b^2)^{-1} Int dv W((d u + b v)/(d^2+b^2),
//                                     (d v - b u)/(d^2+b^2)),  u = x,
// with v stepping by the grid step and 4-point Lagrange (cubic) grid
// interpolation; samples outside the grid contribute 0 and a warning fires
// if the line exits the grid where |W| > 1e-8. At m = identity this is the
// position marginal. radon_momentum is the analogue over
// a p' - c x' = p, reducing to the momentum marginal at identity.
// Abscissas default to the grid axis.
TomogramCurve radon_position(const WignerGrid& w, const RayMatrix& m);
TomogramCurve radon_position(const WignerGrid& w, const RayMatrix& m,
                             const Eigen::VectorXd& xs);
TomogramCurve radon_momentum(const WignerGrid& w, const RayMatrix& m);
TomogramCurve radon_momentum(const WignerGrid& w, const RayMatrix& m,
                             const Eigen::VectorXd& ps);

// Quadrature distribution through the wavefunction route:
//   position: t(x) = |apply_fresnel_adjoint(m, psi)(x)|^2
//   momentum: t(p) = |momentum_wavefunction(apply_fresnel_adjoint(m,
//   psi))(p)|^2
TomogramCurve tomogram_via_fresnel(const GridWavefunction& psi,
                                   const RayMatrix& m, TomogramMode mode);

// Max-abs difference between tomogram_via_fresnel and the matching Radon
// projection of wigner(psi) on the grid abscissas: the equality of the two
// routes is the library's central cross-check.
double central_identity_check(const GridWavefunction& psi, const RayMatrix& m,
                              TomogramMode mode);

// Phase-space average sum h(x, p) W(x, p) dx dp; equals the quantum
// expectation of the Weyl-ordered operator with symbol h.
double weyl_expectation(const WignerGrid& w,
                        const std::function<double(double, double)>& h);

// Filtered back-projection from position tomograms of rotation(theta_i),
// theta_i = i pi / m uniform over [0, pi). Ramp filter |nu| with Hann
// apodization cut at the grid Nyquist pi/step, applied via zero-padded FFT;
// the angle sum is scaled by pi/m. Curves must all be position mode on a
// common abscissa grid; throws for fewer than 8 curves, warns below 32 or
// for nonuniform angle coverage (matrix tags are checked against
// rotation(theta_i)).
WignerGrid inverse_radon_fbp(const std::vector<TomogramCurve>& curves);

}  // namespace fresneltomo

#endif  // FRESNELTOMO_PHASESPACE_HPP
