// Copyright 2026 The fresneltomo Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef FRESNELTOMO_GRIDTRANSFORM_HPP
#define FRESNELTOMO_GRIDTRANSFORM_HPP

#include "fresneltomo/grid.hpp"
#include "fresneltomo/symplectic.hpp"

namespace fresneltomo {

// Below this |b| the oscillatory kernel is replaced by its stationary-phase
// limit (pure rescale + chirp).
inline constexpr double kDegenerateB = 1e-12;

// Integral kernel of the grid transform for |b| > kDegenerateB:
//   K(xout, xin) = (2 pi i b)^{-1/2}
//                  exp[(i/2b)(a xin^2 - 2 xout xin + d xout^2)],
// principal branch of the square root. |K| = (2 pi |b|)^{-1/2}.
// Throws std::invalid_argument when |b| <= kDegenerateB.
complexd fresnel_kernel(const RayMatrix& m, double xout, double xin);

// Unitary integral transform g = K psi by dense trapezoid quadrature on the
// same grid. The input is first upsampled (band-limited zero-padded FFT) to
// a step fine enough that the kernel chirp is sampled below the aliasing
// threshold: step_fine <= 0.5 pi |b| / ((|a| + 1) extent). The refinement
// factor is capped at 2^20 total samples (warned). For |b| <= kDegenerateB
// the stationary-phase limit g(x') = a^{-1/2} e^{i c x'^2 / (2a)} psi(x'/a)
// is used with cubic interpolation (a != 0 is guaranteed by unimodularity
// when b = 0). Warns on input edge mass > 1e-8. L2 norm is preserved to
// rounding for outputs supported inside the grid.
GridWavefunction fresnel_transform(const RayMatrix& m,
                                   const GridWavefunction& psi);

// fresnel_transform(inverse(m), psi): the adjoint of the unitary transform,
// written out because tomogram pipelines read as |adjoint-transformed
// state|^2.
GridWavefunction apply_fresnel_adjoint(const RayMatrix& m,
                                       const GridWavefunction& psi);

// Momentum-space wavefunction on the same grid:
//   psi~(p) = (2 pi)^{-1/2} Int dx e^{-i p x} psi(x)
// by trapezoid quadrature evaluated with a chirp sum (exact phase handling
// on the symmetric grid, no FFT periodicity assumption). Satisfies Parseval
// to rounding for grid-supported states.
GridWavefunction momentum_wavefunction(const GridWavefunction& psi);

}  // namespace fresneltomo

#endif  // FRESNELTOMO_GRIDTRANSFORM_HPP
