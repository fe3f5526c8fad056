// Copyright 2026 The fresneltomo Authors
// SPDX-License-Identifier: Apache-2.0
//
// Internal numerical kernels: chirp sums via Bluestein/FFTW, Gauss-Legendre
// nodes, FFT zero-pad upsampling, and grid interpolation. Not part of the
// stable public surface.

#ifndef FRESNELTOMO_DETAIL_NUMERICS_HPP
#define FRESNELTOMO_DETAIL_NUMERICS_HPP

#include <Eigen/Dense>
#include <utility>
#include <vector>

#include "fresneltomo/common.hpp"

namespace fresneltomo::detail {

// X[q] = sum_k x[k] e^{i phi k q}, q = 0..count-1, evaluated with Bluestein's
// algorithm (three FFTs of a power-of-two length >= len(x) + count - 1).
// Deterministic for fixed inputs; plans are cached per FFT length.
Eigen::VectorXcd chirp_sum(const Eigen::VectorXcd& x, int count, double phi);

// Forward/inverse complex FFT of arbitrary length (FFTW, unnormalized
// forward; inverse divides by the length).
Eigen::VectorXcd fft(const Eigen::VectorXcd& x);
Eigen::VectorXcd ifft(const Eigen::VectorXcd& x);

// Band-limited upsampling by an integer factor: zero-pad the spectrum,
// splitting the Nyquist bin symmetrically for even input lengths. Returns
// factor * len(x) samples whose every factor-th value reproduces x.
Eigen::VectorXcd upsample_fft(const Eigen::VectorXcd& x, int factor);

// Gauss-Legendre nodes and weights on [a, b].
std::pair<Eigen::VectorXd, Eigen::VectorXd> gauss_legendre(int count, double a,
                                                           double b);

// Interpolation on an (x, p) grid of values W(j, k) = W(-L + j dx, -L + k dx).
// Points outside the grid evaluate to 0.
//
// bilinear_at: first order, exact on grid points.
// bicubic_at: 4-point Lagrange cubic per axis; falls back to bilinear within
// one cell of the boundary (values there are below the edge-mass
// preconditions of every caller).
double bilinear_at(const Eigen::MatrixXd& w, double extent, double dx,
                   double x, double p);
double bicubic_at(const Eigen::MatrixXd& w, double extent, double dx, double x,
                  double p);

// Cubic 4-point Lagrange interpolation of a complex sequence y_j = y(j * h)
// at fractional index t (in units of h); clamps to 0 outside [0, len-1].
complexd cubic_interp(const Eigen::VectorXcd& y, double t);

}  // namespace fresneltomo::detail

#endif  // FRESNELTOMO_DETAIL_NUMERICS_HPP
