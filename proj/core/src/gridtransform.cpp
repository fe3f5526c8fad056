// Copyright 2026 The fresneltomo Authors
// SPDX-License-Identifier: Apache-2.0

#include "fresneltomo/gridtransform.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "fresneltomo/detail/numerics.hpp"

namespace fresneltomo {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr int kMaxFineSamples = 1 << 20;
constexpr int kPhaseAnchorStride = 256;

void check_input(const RayMatrix& m, const GridWavefunction& psi,
                 const char* where) {
  if (!is_unimodular(m)) {
    throw std::invalid_argument(std::string(where) +
                                ": matrix not unimodular");
  }
  validate(psi.grid);
  if (psi.samples.size() != psi.grid.samples) {
    throw std::invalid_argument(std::string(where) +
                                ": sample count does not match grid");
  }
  const double mass = edge_mass(psi);
  if (mass > 1e-8) {
    std::ostringstream msg;
    msg << where << ": input edge mass " << mass
        << " exceeds 1e-8; the state is not supported inside the grid";
    emit_warning(msg.str());
  }
}

}  // namespace

complexd fresnel_kernel(const RayMatrix& m, double xout, double xin) {
  if (!is_unimodular(m)) {
    throw std::invalid_argument("fresnel_kernel: matrix not unimodular");
  }
  if (std::abs(m.b) <= kDegenerateB) {
    throw std::invalid_argument(
        "fresnel_kernel: |b| below the degenerate threshold; use "
        "fresnel_transform for the stationary-phase limit");
  }
  const complexd pref = 1.0 / std::sqrt(complexd(0.0, 2.0 * kPi * m.b));
  const double phase =
      (m.a * xin * xin - 2.0 * xout * xin + m.d * xout * xout) / (2.0 * m.b);
  return pref * std::polar(1.0, phase);
}

GridWavefunction fresnel_transform(const RayMatrix& m,
                                   const GridWavefunction& psi) {
  check_input(m, psi, "fresnel_transform");
  const int n = psi.grid.samples;
  const double extent = psi.grid.extent;
  const double dx = psi.grid.step();
  const Eigen::VectorXd xs = psi.grid.axis();

  GridWavefunction out;
  out.grid = psi.grid;
  out.samples.resize(n);

  if (std::abs(m.b) <= kDegenerateB) {
    // Stationary-phase limit: g(x') = a^{-1/2} e^{i c x'^2/(2a)} psi(x'/a).
    const complexd pref = 1.0 / std::sqrt(complexd(m.a, 0.0));
    for (int j = 0; j < n; ++j) {
      const double xi = xs(j) / m.a;
      const complexd val = detail::cubic_interp(psi.samples, (xi + extent) / dx);
      out.samples(j) =
          pref * std::polar(1.0, m.c * xs(j) * xs(j) / (2.0 * m.a)) * val;
    }
    return out;
  }

  // Refine the quadrature grid until the kernel chirp is oversampled by 2x
  // across the whole window, then integrate the dense kernel directly.
  const double step_needed =
      0.5 * kPi * std::abs(m.b) / ((std::abs(m.a) + 1.0) * extent);
  int q = std::max(1, static_cast<int>(std::ceil(dx / step_needed)));
  if (static_cast<long long>(q) * n > kMaxFineSamples) {
    q = std::max(1, kMaxFineSamples / n);
    std::ostringstream msg;
    msg << "fresnel_transform: refinement capped at " << q * n
        << " samples; results may alias for |b| = " << std::abs(m.b);
    emit_warning(msg.str());
  }
  const int nf = q * n;
  const double dxf = dx / q;
  const Eigen::VectorXcd fine = detail::upsample_fft(psi.samples, q);

  Eigen::VectorXcd hvec(nf);
  for (int k = 0; k < nf; ++k) {
    const double xf = -extent + dxf * k;
    double w = dxf;
    if (k == 0 || k == nf - 1) w *= 0.5;
    hvec(k) =
        std::polar(w, m.a * xf * xf / (2.0 * m.b)) * fine(k);
  }

  const complexd pref = 1.0 / std::sqrt(complexd(0.0, 2.0 * kPi * m.b));
  for (int j = 0; j < n; ++j) {
    const double xj = xs(j);
    const complexd ratio = std::polar(1.0, -xj * dxf / m.b);
    complexd phase;
    complexd acc(0.0, 0.0);
    for (int k = 0; k < nf; ++k) {
      if (k % kPhaseAnchorStride == 0) {
        phase = std::polar(1.0, -xj * (-extent + dxf * k) / m.b);
      }
      acc += phase * hvec(k);
      phase *= ratio;
    }
    out.samples(j) =
        pref * std::polar(1.0, m.d * xj * xj / (2.0 * m.b)) * acc;
  }
  return out;
}

GridWavefunction apply_fresnel_adjoint(const RayMatrix& m,
                                       const GridWavefunction& psi) {
  return fresnel_transform(inverse(m), psi);
}

GridWavefunction momentum_wavefunction(const GridWavefunction& psi) {
  validate(psi.grid);
  if (psi.samples.size() != psi.grid.samples) {
    throw std::invalid_argument(
        "momentum_wavefunction: sample count does not match grid");
  }
  const int n = psi.grid.samples;
  const double extent = psi.grid.extent;
  const double dx = psi.grid.step();
  const Eigen::VectorXd w = trapezoid_weights(psi.grid);

  // e^{-i p_m x_j} on the symmetric grid splits into edge phases times a
  // chirp e^{-i dx^2 j m}; the chirp sum handles the cross term exactly.
  const complexd corner = std::polar(1.0, -0.5 * extent * extent);
  Eigen::VectorXcd base(n);
  for (int j = 0; j < n; ++j) {
    base(j) = w(j) * psi.samples(j) * std::polar(1.0, extent * dx * j) * corner;
  }
  Eigen::VectorXcd spec = detail::chirp_sum(base, n, -dx * dx);
  GridWavefunction out;
  out.grid = psi.grid;
  out.samples.resize(n);
  const double scale = 1.0 / std::sqrt(2.0 * kPi);
  for (int mm = 0; mm < n; ++mm) {
    out.samples(mm) =
        scale * spec(mm) * std::polar(1.0, extent * dx * mm) * corner;
  }
  return out;
}

}  // namespace fresneltomo
