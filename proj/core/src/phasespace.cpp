// Copyright 2026 The fresneltomo Authors
// SPDX-License-Identifier: Apache-2.0

#include "fresneltomo/phasespace.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "fresneltomo/detail/numerics.hpp"

namespace fresneltomo {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kImagFailTol = 1e-8;
constexpr double kLineExitTol = 1e-8;

void check_wavefunction(const GridWavefunction& psi, const char* where) {
  validate(psi.grid);
  if (psi.samples.size() != psi.grid.samples) {
    throw std::invalid_argument(std::string(where) +
                                ": sample count does not match grid");
  }
}

void check_wigner(const WignerGrid& w, const char* where) {
  validate(w.grid);
  if (w.values.rows() != w.grid.samples || w.values.cols() != w.grid.samples) {
    throw std::invalid_argument(std::string(where) +
                                ": value matrix does not match grid");
  }
}

// Shared Radon core: integrate interpolated Wigner values along the lines
// (x', p')(v) = (x0(u) + dir_x v, p0(u) + dir_p v) sampled with the grid
// step, scaled by step / norm2. Warns once when a line leaves the grid at a
// point where |W| is above kLineExitTol.
Eigen::VectorXd radon_core(const WignerGrid& w, const Eigen::VectorXd& us,
                           double coef_ux, double coef_vx, double coef_up,
                           double coef_vp, double norm2, double vmax,
                           const char* where) {
  const double extent = w.grid.extent;
  const double dx = w.grid.step();
  const int nv = static_cast<int>(std::ceil(2.0 * vmax / dx)) + 1;
  Eigen::VectorXd out(us.size());
  double worst_exit = 0.0;
  for (Eigen::Index iu = 0; iu < us.size(); ++iu) {
    const double u = us(iu);
    double acc = 0.0;
    double first_in = 0.0, last_in = 0.0;
    bool seen = false;
    bool exits_low = false, exits_high = true;
    for (int iv = 0; iv < nv; ++iv) {
      const double v = -vmax + dx * iv;
      const double xq = (coef_ux * u + coef_vx * v) / norm2;
      const double pq = (coef_up * u + coef_vp * v) / norm2;
      const bool inside = std::abs(xq) <= extent && std::abs(pq) <= extent;
      if (!inside) continue;
      const double val = detail::bicubic_at(w.values, extent, dx, xq, pq);
      acc += val;
      if (!seen) {
        seen = true;
        first_in = val;
        exits_low = iv > 0;
      }
      last_in = val;
      exits_high = iv < nv - 1;
    }
    out(iu) = acc * dx / norm2;
    if (seen) {
      if (exits_low) worst_exit = std::max(worst_exit, std::abs(first_in));
      if (exits_high) worst_exit = std::max(worst_exit, std::abs(last_in));
    }
  }
  if (worst_exit > kLineExitTol) {
    std::ostringstream msg;
    msg << where << ": integration line exits the grid where |W| = "
        << worst_exit << " > " << kLineExitTol
        << "; the projection is truncated";
    emit_warning(msg.str());
  }
  return out;
}

}  // namespace

WignerGrid wigner(const GridWavefunction& psi) {
  check_wavefunction(psi, "wigner");
  const int n = psi.grid.samples;
  const double extent = psi.grid.extent;
  const double dx = psi.grid.step();
  const double phi = 2.0 * dx * dx;

  WignerGrid out;
  out.grid = psi.grid;
  out.values.resize(n, n);

  double worst_imag = 0.0;
  Eigen::VectorXcd row;
  for (int j = 0; j < n; ++j) {
    const int half = std::min(j, n - 1 - j);
    row.resize(2 * half + 1);
    for (int k = -half; k <= half; ++k) {
      row(k + half) = std::conj(psi.samples(j + k)) * psi.samples(j - k) *
                      std::polar(1.0, -2.0 * extent * k * dx);
    }
    const Eigen::VectorXcd spec = detail::chirp_sum(row, n, phi);
    for (int mcol = 0; mcol < n; ++mcol) {
      const complexd val =
          spec(mcol) * std::polar(1.0, phi * double(-half) * mcol);
      worst_imag = std::max(worst_imag, std::abs(std::imag(val)));
      out.values(j, mcol) = std::real(val) * dx / kPi;
    }
  }
  if (worst_imag * dx / kPi > kImagFailTol) {
    std::ostringstream msg;
    msg << "wigner: imaginary residue " << worst_imag * dx / kPi
        << " exceeds " << kImagFailTol;
    throw std::runtime_error(msg.str());
  }
  return out;
}

TomogramCurve radon_position(const WignerGrid& w, const RayMatrix& m) {
  return radon_position(w, m, w.grid.axis());
}

TomogramCurve radon_position(const WignerGrid& w, const RayMatrix& m,
                             const Eigen::VectorXd& xs) {
  check_wigner(w, "radon_position");
  if (!is_unimodular(m)) {
    throw std::invalid_argument("radon_position: matrix not unimodular");
  }
  // Line d x' - b p' = x, parameterized by v = b x' + d p':
  //   x' = (d x + b v) / (d^2 + b^2),  p' = (d v - b x) / (d^2 + b^2).
  const double norm2 = m.d * m.d + m.b * m.b;
  const double vmax = (std::abs(m.d) + std::abs(m.b)) * w.grid.extent;
  TomogramCurve curve;
  curve.matrix = m;
  curve.mode = TomogramMode::position;
  curve.abscissas = xs;
  curve.values = radon_core(w, xs, m.d, m.b, -m.b, m.d, norm2, vmax,
                            "radon_position");
  return curve;
}

TomogramCurve radon_momentum(const WignerGrid& w, const RayMatrix& m) {
  return radon_momentum(w, m, w.grid.axis());
}

TomogramCurve radon_momentum(const WignerGrid& w, const RayMatrix& m,
                             const Eigen::VectorXd& ps) {
  check_wigner(w, "radon_momentum");
  if (!is_unimodular(m)) {
    throw std::invalid_argument("radon_momentum: matrix not unimodular");
  }
  // Line a p' - c x' = p, parameterized by v = a x' + c p':
  //   x' = (a v - c p) / (a^2 + c^2),  p' = (a p + c v) / (a^2 + c^2).
  const double norm2 = m.a * m.a + m.c * m.c;
  const double vmax = (std::abs(m.a) + std::abs(m.c)) * w.grid.extent;
  TomogramCurve curve;
  curve.matrix = m;
  curve.mode = TomogramMode::momentum;
  curve.abscissas = ps;
  curve.values = radon_core(w, ps, -m.c, m.a, m.a, m.c, norm2, vmax,
                            "radon_momentum");
  return curve;
}

TomogramCurve tomogram_via_fresnel(const GridWavefunction& psi,
                                   const RayMatrix& m, TomogramMode mode) {
  check_wavefunction(psi, "tomogram_via_fresnel");
  GridWavefunction g = apply_fresnel_adjoint(m, psi);
  if (mode == TomogramMode::momentum) {
    g = momentum_wavefunction(g);
  }
  TomogramCurve curve;
  curve.matrix = m;
  curve.mode = mode;
  curve.abscissas = psi.grid.axis();
  curve.values = g.samples.cwiseAbs2();
  return curve;
}

double central_identity_check(const GridWavefunction& psi, const RayMatrix& m,
                              TomogramMode mode) {
  const WignerGrid w = wigner(psi);
  const TomogramCurve direct = tomogram_via_fresnel(psi, m, mode);
  const TomogramCurve projected = mode == TomogramMode::position
                                      ? radon_position(w, m)
                                      : radon_momentum(w, m);
  return (direct.values - projected.values).cwiseAbs().maxCoeff();
}

double weyl_expectation(const WignerGrid& w,
                        const std::function<double(double, double)>& h) {
  check_wigner(w, "weyl_expectation");
  const Eigen::VectorXd xs = w.grid.axis();
  const Eigen::VectorXd wt = trapezoid_weights(w.grid);
  double acc = 0.0;
  for (Eigen::Index j = 0; j < xs.size(); ++j) {
    double inner = 0.0;
    for (Eigen::Index k = 0; k < xs.size(); ++k) {
      inner += wt(k) * h(xs(j), xs(k)) * w.values(j, k);
    }
    acc += wt(j) * inner;
  }
  return acc;
}

WignerGrid inverse_radon_fbp(const std::vector<TomogramCurve>& curves) {
  const int m = static_cast<int>(curves.size());
  if (m < 8) {
    throw std::invalid_argument(
        "inverse_radon_fbp: need at least 8 projection angles, got " +
        std::to_string(m));
  }
  if (m < 32) {
    emit_warning("inverse_radon_fbp: fewer than 32 angles; expect visible "
                 "reconstruction bias");
  }
  const Eigen::Index n = curves.front().abscissas.size();
  if (n < 8) {
    throw std::invalid_argument("inverse_radon_fbp: abscissa grid too small");
  }
  const double extent = -curves.front().abscissas(0);
  GridSpec grid{extent, static_cast<int>(n)};
  validate(grid);
  const Eigen::VectorXd axis = grid.axis();
  if ((curves.front().abscissas - axis).cwiseAbs().maxCoeff() >
      1e-9 * extent) {
    throw std::invalid_argument(
        "inverse_radon_fbp: abscissas are not a uniform symmetric grid");
  }
  bool uniform = true;
  for (int i = 0; i < m; ++i) {
    const TomogramCurve& c = curves[i];
    if (c.mode != TomogramMode::position) {
      throw std::invalid_argument(
          "inverse_radon_fbp: all curves must be position tomograms");
    }
    if (c.abscissas.size() != n ||
        (c.abscissas - axis).cwiseAbs().maxCoeff() > 1e-9 * extent) {
      throw std::invalid_argument(
          "inverse_radon_fbp: curves disagree on the abscissa grid");
    }
    const RayMatrix expect = rotation(kPi * i / m);
    const double dev =
        std::max({std::abs(c.matrix.a - expect.a), std::abs(c.matrix.b - expect.b),
                  std::abs(c.matrix.c - expect.c),
                  std::abs(c.matrix.d - expect.d)});
    if (dev > 1e-9) uniform = false;
  }
  if (!uniform) {
    emit_warning(
        "inverse_radon_fbp: matrix tags deviate from uniform rotations "
        "theta_i = i pi / m; treating curves as if uniformly spaced");
  }

  const double dx = grid.step();
  const int npad = 2 * static_cast<int>(n);
  const double nuc = kPi / dx;

  // Ramp filter with Hann apodization on the zero-padded spectrum.
  Eigen::VectorXd filt(npad);
  for (int k = 0; k < npad; ++k) {
    const int kk = k < npad / 2 ? k : k - npad;
    const double nu = 2.0 * kPi * kk / (npad * dx);
    filt(k) = std::abs(nu) <= nuc
                  ? std::abs(nu) * 0.5 * (1.0 + std::cos(kPi * nu / nuc))
                  : 0.0;
  }

  std::vector<Eigen::VectorXd> q(m);
  for (int i = 0; i < m; ++i) {
    Eigen::VectorXcd padded = Eigen::VectorXcd::Zero(npad);
    padded.head(n) = curves[i].values.cast<complexd>();
    Eigen::VectorXcd spec = detail::fft(padded);
    spec.array() *= filt.array().cast<complexd>();
    q[i] = detail::ifft(spec).head(n).real();
  }

  WignerGrid out;
  out.grid = grid;
  out.values = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < m; ++i) {
    const double ct = std::cos(kPi * i / m);
    const double st = std::sin(kPi * i / m);
    for (Eigen::Index j = 0; j < n; ++j) {
      for (Eigen::Index k = 0; k < n; ++k) {
        const double u = axis(j) * ct - axis(k) * st;
        const double t = (u + extent) / dx;
        if (t < 0.0 || t > double(n - 1)) continue;
        const Eigen::Index i0 =
            std::min<Eigen::Index>(static_cast<Eigen::Index>(t), n - 2);
        const double fr = t - double(i0);
        out.values(j, k) += q[i](i0) * (1.0 - fr) + q[i](i0 + 1) * fr;
      }
    }
  }
  out.values /= 2.0 * m;
  return out;
}

}  // namespace fresneltomo
