// Copyright 2026 The fresneltomo Authors
// SPDX-License-Identifier: Apache-2.0

#include "fresneltomo/fockspace.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>

#include "fresneltomo/detail/numerics.hpp"

namespace fresneltomo {

namespace {

constexpr double kPi = 3.14159265358979323846;
const double kQuarticRootPi = std::pow(kPi, -0.25);

void require_dim(int dim, const char* where) {
  if (dim < 2) {
    throw std::invalid_argument(std::string(where) +
                                ": dimension must be >= 2, got " +
                                std::to_string(dim));
  }
}

// Shared three-term recursion behind both eigenstate families:
// coefficients of exp(alpha adag + beta adag^2/2)|0> times pref.
FockVector gaussian_fock_vector(complexd pref, complexd alpha, complexd beta,
                                int dim) {
  FockVector c(dim);
  c(0) = 1.0;
  if (dim > 1) c(1) = alpha;
  for (int n = 1; n + 1 < dim; ++n) {
    c(n + 1) =
        (alpha * c(n) + beta * std::sqrt(double(n)) * c(n - 1)) /
        std::sqrt(double(n + 1));
  }
  return pref * c;
}

FockVector tomo_eigenstate_impl(const RayMatrix& m, double x, int dim) {
  const complexd dib(m.d, m.b);
  const complexd pref = kQuarticRootPi / std::sqrt(dib) *
                        std::exp(-0.5 * complexd(m.a, -m.c) / dib * x * x);
  const complexd alpha = std::sqrt(2.0) * x / dib;
  const complexd beta = -complexd(m.d, -m.b) / dib;
  return gaussian_fock_vector(pref, alpha, beta, dim);
}

}  // namespace

std::pair<FockOperator, FockOperator> ladder(int dim) {
  require_dim(dim, "ladder");
  FockOperator a = FockOperator::Zero(dim, dim);
  for (int n = 1; n < dim; ++n) {
    a(n - 1, n) = std::sqrt(double(n));
  }
  return {a, a.adjoint()};
}

std::pair<FockOperator, FockOperator> quadratures(int dim) {
  auto [a, adag] = ladder(dim);
  FockOperator x = (a + adag) / std::sqrt(2.0);
  FockOperator p = complexd(0.0, 1.0) * (adag - a) / std::sqrt(2.0);
  return {std::move(x), std::move(p)};
}

FockOperator fresnel_operator(const SRPair& p, int dim) {
  require_dim(dim, "fresnel_operator");
  if (!is_valid(p)) {
    throw std::invalid_argument("fresnel_operator: invalid (s, r) pair");
  }
  const complexd sc = std::conj(p.s);
  const complexd alpha = -p.r / (2.0 * sc);
  const complexd beta = std::conj(p.r) / (2.0 * sc);
  const complexd lambda = 1.0 / sc;

  FockOperator ep = FockOperator::Identity(dim, dim);
  for (int k = 0; k < dim; ++k) {
    complexd val = 1.0;
    int m = 0;
    for (int j = k + 2; j < dim; j += 2) {
      ++m;
      val *= alpha * std::sqrt(double(j) * double(j - 1)) / double(m);
      ep(j, k) = val;
    }
  }
  FockOperator em = FockOperator::Identity(dim, dim);
  for (int j = 0; j < dim; ++j) {
    complexd val = 1.0;
    int m = 0;
    for (int k = j + 2; k < dim; k += 2) {
      ++m;
      val *= beta * std::sqrt(double(k) * double(k - 1)) / double(m);
      em(j, k) = val;
    }
  }
  Eigen::VectorXcd diag(dim);
  complexd pw = 1.0;
  for (int n = 0; n < dim; ++n) {
    diag(n) = pw;
    pw *= lambda;
  }
  return (ep * diag.asDiagonal()) * em / std::sqrt(sc);
}

FockOperator fresnel_operator_integral(const SRPair& p, int dim,
                                       const QuadratureSpec& quad) {
  require_dim(dim, "fresnel_operator_integral");
  if (!is_valid(p)) {
    throw std::invalid_argument(
        "fresnel_operator_integral: invalid (s, r) pair");
  }
  if (quad.radius <= 0.0 || quad.radial_nodes < 2 || quad.angular_nodes < 4) {
    throw std::invalid_argument("fresnel_operator_integral: bad quadrature");
  }
  auto [rho, wr] = detail::gauss_legendre(quad.radial_nodes, 0.0, quad.radius);
  const int nphi = quad.angular_nodes;
  const double wphi = 2.0 * kPi / nphi;

  Eigen::VectorXd roots(dim);  // sqrt(n!)
  roots(0) = 1.0;
  for (int n = 1; n < dim; ++n) {
    roots(n) = roots(n - 1) * std::sqrt(double(n));
  }

  FockOperator f = FockOperator::Zero(dim, dim);
  Eigen::MatrixXcd colm(dim, nphi), coln(dim, nphi);
  for (int ir = 0; ir < quad.radial_nodes; ++ir) {
    const double rh = rho(ir);
    for (int iq = 0; iq < nphi; ++iq) {
      const complexd z = std::polar(rh, wphi * iq);
      const complexd w = p.s * z - p.r * std::conj(z);
      const double em = std::exp(-0.5 * std::norm(w));
      const double en = std::exp(-0.5 * std::norm(z));
      complexd wp = 1.0, zp = 1.0;
      const complexd zc = std::conj(z);
      for (int n = 0; n < dim; ++n) {
        colm(n, iq) = wp * em / roots(n);
        coln(n, iq) = zp * en / roots(n);
        wp *= w;
        zp *= zc;
      }
    }
    f.noalias() += (wr(ir) * rh * wphi) * (colm * coln.transpose());
  }
  f *= std::sqrt(p.s) / kPi;

  const complexd expected = 1.0 / std::sqrt(std::conj(p.s));
  const double defect = std::abs(f(0, 0) - expected);
  if (defect > quad.tolerance) {
    std::ostringstream msg;
    msg << "fresnel_operator_integral: quadrature self-check defect " << defect
        << " exceeds tolerance " << quad.tolerance
        << " (vacuum element vs closed form); enlarge radius or node counts";
    throw std::invalid_argument(msg.str());
  }
  return f;
}

complexd coherent_matrix_element(const SRPair& p, complexd z, complexd zp) {
  if (!is_valid(p)) {
    throw std::invalid_argument("coherent_matrix_element: invalid (s, r) pair");
  }
  const complexd sc = std::conj(p.s);
  const complexd zc = std::conj(z);
  const complexd expo = -0.5 * std::norm(z) - 0.5 * std::norm(zp) -
                        (p.r / (2.0 * sc)) * zc * zc +
                        (std::conj(p.r) / (2.0 * sc)) * zp * zp + zc * zp / sc;
  return std::exp(expo) / std::sqrt(sc);
}

FockVector coherent_vector(complexd z, int dim) {
  require_dim(dim, "coherent_vector");
  FockVector v(dim);
  v(0) = std::exp(-0.5 * std::norm(z));
  for (int n = 1; n < dim; ++n) {
    v(n) = v(n - 1) * z / std::sqrt(double(n));
  }
  return v;
}

FockVector tomo_eigenstate(const RayMatrix& m, double x, int dim) {
  require_dim(dim, "tomo_eigenstate");
  if (!is_unimodular(m)) {
    throw std::invalid_argument("tomo_eigenstate: matrix not unimodular");
  }
  if (std::abs(x) > trust_radius(dim)) {
    std::ostringstream msg;
    msg << "tomo_eigenstate: |x| = " << std::abs(x)
        << " exceeds the trust radius " << trust_radius(dim)
        << " of dimension " << dim;
    emit_warning(msg.str());
  }
  return tomo_eigenstate_impl(m, x, dim);
}

FockVector momentum_eigenstate(const RayMatrix& m, double p, int dim) {
  require_dim(dim, "momentum_eigenstate");
  if (!is_unimodular(m)) {
    throw std::invalid_argument("momentum_eigenstate: matrix not unimodular");
  }
  if (std::abs(p) > trust_radius(dim)) {
    std::ostringstream msg;
    msg << "momentum_eigenstate: |p| = " << std::abs(p)
        << " exceeds the trust radius " << trust_radius(dim)
        << " of dimension " << dim;
    emit_warning(msg.str());
  }
  const complexd aic(m.a, -m.c);
  const complexd pref = kQuarticRootPi / std::sqrt(aic) *
                        std::exp(-0.5 * complexd(m.d, m.b) / aic * p * p);
  const complexd alpha = std::sqrt(2.0) * complexd(0.0, p) / aic;
  const complexd beta = complexd(m.a, m.c) / aic;
  return gaussian_fock_vector(pref, alpha, beta, dim);
}

namespace {

double residual_head(const FockOperator& op, double value,
                     const FockVector& v) {
  const Eigen::Index dim = v.size();
  const FockVector w = op * v - value * v;
  return w.head(dim - 1).cwiseAbs().maxCoeff();
}

}  // namespace

double eigen_residual_position(const RayMatrix& m, double x,
                               const FockVector& v) {
  require_dim(static_cast<int>(v.size()), "eigen_residual_position");
  auto [xq, pq] = quadratures(static_cast<int>(v.size()));
  return residual_head(m.d * xq - m.b * pq, x, v);
}

double eigen_residual_momentum(const RayMatrix& m, double p,
                               const FockVector& v) {
  require_dim(static_cast<int>(v.size()), "eigen_residual_momentum");
  auto [xq, pq] = quadratures(static_cast<int>(v.size()));
  return residual_head(m.a * pq - m.c * xq, p, v);
}

double trust_radius(int dim) { return 0.7 * std::sqrt(2.0 * dim); }

Eigen::MatrixXd hermite_functions(const Eigen::VectorXd& points, int count) {
  if (count < 1) {
    throw std::invalid_argument("hermite_functions: count must be >= 1");
  }
  const Eigen::Index len = points.size();
  Eigen::MatrixXd h(len, count);
  h.col(0) = kQuarticRootPi * (-0.5 * points.array().square()).exp();
  if (count > 1) {
    h.col(1) = std::sqrt(2.0) * points.array() * h.col(0).array();
  }
  for (int n = 1; n + 1 < count; ++n) {
    h.col(n + 1) = std::sqrt(2.0 / (n + 1)) * points.array() * h.col(n).array() -
                   std::sqrt(double(n) / (n + 1)) * h.col(n - 1).array();
  }
  return h;
}

GridWavefunction fock_to_grid(const FockVector& v, const GridSpec& grid) {
  validate(grid);
  const int dim = static_cast<int>(v.size());
  require_dim(dim, "fock_to_grid");
  if (grid.extent < trust_radius(dim)) {
    std::ostringstream msg;
    msg << "fock_to_grid: grid extent " << grid.extent
        << " is below the trust radius " << trust_radius(dim)
        << " of dimension " << dim;
    emit_warning(msg.str());
  }
  const Eigen::MatrixXd h = hermite_functions(grid.axis(), dim);
  GridWavefunction psi;
  psi.grid = grid;
  psi.samples = h.cast<complexd>() * v;
  return psi;
}

FockVector grid_to_fock(const GridWavefunction& psi, int dim) {
  require_dim(dim, "grid_to_fock");
  validate(psi.grid);
  const Eigen::MatrixXd h = hermite_functions(psi.grid.axis(), dim);
  const Eigen::VectorXd w = trapezoid_weights(psi.grid);
  const Eigen::VectorXcd weighted =
      (w.array().cast<complexd>() * psi.samples.array()).matrix();
  return h.transpose().cast<complexd>() * weighted;
}

double completeness_defect(const RayMatrix& m, int dim, const GridSpec& grid) {
  require_dim(dim, "completeness_defect");
  if (!is_unimodular(m)) {
    throw std::invalid_argument("completeness_defect: matrix not unimodular");
  }
  validate(grid);
  const Eigen::VectorXd xs = grid.axis();
  const Eigen::VectorXd w = trapezoid_weights(grid);
  FockOperator g = FockOperator::Zero(dim, dim);
  for (Eigen::Index j = 0; j < xs.size(); ++j) {
    const FockVector v = tomo_eigenstate_impl(m, xs(j), dim);
    g.noalias() += w(j) * (v * v.adjoint());
  }
  const int block = dim / 2;
  return (g.topLeftCorner(block, block) -
          FockOperator::Identity(block, block))
      .cwiseAbs()
      .maxCoeff();
}

}  // namespace fresneltomo
