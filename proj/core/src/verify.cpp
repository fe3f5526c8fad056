// Copyright 2026 The fresneltomo Authors
// SPDX-License-Identifier: Apache-2.0

#include "fresneltomo/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <vector>

#include "fresneltomo/detail/numerics.hpp"
#include "fresneltomo/fockspace.hpp"
#include "fresneltomo/gridtransform.hpp"
#include "fresneltomo/phasespace.hpp"
#include "fresneltomo/states.hpp"
#include "fresneltomo/symplectic.hpp"

namespace fresneltomo {

namespace {

constexpr double kPi = 3.14159265358979323846;

// The standard six-state suite: Gaussian, displaced, low and moderate Fock,
// squeezed, and an interference-fringed superposition.
const std::array<const char*, 6> kSuite = {
    "vacuum", "coherent:1", "fock:1", "fock:3", "squeezed:0.5", "cat:2"};

struct StateData {
  StateSpec spec;
  GridWavefunction psi;
  WignerGrid w;
};

int pick_dim(const VerifyOptions& options, int preferred) {
  return options.fock_dim > 0 ? options.fock_dim : preferred;
}

// Max-abs elementwise difference after aligning an overall sign: the two
// constructions may legitimately differ by the metaplectic +-1.
double sign_aligned_dev(const Eigen::MatrixXcd& lhs,
                        const Eigen::MatrixXcd& rhs) {
  const double plus = (lhs - rhs).cwiseAbs().maxCoeff();
  const double minus = (lhs + rhs).cwiseAbs().maxCoeff();
  return std::min(plus, minus);
}

double sign_aligned_dev(const Eigen::VectorXcd& lhs,
                        const Eigen::VectorXcd& rhs) {
  const double plus = (lhs - rhs).cwiseAbs().maxCoeff();
  const double minus = (lhs + rhs).cwiseAbs().maxCoeff();
  return std::min(plus, minus);
}

SRPair random_sr(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  const double rr = 0.8 * u01(rng);
  const double phase_r = 2.0 * kPi * u01(rng);
  const double phase_s = 2.0 * kPi * u01(rng);
  SRPair p;
  p.s = std::polar(std::sqrt(1.0 + rr * rr), phase_s);
  p.r = std::polar(rr, phase_r);
  return p;
}

CheckResult make_result(std::string name, double value, double tolerance) {
  CheckResult result;
  result.name = std::move(name);
  result.value = value;
  result.tolerance = tolerance;
  result.pass = value <= tolerance;
  return result;
}

}  // namespace

bool VerifyReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.pass; });
}

VerifyReport run_verification(const VerifyOptions& options) {
  validate(options.grid);
  VerifyReport report;
  const GridSpec grid = options.grid;
  const Eigen::VectorXd xs = grid.axis();
  const Eigen::VectorXd wt = trapezoid_weights(grid);

  std::vector<StateData> suite;
  suite.reserve(kSuite.size());
  for (const char* text : kSuite) {
    StateData data;
    data.spec = parse_state_spec(text);
    data.psi = make_state_grid(data.spec, grid);
    data.w = wigner(data.psi);
    suite.push_back(std::move(data));
  }

  // Checks 1 and 2: the wavefunction route and the Wigner projection route
  // must produce the same quadrature distribution for generic matrices.
  {
    std::mt19937_64 rng(options.seed);
    std::vector<RayMatrix> mats;
    for (int i = 0; i < 20; ++i) {
      mats.push_back(random_unimodular(rng, 0.05));
    }
    double worst_pos = 0.0;
    double worst_mom = 0.0;
    for (const StateData& data : suite) {
      for (const RayMatrix& m : mats) {
        const GridWavefunction g = apply_fresnel_adjoint(m, data.psi);
        const Eigen::VectorXd pos = g.samples.cwiseAbs2();
        const Eigen::VectorXd mom =
            momentum_wavefunction(g).samples.cwiseAbs2();
        worst_pos = std::max(
            worst_pos,
            (pos - radon_position(data.w, m).values).cwiseAbs().maxCoeff());
        worst_mom = std::max(
            worst_mom,
            (mom - radon_momentum(data.w, m).values).cwiseAbs().maxCoeff());
      }
    }
    report.checks.push_back(
        make_result("central_identity_position", worst_pos, 1e-4));
    report.checks.push_back(
        make_result("central_identity_momentum", worst_mom, 1e-4));
  }

  // Check 3: vacuum tomograms are Gaussian with variance (d^2 + b^2)/2.
  {
    std::mt19937_64 rng(options.seed + 1);
    const GridWavefunction vac =
        make_state_grid(parse_state_spec("vacuum"), grid);
    double worst = 0.0;
    for (int i = 0; i < 10; ++i) {
      const RayMatrix m = random_unimodular(rng, 0.05);
      const Eigen::VectorXd t =
          apply_fresnel_adjoint(m, vac).samples.cwiseAbs2();
      const double norm = wt.dot(t);
      const double mean = wt.dot((t.array() * xs.array()).matrix()) / norm;
      const double var =
          wt.dot((t.array() * (xs.array() - mean).square()).matrix()) / norm;
      worst = std::max(worst, std::abs(var - 0.5 * (m.d * m.d + m.b * m.b)));
    }
    report.checks.push_back(make_result("vacuum_variance", worst, 1e-6));
  }

  // Check 4: Fock-operator action synthesized onto the grid agrees with the
  // direct grid transform.
  {
    const int dim = pick_dim(options, 64);
    std::mt19937_64 rng(options.seed + 2);
    double worst = 0.0;
    for (int i = 0; i < 5; ++i) {
      const RayMatrix m = random_unimodular(rng, 0.05);
      const FockOperator op = fresnel_operator(abcd_to_sr(m), dim);
      for (int si = 0; si < 5; ++si) {
        const StateData& data = suite[si];
        const FockVector c = make_state_fock(data.spec, dim);
        const GridWavefunction via_op = fock_to_grid(op * c, grid);
        const GridWavefunction via_grid = fresnel_transform(m, data.psi);
        worst = std::max(
            worst, sign_aligned_dev(via_op.samples, via_grid.samples));
      }
    }
    report.checks.push_back(
        make_result("kernel_operator_consistency", worst, 1e-5));
  }

  // Check 5: chart composition matches operator composition on the leading
  // block (truncation noise shrinks as the dimension grows).
  {
    const int dim = pick_dim(options, 256);
    const int block = std::min(32, dim / 2);
    std::mt19937_64 rng(options.seed + 3);
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
      const SRPair p1 = random_sr(rng);
      const SRPair p2 = random_sr(rng);
      const FockOperator product =
          fresnel_operator(p1, dim) * fresnel_operator(p2, dim);
      const FockOperator composite =
          fresnel_operator(sr_compose(p1, p2), dim);
      worst = std::max(
          worst,
          sign_aligned_dev(
              Eigen::MatrixXcd(product.topLeftCorner(block, block)),
              Eigen::MatrixXcd(composite.topLeftCorner(block, block))));
    }
    report.checks.push_back(make_result("group_law", worst, 1e-8));
  }

  // Check 6: the coherent-state quadrature construction reproduces the
  // closed-form operator.
  {
    const int dim = options.fock_dim > 0 ? std::min(options.fock_dim, 16) : 8;
    std::vector<SRPair> params;
    params.push_back(SRPair{});                                   // identity
    params.push_back(SRPair{std::polar(1.0, -kPi / 4), 0.0});     // rotation
    params.push_back(SRPair{std::cosh(0.3), -std::sinh(0.3)});    // squeeze
    params.push_back(
        SRPair{std::polar(std::sqrt(1.09), 0.4), std::polar(0.3, 0.7)});
    params.push_back(
        SRPair{std::polar(std::sqrt(1.0625), 5.0), std::polar(0.25, 2.1)});
    double worst = 0.0;
    for (const SRPair& p : params) {
      const FockOperator direct = fresnel_operator(p, dim);
      const FockOperator quad = fresnel_operator_integral(p, dim);
      worst = std::max(worst, (direct - quad).cwiseAbs().maxCoeff());
    }
    report.checks.push_back(make_result("integral_oracle", worst, 1e-6));
  }

  // Check 7: tomographic eigenstates satisfy their defining eigen-relations.
  {
    const int dim = pick_dim(options, 128);
    const std::array<RayMatrix, 5> mats = {identity_matrix(),
                                           free_propagation(1.0), lens(0.5),
                                           rotation(1.1), scaling(1.2)};
    const std::array<double, 5> values = {-2.0, -1.0, 0.0, 0.5, 2.0};
    double worst = 0.0;
    for (const RayMatrix& m : mats) {
      for (double v : values) {
        worst = std::max(worst, eigen_residual_position(
                                    m, v, tomo_eigenstate(m, v, dim)));
        worst = std::max(worst, eigen_residual_momentum(
                                    m, v, momentum_eigenstate(m, v, dim)));
      }
    }
    report.checks.push_back(make_result("eigen_residual", worst, 1e-6));
  }

  // Check 8: the eigenstates resolve the identity. free(1) widens the
  // eigenfunctions by sqrt(d^2 + b^2), so its quadrature runs on an enlarged
  // grid.
  {
    const int dim = pick_dim(options, 64);
    double worst = std::max(
        completeness_defect(identity_matrix(), dim, grid),
        completeness_defect(rotation(kPi / 3), dim, grid));
    GridSpec wide;
    wide.extent = 1.6 * grid.extent;
    wide.samples = 2 * grid.samples;
    worst = std::max(worst,
                     completeness_defect(free_propagation(1.0), dim, wide));
    report.checks.push_back(make_result("completeness", worst, 1e-5));
  }

  // Check 9: for pure rotations the projection equals the homodyne
  // distribution obtained by fractional-Fourier phase rotation in Fock space.
  {
    const int dim = pick_dim(options, 96);
    const std::array<double, 3> thetas = {0.0, kPi / 6, kPi / 2};
    const std::array<int, 4> picks = {0, 1, 3, 5};  // vacuum..cat:2
    double worst = 0.0;
    for (int si : picks) {
      const StateData& data = suite[si];
      const FockVector c = grid_to_fock(data.psi, dim);
      for (double theta : thetas) {
        FockVector rotated(dim);
        for (int n = 0; n < dim; ++n) {
          rotated(n) = c(n) * std::polar(1.0, theta * n);
        }
        const Eigen::VectorXd homodyne =
            fock_to_grid(rotated, grid).samples.cwiseAbs2();
        const Eigen::VectorXd projected =
            radon_position(data.w, rotation(theta)).values;
        worst =
            std::max(worst, (homodyne - projected).cwiseAbs().maxCoeff());
      }
    }
    report.checks.push_back(make_result("rotation_reduction", worst, 1e-5));
  }

  // Check 10: filtered back-projection from 180 rotation tomograms restores
  // the Wigner function. The central-value assertion for fock:1 is folded in
  // at double weight so a single tolerance covers both.
  {
    const int angles = 180;
    double worst = 0.0;
    for (const char* text : {"vacuum", "coherent:1", "fock:1"}) {
      const StateSpec spec = parse_state_spec(text);
      const GridWavefunction psi = make_state_grid(spec, grid);
      std::vector<TomogramCurve> curves;
      curves.reserve(angles);
      for (int i = 0; i < angles; ++i) {
        curves.push_back(tomogram_via_fresnel(psi, rotation(kPi * i / angles),
                                              TomogramMode::position));
      }
      const WignerGrid rec = inverse_radon_fbp(curves);
      const WignerGrid exact = analytic_wigner(spec, grid);
      worst = std::max(
          worst, (rec.values - exact.values).cwiseAbs().maxCoeff());
      if (spec.kind == StateSpec::Kind::fock && spec.number == 1) {
        const double center =
            detail::bicubic_at(rec.values, grid.extent, grid.step(), 0.0, 0.0);
        worst = std::max(worst, 2.0 * std::abs(center + 1.0 / kPi));
      }
    }
    report.checks.push_back(make_result("fbp_round_trip", worst, 1e-2));
  }

  // Check 11: normalization, both marginals, and harmonic-oscillator energy
  // moments of the Wigner representation.
  {
    double worst = 0.0;
    for (const StateData& data : suite) {
      const double norm = wt.dot(data.w.values * wt);
      worst = std::max(worst, std::abs(norm - 1.0));
      const Eigen::VectorXd x_marginal = data.w.values * wt;
      worst = std::max(worst, (x_marginal - data.psi.samples.cwiseAbs2())
                                  .cwiseAbs()
                                  .maxCoeff());
      const Eigen::VectorXd p_marginal = data.w.values.transpose() * wt;
      const Eigen::VectorXd mom =
          momentum_wavefunction(data.psi).samples.cwiseAbs2();
      worst = std::max(worst, (p_marginal - mom).cwiseAbs().maxCoeff());
    }
    for (int n = 0; n <= 5; ++n) {
      StateSpec spec;
      spec.kind = StateSpec::Kind::fock;
      spec.number = n;
      const WignerGrid w = wigner(make_state_grid(spec, grid));
      const double energy = weyl_expectation(
          w, [](double x, double p) { return 0.5 * (x * x + p * p); });
      worst = std::max(worst, std::abs(energy - (n + 0.5)));
    }
    report.checks.push_back(make_result("wigner_sanity", worst, 1e-6));
  }

  return report;
}

}  // namespace fresneltomo
