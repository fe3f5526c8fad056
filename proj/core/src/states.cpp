// Copyright 2026 The fresneltomo Authors
// SPDX-License-Identifier: Apache-2.0

#include "fresneltomo/states.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace fresneltomo {

namespace {

constexpr double kPi = 3.14159265358979323846;
const double kQuarticRootPi = std::pow(kPi, -0.25);

double parse_number(std::string_view text, const char* what) {
  try {
    size_t used = 0;
    const std::string owned(text);
    const double value = std::stod(owned, &used);
    if (used != owned.size()) throw std::invalid_argument("trailing text");
    return value;
  } catch (const std::exception&) {
    throw std::invalid_argument("parse_state_spec: bad " + std::string(what) +
                                " in '" + std::string(text) + "'");
  }
}

complexd parse_complex(std::string_view text) {
  const size_t comma = text.find(',');
  if (comma == std::string_view::npos) {
    return complexd(parse_number(text, "parameter"), 0.0);
  }
  return complexd(parse_number(text.substr(0, comma), "real part"),
                  parse_number(text.substr(comma + 1), "imaginary part"));
}

void validate_spec(const StateSpec& spec) {
  switch (spec.kind) {
    case StateSpec::Kind::vacuum:
      break;
    case StateSpec::Kind::fock:
      if (spec.number < 0 || spec.number > 56) {
        throw std::invalid_argument(
            "StateSpec: fock number must be in [0, 56], got " +
            std::to_string(spec.number));
      }
      break;
    case StateSpec::Kind::coherent:
    case StateSpec::Kind::cat:
      if (std::abs(spec.alpha) > 4.0) {
        throw std::invalid_argument(
            "StateSpec: |alpha| must be <= 4 to stay inside the default "
            "grid and truncations");
      }
      break;
    case StateSpec::Kind::squeezed:
      if (std::abs(spec.lambda) > 1.5) {
        throw std::invalid_argument(
            "StateSpec: |lambda| must be <= 1.5 to stay inside the default "
            "grid and truncations");
      }
      break;
  }
}

Eigen::VectorXcd coherent_samples(const Eigen::VectorXd& xs, complexd alpha) {
  Eigen::VectorXcd psi(xs.size());
  for (Eigen::Index j = 0; j < xs.size(); ++j) {
    const double x = xs(j);
    const complexd expo = -0.5 * x * x + std::sqrt(2.0) * x * alpha -
                          0.5 * alpha * alpha - 0.5 * std::norm(alpha);
    psi(j) = kQuarticRootPi * std::exp(expo);
  }
  return psi;
}

// L_n(y) by the three-term recurrence; returns the n-th Laguerre polynomial
// value.
double laguerre(int n, double y) {
  if (n == 0) return 1.0;
  double lm = 1.0;
  double l = 1.0 - y;
  for (int k = 1; k < n; ++k) {
    const double next = ((2.0 * k + 1.0 - y) * l - k * lm) / (k + 1.0);
    lm = l;
    l = next;
  }
  return l;
}

}  // namespace

StateSpec parse_state_spec(std::string_view text) {
  StateSpec spec;
  const size_t colon = text.find(':');
  const std::string_view kind = text.substr(0, colon);
  const std::string_view arg =
      colon == std::string_view::npos ? std::string_view{}
                                      : text.substr(colon + 1);
  const bool has_arg = colon != std::string_view::npos && !arg.empty();

  if (kind == "vacuum") {
    spec.kind = StateSpec::Kind::vacuum;
    if (has_arg) {
      throw std::invalid_argument("parse_state_spec: vacuum takes no "
                                  "parameter");
    }
  } else if (kind == "fock") {
    spec.kind = StateSpec::Kind::fock;
    if (!has_arg) {
      throw std::invalid_argument("parse_state_spec: fock needs a number, "
                                  "e.g. 'fock:3'");
    }
    const double value = parse_number(arg, "fock number");
    spec.number = static_cast<int>(value);
    if (spec.number != value) {
      throw std::invalid_argument(
          "parse_state_spec: fock number must be an integer");
    }
  } else if (kind == "coherent" || kind == "cat") {
    spec.kind = kind == "coherent" ? StateSpec::Kind::coherent
                                   : StateSpec::Kind::cat;
    if (!has_arg) {
      throw std::invalid_argument(
          "parse_state_spec: " + std::string(kind) +
          " needs an amplitude, e.g. '" + std::string(kind) + ":1.0' or '" +
          std::string(kind) + ":1.0,0.5'");
    }
    spec.alpha = parse_complex(arg);
  } else if (kind == "squeezed") {
    spec.kind = StateSpec::Kind::squeezed;
    if (!has_arg) {
      throw std::invalid_argument(
          "parse_state_spec: squeezed needs a parameter, e.g. "
          "'squeezed:0.5'");
    }
    spec.lambda = parse_number(arg, "squeezing parameter");
  } else {
    throw std::invalid_argument("parse_state_spec: unknown state kind '" +
                                std::string(kind) + "'");
  }
  validate_spec(spec);
  return spec;
}

std::string to_string(const StateSpec& spec) {
  std::ostringstream out;
  switch (spec.kind) {
    case StateSpec::Kind::vacuum:
      out << "vacuum";
      break;
    case StateSpec::Kind::fock:
      out << "fock:" << spec.number;
      break;
    case StateSpec::Kind::coherent:
    case StateSpec::Kind::cat:
      out << (spec.kind == StateSpec::Kind::coherent ? "coherent:" : "cat:");
      out << spec.alpha.real();
      if (spec.alpha.imag() != 0.0) out << ',' << spec.alpha.imag();
      break;
    case StateSpec::Kind::squeezed:
      out << "squeezed:" << spec.lambda;
      break;
  }
  return out.str();
}

GridWavefunction make_state_grid(const StateSpec& spec, const GridSpec& grid) {
  validate(grid);
  validate_spec(spec);
  const Eigen::VectorXd xs = grid.axis();
  GridWavefunction psi;
  psi.grid = grid;
  switch (spec.kind) {
    case StateSpec::Kind::vacuum:
      psi.samples = coherent_samples(xs, complexd(0.0, 0.0));
      break;
    case StateSpec::Kind::fock: {
      const Eigen::MatrixXd h = hermite_functions(xs, spec.number + 1);
      psi.samples = h.col(spec.number).cast<complexd>();
      break;
    }
    case StateSpec::Kind::coherent:
      psi.samples = coherent_samples(xs, spec.alpha);
      break;
    case StateSpec::Kind::squeezed: {
      psi.samples.resize(xs.size());
      const double gain = std::exp(2.0 * spec.lambda);
      for (Eigen::Index j = 0; j < xs.size(); ++j) {
        psi.samples(j) = kQuarticRootPi * std::exp(0.5 * spec.lambda) *
                         std::exp(-0.5 * gain * xs(j) * xs(j));
      }
      break;
    }
    case StateSpec::Kind::cat: {
      const double norm =
          1.0 / std::sqrt(2.0 * (1.0 + std::exp(-2.0 * std::norm(spec.alpha))));
      psi.samples = norm * (coherent_samples(xs, spec.alpha) +
                            coherent_samples(xs, -spec.alpha));
      break;
    }
  }
  return psi;
}

FockVector make_state_fock(const StateSpec& spec, int dim) {
  validate_spec(spec);
  if (dim < 2) {
    throw std::invalid_argument("make_state_fock: dimension must be >= 2");
  }
  FockVector v = FockVector::Zero(dim);
  switch (spec.kind) {
    case StateSpec::Kind::vacuum:
      v(0) = 1.0;
      break;
    case StateSpec::Kind::fock:
      if (spec.number >= dim) {
        throw std::invalid_argument(
            "make_state_fock: fock number must be below the truncation "
            "dimension");
      }
      v(spec.number) = 1.0;
      break;
    case StateSpec::Kind::coherent:
      v = coherent_vector(spec.alpha, dim);
      break;
    case StateSpec::Kind::squeezed: {
      const double th = std::tanh(spec.lambda);
      v(0) = 1.0 / std::sqrt(std::cosh(spec.lambda));
      for (int m = 1; m < dim / 2; ++m) {
        v(2 * m) = v(2 * m - 2) * (-th) *
                   std::sqrt(double(2 * m) * double(2 * m - 1)) /
                   double(2 * m);
      }
      break;
    }
    case StateSpec::Kind::cat: {
      const double norm =
          1.0 / std::sqrt(2.0 * (1.0 + std::exp(-2.0 * std::norm(spec.alpha))));
      v = norm * (coherent_vector(spec.alpha, dim) +
                  coherent_vector(-spec.alpha, dim));
      break;
    }
  }
  return v;
}

WignerGrid analytic_wigner(const StateSpec& spec, const GridSpec& grid) {
  validate(grid);
  validate_spec(spec);
  const Eigen::VectorXd xs = grid.axis();
  WignerGrid w;
  w.grid = grid;
  w.values.resize(xs.size(), xs.size());

  double x0 = 0.0, p0 = 0.0;
  switch (spec.kind) {
    case StateSpec::Kind::coherent:
      x0 = std::sqrt(2.0) * spec.alpha.real();
      p0 = std::sqrt(2.0) * spec.alpha.imag();
      [[fallthrough]];
    case StateSpec::Kind::vacuum:
      for (Eigen::Index j = 0; j < xs.size(); ++j) {
        for (Eigen::Index k = 0; k < xs.size(); ++k) {
          const double dxq = xs(j) - x0;
          const double dpq = xs(k) - p0;
          w.values(j, k) = std::exp(-dxq * dxq - dpq * dpq) / kPi;
        }
      }
      return w;
    case StateSpec::Kind::fock: {
      const int n = spec.number;
      const double sign = n % 2 == 0 ? 1.0 : -1.0;
      for (Eigen::Index j = 0; j < xs.size(); ++j) {
        for (Eigen::Index k = 0; k < xs.size(); ++k) {
          const double r2 = xs(j) * xs(j) + xs(k) * xs(k);
          w.values(j, k) =
              sign / kPi * laguerre(n, 2.0 * r2) * std::exp(-r2);
        }
      }
      return w;
    }
    default:
      throw std::invalid_argument(
          "analytic_wigner: closed form available for vacuum, coherent, and "
          "fock kinds only");
  }
}

}  // namespace fresneltomo
