// Copyright 2026 The fresneltomo Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef FRESNELTOMO_STATES_HPP
#define FRESNELTOMO_STATES_HPP

#include <string>
#include <string_view>

#include "fresneltomo/fockspace.hpp"
#include "fresneltomo/grid.hpp"
#include "fresneltomo/phasespace.hpp"

namespace fresneltomo {

// Canonical test states. Parameter ranges that keep every state inside the
// default grid and Fock truncations: number <= 56, |alpha| <= 4,
// |lambda| <= 1.5.
struct StateSpec {
  enum class Kind { vacuum, fock, coherent, squeezed, cat };

  Kind kind = Kind::vacuum;
  int number = 0;        // fock
  complexd alpha{};      // coherent, cat
  double lambda = 0.0;   // squeezed
};

// Parses "vacuum", "fock:3", "coherent:re[,im]", "squeezed:0.5",
// "cat:re[,im]". Throws std::invalid_argument on malformed text or
// out-of-range parameters.
StateSpec parse_state_spec(std::string_view text);
std::string to_string(const StateSpec& spec);

// Normalized grid wavefunctions.
//   vacuum:    pi^{-1/4} e^{-x^2/2}
//   fock n:    orthonormal Hermite function h_n
//   coherent:  pi^{-1/4} exp(-x^2/2 + sqrt(2) x alpha - alpha^2/2
//              - |alpha|^2/2)
//   squeezed:  pi^{-1/4} e^{lambda/2} exp(-e^{2 lambda} x^2 / 2)
//   cat:       even superposition [2(1 + e^{-2|alpha|^2})]^{-1/2}
//              (coherent(alpha) + coherent(-alpha))
GridWavefunction make_state_grid(const StateSpec& spec, const GridSpec& grid);

// Same states as Fock coefficient vectors; squeezed vacuum uses the even
// closed form c_{2m} = (cosh lambda)^{-1/2} (-tanh lambda)^m
// sqrt((2m)!)/(2^m m!).
FockVector make_state_fock(const StateSpec& spec, int dim);

// Closed-form Wigner oracles; supports vacuum, coherent, and fock kinds and
// throws std::invalid_argument otherwise.
//   vacuum:   (1/pi) e^{-x^2 - p^2}
//   coherent: vacuum Gaussian displaced to (sqrt(2) Re alpha, sqrt(2) Im
//   alpha) fock n:   (1/pi)(-1)^n L_n(2(x^2 + p^2)) e^{-x^2 - p^2}
WignerGrid analytic_wigner(const StateSpec& spec, const GridSpec& grid);

}  // namespace fresneltomo

#endif  // FRESNELTOMO_STATES_HPP
