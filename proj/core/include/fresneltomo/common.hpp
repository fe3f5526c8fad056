// Copyright 2026 The fresneltomo Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef FRESNELTOMO_COMMON_HPP
#define FRESNELTOMO_COMMON_HPP

#include <complex>
#include <functional>
#include <string_view>

namespace fresneltomo {

using complexd = std::complex<double>;

// Units: dimensionless quadratures with [X, P] = i, vacuum variance 1/2.
// All grids, transforms, and phase-space objects use this convention.

// Non-fatal diagnostics (edge mass leaving a grid, quadrature trust-region
// violations, ...) are reported through a process-wide handler. The default
// handler writes one line to stderr. Passing an empty function restores the
// default. Not thread-safe with respect to concurrent set calls.
using WarningHandler = std::function<void(std::string_view)>;
void set_warning_handler(WarningHandler handler);
void emit_warning(std::string_view message);

}  // namespace fresneltomo

#endif  // FRESNELTOMO_COMMON_HPP
