// Copyright 2026 The fresneltomo Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef FRESNELTOMO_IO_HPP
#define FRESNELTOMO_IO_HPP

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "fresneltomo/fockspace.hpp"
#include "fresneltomo/grid.hpp"
#include "fresneltomo/phasespace.hpp"
#include "fresneltomo/states.hpp"
#include "fresneltomo/symplectic.hpp"

namespace fresneltomo {

// All CSV output uses max_digits10 ("%.17g") so values round-trip exactly.
// Readers throw std::runtime_error on malformed input.

// Wavefunction CSV: "x,re,im" header then one row per sample. The grid is
// recovered from the x column (validated uniform and symmetric).
void write_wavefunction_csv(std::ostream& out, const GridWavefunction& psi);
GridWavefunction read_wavefunction_csv(std::istream& in);

// Wigner CSV: "x,p,w" rows in row-major x-then-p order.
void write_wigner_csv(std::ostream& out, const WignerGrid& w);

// Wigner binary: row-major float64 values; the sidecar JSON {"L":..,"n":..}
// is written next to the file (path + ".json").
void write_wigner_binary(const std::filesystem::path& path,
                         const WignerGrid& w);

// Tomogram CSV: first line "# A=.. B=.. C=.. D=.. mode=position|momentum",
// then "x,value" rows.
void write_tomogram_csv(std::ostream& out, const TomogramCurve& curve);
TomogramCurve read_tomogram_csv(std::istream& in);

// Sinogram bundle: directory with manifest.json {"angles": m, "grid":
// {"L":..,"n":..}, "files": [...]} plus one tomogram CSV per angle.
void write_sinogram(const std::filesystem::path& directory,
                    const std::vector<TomogramCurve>& curves);
std::vector<TomogramCurve> read_sinogram(
    const std::filesystem::path& directory);

// JSON forms. RayMatrix: [A, B, C, D]. SRPair: [[Re s, Im s], [Re r, Im r]].
// FockVector: {"dim": N, "data": [[re, im], ...]}. GridSpec: {"L":..,
// "n":..}. StateSpec: {"kind": "coherent", "alpha": [re, im]} etc.
nlohmann::json to_json(const RayMatrix& m);
nlohmann::json to_json(const SRPair& p);
nlohmann::json to_json(const FockVector& v);
nlohmann::json to_json(const GridSpec& grid);
nlohmann::json to_json(const StateSpec& spec);

RayMatrix ray_matrix_from_json(const nlohmann::json& j);
SRPair sr_pair_from_json(const nlohmann::json& j);
FockVector fock_vector_from_json(const nlohmann::json& j);
GridSpec grid_spec_from_json(const nlohmann::json& j);
StateSpec state_spec_from_json(const nlohmann::json& j);

// Wavefunction JSON: {"grid": {"L":..,"n":..}, "samples": [[re, im], ...]}.
nlohmann::json wavefunction_to_json(const GridWavefunction& psi);
GridWavefunction wavefunction_from_json(const nlohmann::json& j);

}  // namespace fresneltomo

#endif  // FRESNELTOMO_IO_HPP
