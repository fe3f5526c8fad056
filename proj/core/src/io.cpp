// Copyright 2026 The fresneltomo Authors
// SPDX-License-Identifier: Apache-2.0

#include "fresneltomo/io.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace fresneltomo {

namespace {

constexpr int kDigits = std::numeric_limits<double>::max_digits10;

std::vector<double> split_csv_row(const std::string& line, size_t expected,
                                  const char* where) {
  std::vector<double> fields;
  std::stringstream row(line);
  std::string cell;
  while (std::getline(row, cell, ',')) {
    try {
      size_t used = 0;
      fields.push_back(std::stod(cell, &used));
      if (used != cell.size()) throw std::invalid_argument("trailing text");
    } catch (const std::exception&) {
      throw std::runtime_error(std::string(where) + ": bad numeric cell '" +
                               cell + "'");
    }
  }
  if (fields.size() != expected) {
    throw std::runtime_error(std::string(where) + ": expected " +
                             std::to_string(expected) + " columns, got " +
                             std::to_string(fields.size()));
  }
  return fields;
}

GridSpec grid_from_axis(const std::vector<double>& xs, const char* where) {
  const int n = static_cast<int>(xs.size());
  if (n < 8) {
    throw std::runtime_error(std::string(where) + ": too few rows");
  }
  GridSpec grid{-xs.front(), n};
  validate(grid);
  const double step = grid.step();
  const double tol = 1e-9 * std::max(1.0, grid.extent);
  for (int j = 0; j < n; ++j) {
    if (std::abs(xs[j] - (-grid.extent + step * j)) > tol) {
      throw std::runtime_error(std::string(where) +
                               ": abscissas are not a uniform symmetric grid");
    }
  }
  return grid;
}

void write_grid_json(nlohmann::json& j, const GridSpec& grid) {
  j["L"] = grid.extent;
  j["n"] = grid.samples;
}

}  // namespace

void write_wavefunction_csv(std::ostream& out, const GridWavefunction& psi) {
  validate(psi.grid);
  const Eigen::VectorXd xs = psi.grid.axis();
  out << std::setprecision(kDigits);
  out << "x,re,im\n";
  for (Eigen::Index j = 0; j < xs.size(); ++j) {
    out << xs(j) << ',' << psi.samples(j).real() << ','
        << psi.samples(j).imag() << '\n';
  }
}

GridWavefunction read_wavefunction_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != "x,re,im") {
    throw std::runtime_error("read_wavefunction_csv: missing 'x,re,im' header");
  }
  std::vector<double> xs;
  std::vector<complexd> vals;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const std::vector<double> f =
        split_csv_row(line, 3, "read_wavefunction_csv");
    xs.push_back(f[0]);
    vals.emplace_back(f[1], f[2]);
  }
  GridWavefunction psi;
  psi.grid = grid_from_axis(xs, "read_wavefunction_csv");
  psi.samples.resize(static_cast<Eigen::Index>(vals.size()));
  for (size_t j = 0; j < vals.size(); ++j) {
    psi.samples(static_cast<Eigen::Index>(j)) = vals[j];
  }
  return psi;
}

void write_wigner_csv(std::ostream& out, const WignerGrid& w) {
  validate(w.grid);
  const Eigen::VectorXd xs = w.grid.axis();
  out << std::setprecision(kDigits);
  out << "x,p,w\n";
  for (Eigen::Index j = 0; j < xs.size(); ++j) {
    for (Eigen::Index k = 0; k < xs.size(); ++k) {
      out << xs(j) << ',' << xs(k) << ',' << w.values(j, k) << '\n';
    }
  }
}

void write_wigner_binary(const std::filesystem::path& path,
                         const WignerGrid& w) {
  validate(w.grid);
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("write_wigner_binary: cannot open " +
                             path.string());
  }
  // Row-major so external readers can mmap without Eigen's column-major
  // default surprising them.
  for (Eigen::Index j = 0; j < w.values.rows(); ++j) {
    for (Eigen::Index k = 0; k < w.values.cols(); ++k) {
      const double v = w.values(j, k);
      out.write(reinterpret_cast<const char*>(&v), sizeof(double));
    }
  }
  out.close();
  nlohmann::json meta;
  write_grid_json(meta, w.grid);
  meta["layout"] = "row-major float64 x-then-p";
  std::ofstream side(path.string() + ".json");
  side << meta.dump(2) << '\n';
}

void write_tomogram_csv(std::ostream& out, const TomogramCurve& curve) {
  out << std::setprecision(kDigits);
  out << "# A=" << curve.matrix.a << " B=" << curve.matrix.b
      << " C=" << curve.matrix.c << " D=" << curve.matrix.d << " mode="
      << (curve.mode == TomogramMode::position ? "position" : "momentum")
      << '\n';
  out << "x,value\n";
  for (Eigen::Index j = 0; j < curve.abscissas.size(); ++j) {
    out << curve.abscissas(j) << ',' << curve.values(j) << '\n';
  }
}

TomogramCurve read_tomogram_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line.rfind("# A=", 0) != 0) {
    throw std::runtime_error("read_tomogram_csv: missing '# A=...' header");
  }
  TomogramCurve curve;
  {
    std::stringstream header(line.substr(2));
    std::string token;
    bool have_mode = false;
    int have_entries = 0;
    while (header >> token) {
      const size_t eq = token.find('=');
      if (eq == std::string::npos) {
        throw std::runtime_error("read_tomogram_csv: bad header token '" +
                                 token + "'");
      }
      const std::string key = token.substr(0, eq);
      const std::string value = token.substr(eq + 1);
      if (key == "mode") {
        if (value == "position") {
          curve.mode = TomogramMode::position;
        } else if (value == "momentum") {
          curve.mode = TomogramMode::momentum;
        } else {
          throw std::runtime_error("read_tomogram_csv: unknown mode '" +
                                   value + "'");
        }
        have_mode = true;
        continue;
      }
      double* slot = nullptr;
      if (key == "A") slot = &curve.matrix.a;
      if (key == "B") slot = &curve.matrix.b;
      if (key == "C") slot = &curve.matrix.c;
      if (key == "D") slot = &curve.matrix.d;
      if (slot == nullptr) {
        throw std::runtime_error("read_tomogram_csv: unknown header key '" +
                                 key + "'");
      }
      try {
        *slot = std::stod(value);
      } catch (const std::exception&) {
        throw std::runtime_error("read_tomogram_csv: bad value for " + key);
      }
      ++have_entries;
    }
    if (!have_mode || have_entries != 4) {
      throw std::runtime_error(
          "read_tomogram_csv: header must carry A, B, C, D and mode");
    }
  }
  if (!std::getline(in, line) || line != "x,value") {
    throw std::runtime_error("read_tomogram_csv: missing 'x,value' header");
  }
  std::vector<double> xs, vals;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const std::vector<double> f = split_csv_row(line, 2, "read_tomogram_csv");
    xs.push_back(f[0]);
    vals.push_back(f[1]);
  }
  if (xs.size() < 2) {
    throw std::runtime_error("read_tomogram_csv: no data rows");
  }
  curve.abscissas =
      Eigen::Map<const Eigen::VectorXd>(xs.data(), xs.size());
  curve.values = Eigen::Map<const Eigen::VectorXd>(vals.data(), vals.size());
  return curve;
}

void write_sinogram(const std::filesystem::path& directory,
                    const std::vector<TomogramCurve>& curves) {
  if (curves.empty()) {
    throw std::invalid_argument("write_sinogram: no curves");
  }
  std::filesystem::create_directories(directory);
  nlohmann::json manifest;
  manifest["angles"] = curves.size();
  const std::vector<double> xs(curves.front().abscissas.data(),
                               curves.front().abscissas.data() +
                                   curves.front().abscissas.size());
  nlohmann::json grid_json;
  write_grid_json(grid_json, grid_from_axis(xs, "write_sinogram"));
  manifest["grid"] = grid_json;
  std::vector<std::string> files;
  for (size_t i = 0; i < curves.size(); ++i) {
    std::ostringstream name;
    name << "angle_" << std::setw(3) << std::setfill('0') << i << ".csv";
    files.push_back(name.str());
    std::ofstream out(directory / name.str());
    if (!out) {
      throw std::runtime_error("write_sinogram: cannot open " +
                               (directory / name.str()).string());
    }
    write_tomogram_csv(out, curves[i]);
  }
  manifest["files"] = files;
  std::ofstream out(directory / "manifest.json");
  if (!out) {
    throw std::runtime_error("write_sinogram: cannot open manifest.json");
  }
  out << manifest.dump(2) << '\n';
}

std::vector<TomogramCurve> read_sinogram(
    const std::filesystem::path& directory) {
  std::ifstream manifest_in(directory / "manifest.json");
  if (!manifest_in) {
    throw std::runtime_error("read_sinogram: cannot open manifest.json in " +
                             directory.string());
  }
  nlohmann::json manifest;
  manifest_in >> manifest;
  std::vector<TomogramCurve> curves;
  for (const auto& name : manifest.at("files")) {
    std::ifstream in(directory / name.get<std::string>());
    if (!in) {
      throw std::runtime_error("read_sinogram: cannot open " +
                               name.get<std::string>());
    }
    curves.push_back(read_tomogram_csv(in));
  }
  if (curves.size() != manifest.at("angles").get<size_t>()) {
    throw std::runtime_error("read_sinogram: manifest angle count mismatch");
  }
  return curves;
}

nlohmann::json to_json(const RayMatrix& m) {
  return nlohmann::json::array({m.a, m.b, m.c, m.d});
}

nlohmann::json to_json(const SRPair& p) {
  return nlohmann::json::array(
      {{p.s.real(), p.s.imag()}, {p.r.real(), p.r.imag()}});
}

nlohmann::json to_json(const FockVector& v) {
  nlohmann::json data = nlohmann::json::array();
  for (Eigen::Index n = 0; n < v.size(); ++n) {
    data.push_back({v(n).real(), v(n).imag()});
  }
  return nlohmann::json{{"dim", v.size()}, {"data", data}};
}

nlohmann::json to_json(const GridSpec& grid) {
  nlohmann::json j;
  write_grid_json(j, grid);
  return j;
}

nlohmann::json to_json(const StateSpec& spec) {
  nlohmann::json j;
  switch (spec.kind) {
    case StateSpec::Kind::vacuum:
      j["kind"] = "vacuum";
      break;
    case StateSpec::Kind::fock:
      j["kind"] = "fock";
      j["number"] = spec.number;
      break;
    case StateSpec::Kind::coherent:
      j["kind"] = "coherent";
      j["alpha"] = {spec.alpha.real(), spec.alpha.imag()};
      break;
    case StateSpec::Kind::squeezed:
      j["kind"] = "squeezed";
      j["lambda"] = spec.lambda;
      break;
    case StateSpec::Kind::cat:
      j["kind"] = "cat";
      j["alpha"] = {spec.alpha.real(), spec.alpha.imag()};
      break;
  }
  return j;
}

RayMatrix ray_matrix_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 4) {
    throw std::runtime_error("ray_matrix_from_json: expected [A, B, C, D]");
  }
  return RayMatrix{j[0].get<double>(), j[1].get<double>(), j[2].get<double>(),
                   j[3].get<double>()};
}

SRPair sr_pair_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_array() || j[0].size() != 2 ||
      !j[1].is_array() || j[1].size() != 2) {
    throw std::runtime_error(
        "sr_pair_from_json: expected [[Re s, Im s], [Re r, Im r]]");
  }
  SRPair p;
  p.s = complexd(j[0][0].get<double>(), j[0][1].get<double>());
  p.r = complexd(j[1][0].get<double>(), j[1][1].get<double>());
  return p;
}

FockVector fock_vector_from_json(const nlohmann::json& j) {
  const auto& data = j.at("data");
  const Eigen::Index dim = j.at("dim").get<Eigen::Index>();
  if (!data.is_array() || static_cast<Eigen::Index>(data.size()) != dim) {
    throw std::runtime_error("fock_vector_from_json: dim/data mismatch");
  }
  FockVector v(dim);
  for (Eigen::Index n = 0; n < dim; ++n) {
    v(n) = complexd(data[n][0].get<double>(), data[n][1].get<double>());
  }
  return v;
}

GridSpec grid_spec_from_json(const nlohmann::json& j) {
  GridSpec grid{j.at("L").get<double>(), j.at("n").get<int>()};
  validate(grid);
  return grid;
}

StateSpec state_spec_from_json(const nlohmann::json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  StateSpec spec;
  if (kind == "vacuum") {
    spec.kind = StateSpec::Kind::vacuum;
  } else if (kind == "fock") {
    spec.kind = StateSpec::Kind::fock;
    spec.number = j.at("number").get<int>();
  } else if (kind == "coherent" || kind == "cat") {
    spec.kind = kind == "coherent" ? StateSpec::Kind::coherent
                                   : StateSpec::Kind::cat;
    const auto& a = j.at("alpha");
    spec.alpha = complexd(a[0].get<double>(), a[1].get<double>());
  } else if (kind == "squeezed") {
    spec.kind = StateSpec::Kind::squeezed;
    spec.lambda = j.at("lambda").get<double>();
  } else {
    throw std::runtime_error("state_spec_from_json: unknown kind '" + kind +
                             "'");
  }
  return spec;
}

nlohmann::json wavefunction_to_json(const GridWavefunction& psi) {
  validate(psi.grid);
  nlohmann::json samples = nlohmann::json::array();
  for (Eigen::Index j = 0; j < psi.samples.size(); ++j) {
    samples.push_back({psi.samples(j).real(), psi.samples(j).imag()});
  }
  return nlohmann::json{{"grid", to_json(psi.grid)}, {"samples", samples}};
}

GridWavefunction wavefunction_from_json(const nlohmann::json& j) {
  GridWavefunction psi;
  psi.grid = grid_spec_from_json(j.at("grid"));
  const auto& samples = j.at("samples");
  if (static_cast<int>(samples.size()) != psi.grid.samples) {
    throw std::runtime_error(
        "wavefunction_from_json: sample count does not match grid");
  }
  psi.samples.resize(psi.grid.samples);
  for (Eigen::Index k = 0; k < psi.samples.size(); ++k) {
    psi.samples(k) =
        complexd(samples[k][0].get<double>(), samples[k][1].get<double>());
  }
  return psi;
}

}  // namespace fresneltomo
