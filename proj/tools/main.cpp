// Copyright 2026 The fresneltomo Authors
// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end: builds states, applies grid transforms, emits
// Wigner grids, tomograms, sinogram reconstructions, and runs the
// verification suite. Exit codes: 0 success / all checks pass, 1 numeric or
// verification failure, 2 usage error.

#include <CLI11.hpp>

#include <cmath>
#include <complex>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "fresneltomo/fockspace.hpp"
#include "fresneltomo/grid.hpp"
#include "fresneltomo/gridtransform.hpp"
#include "fresneltomo/io.hpp"
#include "fresneltomo/phasespace.hpp"
#include "fresneltomo/states.hpp"
#include "fresneltomo/symplectic.hpp"
#include "fresneltomo/verify.hpp"

namespace ft = fresneltomo;

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr int kDigits = std::numeric_limits<double>::max_digits10;

std::vector<double> parse_doubles(const std::string& text, size_t expected,
                                  const std::string& what) {
  std::vector<double> values;
  std::stringstream stream(text);
  std::string cell;
  while (std::getline(stream, cell, ',')) {
    try {
      size_t used = 0;
      values.push_back(std::stod(cell, &used));
      if (used != cell.size()) throw std::invalid_argument("trailing text");
    } catch (const std::exception&) {
      throw std::invalid_argument(what + ": bad number '" + cell + "'");
    }
  }
  if (values.size() != expected) {
    throw std::invalid_argument(what + ": expected " +
                                std::to_string(expected) +
                                " comma-separated numbers");
  }
  return values;
}

// Matrix sources shared by the transform-like subcommands. Whichever flag
// was given is normalized to a validated RayMatrix; the chart conversion is
// exercised on every --sr input.
struct MatrixOptions {
  std::string matrix_csv;
  std::string sr_csv;
  std::string elementary_spec;

  void attach(CLI::App* cmd) {
    auto* matrix = cmd->add_option("--matrix", matrix_csv,
                                   "Ray matrix as A,B,C,D (det = 1)");
    auto* sr = cmd->add_option(
        "--sr", sr_csv, "Chart pair as Re(s),Im(s),Re(r),Im(r)");
    auto* elem = cmd->add_option(
        "--elementary", elementary_spec,
        "Named matrix: identity, rotation:theta, free:lambda, lens:kappa, "
        "scale:mu");
    matrix->excludes(sr)->excludes(elem);
    sr->excludes(elem);
  }

  ft::RayMatrix resolve() const {
    if (!matrix_csv.empty()) {
      const std::vector<double> v =
          parse_doubles(matrix_csv, 4, "--matrix");
      const ft::RayMatrix m{v[0], v[1], v[2], v[3]};
      ft::abcd_to_sr(m);  // validates det = 1
      return m;
    }
    if (!sr_csv.empty()) {
      const std::vector<double> v = parse_doubles(sr_csv, 4, "--sr");
      return ft::sr_to_abcd(
          ft::SRPair{{v[0], v[1]}, {v[2], v[3]}});
    }
    if (!elementary_spec.empty()) {
      const size_t colon = elementary_spec.find(':');
      const std::string kind = elementary_spec.substr(0, colon);
      double parameter = 0.0;
      if (colon != std::string::npos) {
        const std::string arg = elementary_spec.substr(colon + 1);
        try {
          size_t used = 0;
          parameter = std::stod(arg, &used);
          if (used != arg.size()) throw std::invalid_argument("trailing");
        } catch (const std::exception&) {
          throw std::invalid_argument("--elementary: bad parameter '" + arg +
                                      "'");
        }
      }
      return ft::elementary(kind, parameter);
    }
    return ft::identity_matrix();
  }
};

struct StateOptions {
  std::string state_spec;
  std::string state_file;

  void attach(CLI::App* cmd) {
    auto* spec = cmd->add_option(
        "--state", state_spec,
        "State spec: vacuum, fock:n, coherent:re[,im], squeezed:lambda, "
        "cat:re[,im]");
    auto* file = cmd->add_option("--state-file", state_file,
                                 "Wavefunction file (.csv or .json)");
    spec->excludes(file);
  }

  ft::GridWavefunction resolve(const ft::GridSpec& grid) const {
    if (!state_spec.empty()) {
      return ft::make_state_grid(ft::parse_state_spec(state_spec), grid);
    }
    if (!state_file.empty()) {
      std::ifstream in(state_file);
      if (!in) {
        throw std::invalid_argument("--state-file: cannot open " + state_file);
      }
      if (std::filesystem::path(state_file).extension() == ".json") {
        nlohmann::json j;
        in >> j;
        return ft::wavefunction_from_json(j);
      }
      return ft::read_wavefunction_csv(in);
    }
    throw std::invalid_argument(
        "a state is required: pass --state or --state-file");
  }
};

ft::GridSpec parse_grid(const std::string& text) {
  if (text.empty()) return ft::GridSpec{};
  const std::vector<double> v = parse_doubles(text, 2, "--grid");
  ft::GridSpec grid{v[0], static_cast<int>(v[1])};
  if (v[1] != grid.samples) {
    throw std::invalid_argument("--grid: sample count must be an integer");
  }
  ft::validate(grid);
  return grid;
}

// All CSV/JSON payloads go to --out when given, else stdout; the human
// summary then goes to stdout when the payload is in a file, else stderr,
// so payload bytes stay clean on both paths.
class OutputTarget {
 public:
  explicit OutputTarget(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) {
        throw std::invalid_argument("--out: cannot open " + path);
      }
      to_file_ = true;
    }
  }

  std::ostream& payload() { return to_file_ ? file_ : std::cout; }
  std::ostream& summary() { return to_file_ ? std::cout : std::cerr; }

 private:
  std::ofstream file_;
  bool to_file_ = false;
};

int cmd_wigner(const StateOptions& state_opts, const std::string& grid_csv,
               const std::string& out_path, bool as_json) {
  const ft::GridSpec grid = parse_grid(grid_csv);
  const ft::GridWavefunction psi = state_opts.resolve(grid);
  const ft::WignerGrid w = ft::wigner(psi);

  const Eigen::VectorXd wt = ft::trapezoid_weights(grid);
  const double norm = wt.dot(w.values * wt);
  const double min = w.values.minCoeff();
  const double max = w.values.maxCoeff();

  const bool binary = !out_path.empty() &&
                      std::filesystem::path(out_path).extension() == ".bin";
  if (binary) {
    ft::write_wigner_binary(out_path, w);
  } else {
    OutputTarget out(out_path);
    ft::write_wigner_csv(out.payload(), w);
  }

  std::ostream& summary = out_path.empty() ? std::cerr : std::cout;
  if (as_json) {
    nlohmann::json j{{"normalization", norm}, {"min", min}, {"max", max}};
    summary << j.dump() << '\n';
  } else {
    summary << std::setprecision(kDigits) << "normalization=" << norm
            << " min=" << min << " max=" << max << '\n';
  }
  return 0;
}

int cmd_tomogram(const StateOptions& state_opts,
                 const MatrixOptions& matrix_opts,
                 const std::string& grid_csv, const std::string& out_path,
                 const std::string& route, const std::string& mode_name) {
  const ft::GridSpec grid = parse_grid(grid_csv);
  const ft::RayMatrix m = matrix_opts.resolve();
  const ft::GridWavefunction psi = state_opts.resolve(grid);
  ft::TomogramMode mode;
  if (mode_name == "position") {
    mode = ft::TomogramMode::position;
  } else if (mode_name == "momentum") {
    mode = ft::TomogramMode::momentum;
  } else {
    throw std::invalid_argument("--mode must be position or momentum");
  }
  if (route != "fresnel" && route != "radon" && route != "both") {
    throw std::invalid_argument("--route must be fresnel, radon, or both");
  }

  std::optional<ft::TomogramCurve> fresnel_curve;
  std::optional<ft::TomogramCurve> radon_curve;
  if (route != "radon") {
    fresnel_curve = ft::tomogram_via_fresnel(psi, m, mode);
  }
  if (route != "fresnel") {
    const ft::WignerGrid w = ft::wigner(psi);
    radon_curve = mode == ft::TomogramMode::position
                      ? ft::radon_position(w, m)
                      : ft::radon_momentum(w, m);
  }

  OutputTarget out(out_path);
  const ft::TomogramCurve& primary =
      fresnel_curve ? *fresnel_curve : *radon_curve;
  ft::write_tomogram_csv(out.payload(), primary);
  if (route == "both") {
    const double dev =
        (fresnel_curve->values - radon_curve->values).cwiseAbs().maxCoeff();
    out.payload() << std::setprecision(kDigits)
                  << "# max_route_deviation=" << dev << '\n';
    out.summary() << std::setprecision(kDigits)
                  << "max_route_deviation=" << dev << '\n';
  }
  return 0;
}

int cmd_radon(const StateOptions& state_opts, const MatrixOptions& matrix_opts,
              const std::string& grid_csv, const std::string& out_path,
              const std::string& mode_name) {
  return cmd_tomogram(state_opts, matrix_opts, grid_csv, out_path, "radon",
                      mode_name);
}

int cmd_fresnel_apply(const StateOptions& state_opts,
                      const MatrixOptions& matrix_opts,
                      const std::string& grid_csv, const std::string& out_path,
                      bool as_json) {
  const ft::GridSpec grid = parse_grid(grid_csv);
  const ft::RayMatrix m = matrix_opts.resolve();
  const ft::GridWavefunction psi = state_opts.resolve(grid);
  const ft::GridWavefunction g = ft::fresnel_transform(m, psi);

  OutputTarget out(out_path);
  if (as_json ||
      (!out_path.empty() &&
       std::filesystem::path(out_path).extension() == ".json")) {
    out.payload() << ft::wavefunction_to_json(g).dump(2) << '\n';
  } else {
    ft::write_wavefunction_csv(out.payload(), g);
  }
  out.summary() << std::setprecision(kDigits) << "l2_norm=" << ft::l2_norm(g)
                << '\n';
  return 0;
}

int cmd_compose(const std::string& first, const std::string& second,
                const std::string& out_path, bool as_json) {
  auto parse_operand = [](const std::string& text) -> ft::RayMatrix {
    if (text.rfind("sr:", 0) == 0) {
      const std::vector<double> v =
          parse_doubles(text.substr(3), 4, "compose operand");
      return ft::sr_to_abcd(ft::SRPair{{v[0], v[1]}, {v[2], v[3]}});
    }
    if (text.find_first_not_of("+-.,0123456789eE") == std::string::npos &&
        text.find(',') != std::string::npos) {
      const std::vector<double> v = parse_doubles(text, 4, "compose operand");
      const ft::RayMatrix m{v[0], v[1], v[2], v[3]};
      ft::abcd_to_sr(m);
      return m;
    }
    const size_t colon = text.find(':');
    const std::string kind = text.substr(0, colon);
    double parameter = 0.0;
    if (colon != std::string::npos) {
      parameter = std::stod(text.substr(colon + 1));
    }
    return ft::elementary(kind, parameter);
  };
  const ft::RayMatrix m1 = parse_operand(first);
  const ft::RayMatrix m2 = parse_operand(second);
  const ft::RayMatrix m = ft::compose(m1, m2);
  const ft::SRPair p = ft::abcd_to_sr(m);
  const ft::SRPair check =
      ft::sr_compose(ft::abcd_to_sr(m1), ft::abcd_to_sr(m2));
  const double chart_dev =
      std::max(std::abs(p.s - check.s), std::abs(p.r - check.r));

  OutputTarget out(out_path);
  if (as_json) {
    nlohmann::json j;
    j["matrix"] = ft::to_json(m);
    j["sr"] = ft::to_json(p);
    j["chart_consistency"] = chart_dev;
    out.payload() << j.dump(2) << '\n';
  } else {
    out.payload() << std::setprecision(kDigits) << "A=" << m.a << " B=" << m.b
                  << " C=" << m.c << " D=" << m.d << '\n'
                  << "s=" << p.s.real() << (p.s.imag() < 0 ? "-" : "+")
                  << std::abs(p.s.imag()) << "i r=" << p.r.real()
                  << (p.r.imag() < 0 ? "-" : "+") << std::abs(p.r.imag())
                  << "i\n"
                  << "chart_consistency=" << chart_dev << '\n';
  }
  return 0;
}

int cmd_verify(std::uint64_t seed, int fock_dim, const std::string& grid_csv,
               const std::string& out_path) {
  ft::VerifyOptions options;
  options.seed = seed;
  options.fock_dim = fock_dim;
  options.grid = parse_grid(grid_csv);
  const ft::VerifyReport report = ft::run_verification(options);

  nlohmann::json checks = nlohmann::json::array();
  for (const ft::CheckResult& c : report.checks) {
    checks.push_back({{"check", c.name},
                      {"value", c.value},
                      {"tolerance", c.tolerance},
                      {"pass", c.pass}});
  }
  nlohmann::json j{{"seed", seed},
                   {"fock_dim", fock_dim},
                   {"checks", checks},
                   {"all_pass", report.all_pass()}};
  OutputTarget out(out_path);
  out.payload() << j.dump(2) << '\n';
  if (!report.all_pass()) {
    for (const ft::CheckResult& c : report.checks) {
      if (!c.pass) {
        out.summary() << "FAIL " << c.name << ": value " << c.value
                      << " > tolerance " << c.tolerance << '\n';
      }
    }
    return 1;
  }
  return 0;
}

int cmd_reconstruct(const StateOptions& state_opts,
                    const std::string& grid_csv, int angles,
                    const std::string& out_path,
                    const std::string& sinogram_dir) {
  const ft::GridSpec grid = parse_grid(grid_csv);
  if (angles < 8) {
    throw std::invalid_argument(
        "--angles: filtered back-projection needs at least 8 angles");
  }
  const ft::GridWavefunction psi = state_opts.resolve(grid);
  std::vector<ft::TomogramCurve> curves;
  curves.reserve(angles);
  for (int i = 0; i < angles; ++i) {
    curves.push_back(ft::tomogram_via_fresnel(
        psi, ft::rotation(kPi * i / angles), ft::TomogramMode::position));
  }
  if (!sinogram_dir.empty()) {
    ft::write_sinogram(sinogram_dir, curves);
  }
  const ft::WignerGrid rec = ft::inverse_radon_fbp(curves);
  const ft::WignerGrid direct = ft::wigner(psi);
  const double linf = (rec.values - direct.values).cwiseAbs().maxCoeff();

  OutputTarget out(out_path);
  ft::write_wigner_csv(out.payload(), rec);
  out.summary() << std::setprecision(kDigits) << "angles=" << angles
                << " linf_error=" << linf << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Optical-transform quantum tomography toolkit: Wigner functions, "
      "quadrature tomograms of ray-matrix transforms, and filtered "
      "back-projection"};
  app.require_subcommand(1);
  std::ostringstream scratch;

  // wigner
  auto* wigner_cmd =
      app.add_subcommand("wigner", "Wigner function of a state");
  StateOptions wigner_state;
  wigner_state.attach(wigner_cmd);
  std::string wigner_grid, wigner_out;
  bool wigner_json = false;
  wigner_cmd->add_option("--grid", wigner_grid, "Grid as L,n (default 10,1024)");
  wigner_cmd->add_option("--out", wigner_out,
                         "Output path (.bin for binary + JSON sidecar)");
  wigner_cmd->add_flag("--json", wigner_json, "JSON summary line");

  // tomogram
  auto* tomogram_cmd = app.add_subcommand(
      "tomogram", "Quadrature distribution of a transformed state");
  StateOptions tomogram_state;
  MatrixOptions tomogram_matrix;
  tomogram_state.attach(tomogram_cmd);
  tomogram_matrix.attach(tomogram_cmd);
  std::string tomogram_grid, tomogram_out, tomogram_route = "fresnel";
  std::string tomogram_mode = "position";
  tomogram_cmd->add_option("--grid", tomogram_grid, "Grid as L,n");
  tomogram_cmd->add_option("--out", tomogram_out, "Output CSV path");
  tomogram_cmd->add_option("--route", tomogram_route,
                           "fresnel | radon | both (both appends the "
                           "max-deviation line)");
  tomogram_cmd->add_option("--mode", tomogram_mode, "position | momentum");

  // radon
  auto* radon_cmd = app.add_subcommand(
      "radon", "Projection of the Wigner function along matrix quadrature "
               "lines");
  StateOptions radon_state;
  MatrixOptions radon_matrix;
  radon_state.attach(radon_cmd);
  radon_matrix.attach(radon_cmd);
  std::string radon_grid, radon_out, radon_mode = "position";
  radon_cmd->add_option("--grid", radon_grid, "Grid as L,n");
  radon_cmd->add_option("--out", radon_out, "Output CSV path");
  radon_cmd->add_option("--mode", radon_mode, "position | momentum");

  // fresnel-apply
  auto* apply_cmd = app.add_subcommand(
      "fresnel-apply", "Apply the grid transform of a ray matrix to a state");
  StateOptions apply_state;
  MatrixOptions apply_matrix;
  apply_state.attach(apply_cmd);
  apply_matrix.attach(apply_cmd);
  std::string apply_grid, apply_out;
  bool apply_json = false;
  apply_cmd->add_option("--grid", apply_grid, "Grid as L,n");
  apply_cmd->add_option("--out", apply_out, "Output path (.json for JSON)");
  apply_cmd->add_flag("--json", apply_json, "JSON wavefunction output");

  // compose
  auto* compose_cmd = app.add_subcommand(
      "compose", "Compose two ray matrices and report both chart forms");
  std::string compose_first, compose_second, compose_out;
  bool compose_json = false;
  compose_cmd
      ->add_option("first", compose_first,
                   "A,B,C,D | name[:param] | sr:Re(s),Im(s),Re(r),Im(r)")
      ->required();
  compose_cmd->add_option("second", compose_second, "Second operand")
      ->required();
  compose_cmd->add_option("--out", compose_out, "Output path");
  compose_cmd->add_flag("--json", compose_json, "JSON output");

  // verify
  auto* verify_cmd = app.add_subcommand(
      "verify", "Run the full self-verification suite (JSON report)");
  std::uint64_t verify_seed = 7;
  int verify_fock_dim = 0;
  std::string verify_grid, verify_out;
  verify_cmd->add_option("--seed", verify_seed,
                         "Seed for the random-matrix suites");
  verify_cmd->add_option("--fock-dim", verify_fock_dim,
                         "Override every check's truncation dimension");
  verify_cmd->add_option("--grid", verify_grid, "Grid as L,n");
  verify_cmd->add_option("--out", verify_out, "Report path");

  // reconstruct
  auto* rec_cmd = app.add_subcommand(
      "reconstruct",
      "Rotation tomograms + filtered back-projection of a state");
  StateOptions rec_state;
  rec_state.attach(rec_cmd);
  std::string rec_grid, rec_out, rec_sinogram;
  int rec_angles = 180;
  rec_cmd->add_option("--grid", rec_grid, "Grid as L,n");
  rec_cmd->add_option("--angles", rec_angles,
                      "Number of projection angles (>= 8)");
  rec_cmd->add_option("--out", rec_out, "Reconstruction CSV path");
  rec_cmd->add_option("--sinogram", rec_sinogram,
                      "Also write the tomogram bundle to this directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*wigner_cmd) {
      return cmd_wigner(wigner_state, wigner_grid, wigner_out, wigner_json);
    }
    if (*tomogram_cmd) {
      return cmd_tomogram(tomogram_state, tomogram_matrix, tomogram_grid,
                          tomogram_out, tomogram_route, tomogram_mode);
    }
    if (*radon_cmd) {
      return cmd_radon(radon_state, radon_matrix, radon_grid, radon_out,
                       radon_mode);
    }
    if (*apply_cmd) {
      return cmd_fresnel_apply(apply_state, apply_matrix, apply_grid,
                               apply_out, apply_json);
    }
    if (*compose_cmd) {
      return cmd_compose(compose_first, compose_second, compose_out,
                         compose_json);
    }
    if (*verify_cmd) {
      return cmd_verify(verify_seed, verify_fock_dim, verify_grid, verify_out);
    }
    if (*rec_cmd) {
      return cmd_reconstruct(rec_state, rec_grid, rec_angles, rec_out,
                             rec_sinogram);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
