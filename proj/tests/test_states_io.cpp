// Copyright 2026 The fresneltomo Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <complex>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "fresneltomo/fockspace.hpp"
#include "fresneltomo/grid.hpp"
#include "fresneltomo/io.hpp"
#include "fresneltomo/phasespace.hpp"
#include "fresneltomo/states.hpp"
#include "fresneltomo/symplectic.hpp"

namespace ft = fresneltomo;
using ft::complexd;

namespace {
ft::GridWavefunction test_state(const std::string& spec,
                                const ft::GridSpec& grid = {}) {
  return ft::make_state_grid(ft::parse_state_spec(spec), grid);
}
}  // namespace

TEST_SUITE("states") {
  TEST_CASE("specs parse and print back") {
    CHECK(ft::parse_state_spec("vacuum").kind == ft::StateSpec::Kind::vacuum);
    CHECK(ft::parse_state_spec("fock:3").number == 3);
    CHECK(ft::parse_state_spec("coherent:1.5,-0.5").alpha ==
          complexd(1.5, -0.5));
    CHECK(ft::parse_state_spec("squeezed:0.5").lambda == 0.5);
    CHECK(ft::parse_state_spec("cat:2").alpha == complexd(2.0, 0.0));
    for (const std::string text :
         {"vacuum", "fock:3", "coherent:1.5,-0.5", "squeezed:0.5", "cat:2,1"}) {
      CHECK(ft::to_string(ft::parse_state_spec(text)) == text);
    }
  }

  TEST_CASE("malformed specs are rejected") {
    for (const std::string text :
         {"vacuum:1", "fock", "fock:1.5", "fock:-1", "fock:57", "coherent",
          "squeezed:2.0", "cat:5", "thermal:1", "coherent:x"}) {
      CHECK_THROWS_AS((void)ft::parse_state_spec(text), std::invalid_argument);
    }
  }

  TEST_CASE("grid states are normalized") {
    for (const std::string spec :
         {"vacuum", "coherent:1", "fock:3", "squeezed:0.5", "cat:2"}) {
      CHECK(std::abs(ft::l2_norm(test_state(spec)) - 1.0) < 1e-12);
    }
  }

  TEST_CASE("grid and ladder constructions agree") {
    for (const std::string spec :
         {"vacuum", "coherent:1", "fock:1", "fock:3", "squeezed:0.5",
          "cat:2"}) {
      const ft::GridWavefunction direct = test_state(spec);
      const ft::GridWavefunction viafock = ft::fock_to_grid(
          ft::make_state_fock(ft::parse_state_spec(spec), 64),
          direct.grid);
      CHECK((direct.samples - viafock.samples).cwiseAbs().maxCoeff() < 1e-8);
    }
  }

  TEST_CASE("fock numbers must stay below the truncation") {
    CHECK_THROWS_AS(
        (void)ft::make_state_fock(ft::parse_state_spec("fock:8"), 8),
        std::invalid_argument);
    const ft::FockVector v =
        ft::make_state_fock(ft::parse_state_spec("fock:7"), 8);
    CHECK(v(7) == complexd(1.0, 0.0));
  }

  TEST_CASE("cat states carry even parity") {
    const ft::GridWavefunction psi = test_state("cat:2");
    const int n = psi.grid.samples;
    for (const int j : {0, 123, 400}) {
      CHECK(std::abs(psi.samples(j) - psi.samples(n - 1 - j)) < 1e-14);
    }
  }

  TEST_CASE("squeezing narrows the position variance") {
    const double lambda = 0.5;
    const ft::GridWavefunction psi =
        test_state("squeezed:" + std::to_string(lambda));
    const Eigen::VectorXd wt = ft::trapezoid_weights(psi.grid);
    const Eigen::VectorXd xs = psi.grid.axis();
    const double var = (wt.array() * xs.array().square() *
                        psi.samples.cwiseAbs2().array())
                           .sum();
    CHECK(std::abs(var - 0.5 * std::exp(-2.0 * lambda)) < 1e-9);
  }

  TEST_CASE("analytic wigner covers only the closed-form states") {
    CHECK_THROWS_AS(
        (void)ft::analytic_wigner(ft::parse_state_spec("cat:2"),
                                  ft::GridSpec{}),
        std::invalid_argument);
  }
}

TEST_SUITE("io") {
  TEST_CASE("wavefunction csv round trip is exact") {
    const ft::GridWavefunction psi = test_state("cat:1,2", ft::GridSpec{6, 64});
    std::stringstream buffer;
    ft::write_wavefunction_csv(buffer, psi);
    const ft::GridWavefunction back = ft::read_wavefunction_csv(buffer);
    CHECK(back.grid == psi.grid);
    CHECK((back.samples - psi.samples).cwiseAbs().maxCoeff() == 0.0);
  }

  TEST_CASE("csv headers are enforced") {
    std::stringstream buffer("a,b,c\n1,2,3\n");
    CHECK_THROWS_AS((void)ft::read_wavefunction_csv(buffer),
                    std::runtime_error);
    std::stringstream torn("x,re,im\n0,1\n");
    CHECK_THROWS_AS((void)ft::read_wavefunction_csv(torn), std::runtime_error);
  }

  TEST_CASE("tomogram csv keeps the matrix tag") {
    const ft::GridWavefunction psi = test_state("vacuum", ft::GridSpec{6, 64});
    const ft::TomogramCurve curve = ft::tomogram_via_fresnel(
        psi, ft::rotation(0.25), ft::TomogramMode::momentum);
    std::stringstream buffer;
    ft::write_tomogram_csv(buffer, curve);
    const ft::TomogramCurve back = ft::read_tomogram_csv(buffer);
    CHECK(back.mode == ft::TomogramMode::momentum);
    CHECK(std::abs(back.matrix.a - curve.matrix.a) == 0.0);
    CHECK(std::abs(back.matrix.b - curve.matrix.b) == 0.0);
    CHECK((back.values - curve.values).cwiseAbs().maxCoeff() == 0.0);
    CHECK((back.abscissas - curve.abscissas).cwiseAbs().maxCoeff() == 0.0);
  }

  TEST_CASE("sinogram bundles round trip through a directory") {
    const ft::GridWavefunction psi = test_state("vacuum", ft::GridSpec{6, 64});
    std::vector<ft::TomogramCurve> curves;
    for (int i = 0; i < 8; ++i) {
      curves.push_back(ft::tomogram_via_fresnel(
          psi, ft::rotation(3.14159265358979323846 * i / 8),
          ft::TomogramMode::position));
    }
    const std::filesystem::path dir =
        std::filesystem::temp_directory_path() / "fresneltomo_test_sinogram";
    std::filesystem::remove_all(dir);
    ft::write_sinogram(dir, curves);
    const std::vector<ft::TomogramCurve> back = ft::read_sinogram(dir);
    REQUIRE(back.size() == curves.size());
    for (size_t i = 0; i < curves.size(); ++i) {
      CHECK((back[i].values - curves[i].values).cwiseAbs().maxCoeff() == 0.0);
    }
    std::filesystem::remove_all(dir);
  }

  TEST_CASE("json forms round trip") {
    const ft::RayMatrix m{1.3, 0.8, -0.4, 0.52307692307692299};
    const ft::RayMatrix m2 = ft::ray_matrix_from_json(ft::to_json(m));
    CHECK(m2.a == m.a);
    CHECK(m2.d == m.d);

    const ft::SRPair p = ft::abcd_to_sr(m);
    const ft::SRPair p2 = ft::sr_pair_from_json(ft::to_json(p));
    CHECK(p2.s == p.s);
    CHECK(p2.r == p.r);

    const ft::GridWavefunction psi = test_state("coherent:0.5,0.25",
                                                ft::GridSpec{6, 64});
    const ft::GridWavefunction psi2 =
        ft::wavefunction_from_json(ft::wavefunction_to_json(psi));
    CHECK(psi2.grid == psi.grid);
    CHECK((psi2.samples - psi.samples).cwiseAbs().maxCoeff() == 0.0);

    const ft::StateSpec spec = ft::parse_state_spec("cat:2,1");
    const ft::StateSpec spec2 = ft::state_spec_from_json(ft::to_json(spec));
    CHECK(spec2.kind == spec.kind);
    CHECK(spec2.alpha == spec.alpha);
  }

  TEST_CASE("wigner binary dumps values and a sidecar") {
    const ft::WignerGrid w =
        ft::wigner(test_state("vacuum", ft::GridSpec{6, 64}));
    const std::filesystem::path path =
        std::filesystem::temp_directory_path() / "fresneltomo_test_w.bin";
    ft::write_wigner_binary(path, w);
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::vector<double> raw(64 * 64);
    in.read(reinterpret_cast<char*>(raw.data()),
            static_cast<std::streamsize>(raw.size() * sizeof(double)));
    CHECK(in.gcount() ==
          static_cast<std::streamsize>(raw.size() * sizeof(double)));
    CHECK(raw[64 * 32 + 32] == w.values(32, 32));

    nlohmann::json sidecar;
    std::ifstream meta(path.string() + ".json");
    REQUIRE(meta.good());
    meta >> sidecar;
    CHECK(sidecar["n"] == 64);
    CHECK(sidecar["L"] == 6.0);
    std::filesystem::remove(path);
    std::filesystem::remove(path.string() + ".json");
  }

  TEST_CASE("grid axis reading rejects non-uniform spacing") {
    std::stringstream buffer("x,re,im\n0,1,0\n1,1,0\n3,1,0\n");
    CHECK_THROWS_AS((void)ft::read_wavefunction_csv(buffer),
                    std::runtime_error);
  }
}
