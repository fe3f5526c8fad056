// Copyright 2026 The fresneltomo Authors
// SPDX-License-Identifier: Apache-2.0
//
// Acceptance gate: runs the full verification suite at its default
// parameters and prints one line per criterion. Exits 0 only when every
// criterion passes.

#include <cstdio>

#include "fresneltomo/verify.hpp"

int main() {
  const fresneltomo::VerifyReport report = fresneltomo::run_verification();
  for (const fresneltomo::CheckResult& c : report.checks) {
    std::printf("%s %-28s value=%.6e tolerance=%.0e\n",
                c.pass ? "PASS" : "FAIL", c.name.c_str(), c.value,
                c.tolerance);
  }
  return report.all_pass() ? 0 : 1;
}
