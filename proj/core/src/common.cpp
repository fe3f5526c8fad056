// Copyright 2026 The fresneltomo Authors
// SPDX-License-Identifier: Apache-2.0

#include "fresneltomo/common.hpp"

#include <iostream>
#include <string>

namespace fresneltomo {

namespace {

void default_handler(std::string_view message) {
  std::cerr << "[fresneltomo] warning: " << message << '\n';
}

WarningHandler& handler_slot() {
  static WarningHandler handler;  // empty means "use default"
  return handler;
}

}  // namespace

void set_warning_handler(WarningHandler handler) {
  handler_slot() = std::move(handler);
}

void emit_warning(std::string_view message) {
  const WarningHandler& handler = handler_slot();
  if (handler) {
    handler(message);
  } else {
    default_handler(message);
  }
}

}  // namespace fresneltomo
