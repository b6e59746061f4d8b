#pragma once

#include <stdexcept>
#include <string>

namespace odg {

// Thrown when a construction or search would exceed a configured size cap.
struct cap_exceeded : std::runtime_error {
  explicit cap_exceeded(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when a group spec string does not parse.
struct spec_parse_error : std::runtime_error {
  explicit spec_parse_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace odg
