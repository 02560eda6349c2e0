#pragma once

#include <stdexcept>
#include <string>

namespace dichro {

// Invalid arguments: bad (n, k, s), mismatched ground sets, malformed files.
class parameter_error : public std::invalid_argument {
 public:
  explicit parameter_error(const std::string& what) : std::invalid_argument(what) {}
};

// A configured size cap (vertices, edges, product size, list caps) was exceeded.
class cap_exceeded : public std::runtime_error {
 public:
  explicit cap_exceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace dichro
