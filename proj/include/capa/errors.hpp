#pragma once

#include <stdexcept>
#include <string>

namespace capa {

// Invalid dimensions, malformed flags, inconsistent plans. CLI exit code 2.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// A pipeline stage failed at runtime (I/O, missing probe data, ...). CLI exit code 3.
class StageError : public std::runtime_error {
 public:
  explicit StageError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace capa
