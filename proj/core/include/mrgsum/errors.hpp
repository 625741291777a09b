#pragma once

#include <stdexcept>
#include <string>

namespace mrgsum {

// I/O failures: missing files, unwritable outputs. CLI exit code 2.
struct IoError : std::runtime_error {
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input content: bad JSON, bad schema, bad edge lists. CLI exit code 3.
struct FormatError : std::runtime_error {
  explicit FormatError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace mrgsum
