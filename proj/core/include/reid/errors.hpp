#pragma once

#include <stdexcept>
#include <string>

namespace reid {

// Shape or dimensionality mismatch between tensors/specs.
class ShapeError : public std::runtime_error {
 public:
  explicit ShapeError(const std::string& what) : std::runtime_error(what) {}
};

// Invalid argument value (out-of-range parameter, bad config).
class ValueError : public std::runtime_error {
 public:
  explicit ValueError(const std::string& what) : std::runtime_error(what) {}
};

// Operation called on an object in the wrong state (e.g. missing gradients).
class StateError : public std::runtime_error {
 public:
  explicit StateError(const std::string& what) : std::runtime_error(what) {}
};

// Dataset/label inconsistency; the message names the offending record.
class DataError : public std::runtime_error {
 public:
  explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

// File could not be read/written.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed or unsupported file contents (bad magic, unknown version, parse
// failure). Parse failures carry a line number where one exists.
class FormatError : public std::runtime_error {
 public:
  explicit FormatError(const std::string& what) : std::runtime_error(what) {}
};

// Unresolvable symbolic name (make/model lookup); message lists candidates.
class NameError : public std::runtime_error {
 public:
  explicit NameError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace reid
