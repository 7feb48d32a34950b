#pragma once

#include <stdexcept>
#include <string>

namespace stump {

// File could not be opened/read/written.
class IoError : public std::runtime_error {
public:
  explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

// File opened but its contents are not valid for the declared format.
class ParseError : public std::runtime_error {
public:
  explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace stump
