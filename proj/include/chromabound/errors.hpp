#pragma once

#include <stdexcept>
#include <string>

namespace chromabound {

/// Malformed user input (graph files, CLI values). Maps to exit code 2.
class InputError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// An exponential enumeration was refused because the input exceeds its
/// configured cap. Maps to exit code 3.
class CapExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// F_{V-u}(z) is numerically zero, so R^u_G(z) is not reliable.
class SingularRatio : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace chromabound
