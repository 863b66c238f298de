#ifndef IPSTAB_ERROR_HPP
#define IPSTAB_ERROR_HPP

#include <stdexcept>
#include <string>

namespace ipstab {

// Base of every exception thrown by the library. The C API and the CLI map
// each subclass onto a status / exit code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or non-metric input data.
class InputError : public Error {
 public:
  using Error::Error;
};

// Input is well-formed but cannot support the requested operation
// (e.g. fewer distinct locations than clusters).
class DegenerateInputError : public InputError {
 public:
  using InputError::InputError;
};

// Invalid run configuration (incompatible algorithm/metric, bad flag values).
class ConfigError : public Error {
 public:
  using Error::Error;
};

// A size guard refused the work.
class ResourceError : public Error {
 public:
  using Error::Error;
};

// Caller violated a precondition of an operation.
class ContractError : public Error {
 public:
  using Error::Error;
};

}  // namespace ipstab

#endif  // IPSTAB_ERROR_HPP
