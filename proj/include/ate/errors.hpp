#pragma once

#include <stdexcept>
#include <string>

namespace ate {

/// Bad user input: malformed config, invalid parameter, out-of-range index.
class ConfigError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// A computation could not produce a trustworthy result.
class NumericalError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Ground state gap fell below the configured floor.
class DegenerateSpectrumError : public NumericalError {
  public:
    using NumericalError::NumericalError;
};

/// Dense oracle would exceed the dimension cap.
class DimensionCapError : public NumericalError {
  public:
    using NumericalError::NumericalError;
};

} // namespace ate
