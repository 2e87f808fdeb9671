#pragma once

#include <stdexcept>
#include <string>

namespace hdpart {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid run configuration, including scale-guard refusals.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Input data is missing or incomplete for the requested computation.
class DataError : public Error {
 public:
  using Error::Error;
};

// A stored value lies outside a triangle's support region.
class SupportError : public Error {
 public:
  using Error::Error;
};

// A value that must be integral came out fractional.
class IntegralityError : public Error {
 public:
  using Error::Error;
};

// A conjectured identity or integrality property failed on computed data.
class ConjectureViolation : public Error {
 public:
  using Error::Error;
};

// Two independent computations of the same quantity disagree.
class MismatchError : public Error {
 public:
  using Error::Error;
};

}  // namespace hdpart
