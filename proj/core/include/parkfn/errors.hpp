#pragma once

#include <stdexcept>
#include <string>

namespace parkfn {

// Base class of every typed error thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotAParkingFunction : Error {
  using Error::Error;
};

struct MalformedForest : Error {
  using Error::Error;
};

struct MalformedTree : Error {
  using Error::Error;
};

struct SizeCapExceeded : Error {
  using Error::Error;
};

struct ArityMismatch : Error {
  using Error::Error;
};

struct ParameterOutOfRange : Error {
  using Error::Error;
};

struct InconsistentPair : Error {
  using Error::Error;
};

struct WrongColorParameters : Error {
  using Error::Error;
};

struct EmptySample : Error {
  using Error::Error;
};

struct BadParameter : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

}  // namespace parkfn
