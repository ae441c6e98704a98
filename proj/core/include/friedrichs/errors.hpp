#pragma once

#include <stdexcept>
#include <string>

namespace friedrichs {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidDimension : Error {
  using Error::Error;
};

struct DegenerateForm : Error {
  using Error::Error;
};

struct NotADirectSum : Error {
  using Error::Error;
};

struct NotBijectiveRealisation : Error {
  using Error::Error;
};

struct NotMBoundary : Error {
  using Error::Error;
};

struct InvalidW2 : Error {
  using Error::Error;
};

struct NotAGenerator : Error {
  using Error::Error;
};

struct NotInvertible : Error {
  using Error::Error;
};

struct InvalidParameter : Error {
  using Error::Error;
};

}  // namespace friedrichs
