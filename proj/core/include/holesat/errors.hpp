#pragma once

#include <stdexcept>
#include <string>

namespace holesat {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class CollinearInput : public Error {
public:
  using Error::Error;
};

class PreconditionViolated : public Error {
public:
  using Error::Error;
};

class BoundExceeded : public Error {
public:
  using Error::Error;
};

class InvalidAssignment : public Error {
public:
  using Error::Error;
};

class UnsupportedVariant : public Error {
public:
  using Error::Error;
};

class IoFailure : public Error {
public:
  using Error::Error;
};

class WindowTooLong : public Error {
public:
  using Error::Error;
};

class AxiomViolation : public Error {
public:
  using Error::Error;
};

class ResourceLimit : public Error {
public:
  using Error::Error;
};

class SolverCrashed : public Error {
public:
  using Error::Error;
};

class CheckerRejected : public Error {
public:
  using Error::Error;
};

} // namespace holesat
