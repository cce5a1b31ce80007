#pragma once

#include <stdexcept>
#include <string>

namespace qlm {

/// Base class for every error raised by the library. Domain errors map to
/// exit code 1 in the CLI, configuration errors to exit code 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class OutOfDomain : public Error {
 public:
  using Error::Error;
};

class InvalidParams : public Error {
 public:
  using Error::Error;
};

class InvalidProfile : public Error {
 public:
  using Error::Error;
};

class NonMonotoneBridge : public Error {
 public:
  using Error::Error;
};

class NotAsymptoticallyFlat : public Error {
 public:
  using Error::Error;
};

class NoHorizon : public Error {
 public:
  using Error::Error;
};

class FlowObstruction : public Error {
 public:
  FlowObstruction(const std::string& what, double radius)
      : Error(what), radius_(radius) {}
  double radius() const noexcept { return radius_; }

 private:
  double radius_;
};

class BoundaryNotMeanConvex : public Error {
 public:
  using Error::Error;
};

/// Malformed configuration document.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Well-formed configuration that violates a constraint.
class ValidationError : public Error {
 public:
  using Error::Error;
};

}  // namespace qlm
