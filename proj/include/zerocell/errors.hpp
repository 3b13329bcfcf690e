#pragma once

#include <stdexcept>
#include <string>

namespace zerocell {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class PreconditionViolation : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class EmptyRegion : public Error {
 public:
  using Error::Error;
};

class UnboundedRegion : public Error {
 public:
  using Error::Error;
};

/// The density spec does not describe g on a component that carries mass.
class SpecMismatch : public Error {
 public:
  using Error::Error;
};

/// (set, density) pair outside the sampler / exact-formula whitelist.
class UnsupportedSpec : public Error {
 public:
  using Error::Error;
};

class SamplerStall : public Error {
 public:
  using Error::Error;
};

class MissingDensityBound : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace zerocell
