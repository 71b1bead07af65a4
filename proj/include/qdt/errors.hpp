#pragma once

#include <stdexcept>
#include <string>

namespace qdt {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed arguments: mismatched vertex sets, n > N, zero dimension vector...
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// A mathematical precondition of the engine is violated (symmetry,
// genericity, framing parity). The CLI maps these to exit code 2.
class PreconditionViolation : public Error {
 public:
  using Error::Error;
};

class SymmetryViolation : public PreconditionViolation {
 public:
  using PreconditionViolation::PreconditionViolation;
};

class GenericityViolation : public PreconditionViolation {
 public:
  using PreconditionViolation::PreconditionViolation;
};

class EmptySlopeClass : public PreconditionViolation {
 public:
  using PreconditionViolation::PreconditionViolation;
};

class FramingViolation : public PreconditionViolation {
 public:
  using PreconditionViolation::PreconditionViolation;
};

class PoleError : public Error {
 public:
  using Error::Error;
};

// Evaluation of a motive with odd powers of v at a non-square value of L.
class OddParityEvaluation : public Error {
 public:
  using Error::Error;
};

class NonIntegralError : public Error {
 public:
  using Error::Error;
};

// Exponent parity does not match the moduli dimension in Betti extraction.
class ParityViolation : public Error {
 public:
  using Error::Error;
};

class GuardExceeded : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace qdt
