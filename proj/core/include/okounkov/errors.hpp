#pragma once

#include <stdexcept>
#include <string>

namespace okounkov {

/** Base class for every error raised by the library. */
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/** Operands of incompatible shape or ambient dimension. */
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/** Malformed or out-of-domain input data. */
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/** Requested model lies beyond what the built-in curve lists describe. */
class UnsupportedGenerality : public Error {
 public:
  using Error::Error;
};

/** Toric divisor carries a nonzero coefficient on a flag ray. */
class UnrepresentedDivisor : public Error {
 public:
  using Error::Error;
};

/** A class failed a positivity precondition (nef, psef, big). */
class PositivityError : public Error {
 public:
  using Error::Error;
};

/** Zariski support matrix was singular or not negative definite. */
class SingularSupport : public Error {
 public:
  using Error::Error;
};

/** A value would need an algebraic number of degree above two. */
class DegreeOverflow : public Error {
 public:
  using Error::Error;
};

}  // namespace okounkov
