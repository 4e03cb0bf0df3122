#pragma once

#include <stdexcept>
#include <string>

namespace fusionburnside {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad permutation images, unparsable files, mismatched tables.
class InputError : public Error {
public:
  using Error::Error;
};

/// A configured size cap was exceeded.
class SizeError : public Error {
public:
  using Error::Error;
};

/// A caller-side precondition does not hold.
class PreconditionError : public Error {
public:
  using Error::Error;
};

/// An internal invariant failed. Never expected on valid input.
class InvariantError : public Error {
public:
  using Error::Error;
};

/// A mark vector violates the congruences cutting out the image of the mark
/// homomorphism.
class NotInImageError : public Error {
public:
  using Error::Error;
};

/// A Burnside ring element is not stable under the fusion system.
class StabilityError : public Error {
public:
  using Error::Error;
};

} // namespace fusionburnside
