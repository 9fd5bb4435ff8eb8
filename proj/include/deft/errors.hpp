#ifndef DEFT_ERRORS_HPP
#define DEFT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace deft {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Shapes or dimensions of the operands do not agree.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// An argument is outside its documented range.
class InvalidArgumentError : public Error {
 public:
  using Error::Error;
};

/// Malformed, truncated, or unsupported image data.
class CodecError : public Error {
 public:
  using Error::Error;
};

/// Attempt to L2-normalize an all-zero vector.
class ZeroVectorError : public Error {
 public:
  using Error::Error;
};

/// Training produced a non-finite loss or gradient; the run is aborted.
class DivergenceError : public Error {
 public:
  using Error::Error;
};

/// Dataset or prediction files that cannot be used as given
/// (empty class, misaligned item ids, unsorted rows, ...).
class DataError : public Error {
 public:
  using Error::Error;
};

}  // namespace deft

#endif  // DEFT_ERRORS_HPP
