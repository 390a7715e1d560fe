#pragma once

#include <stdexcept>
#include <string>

namespace lexigauge {

// Base of every error thrown by the library. Callers that only care about
// "something went wrong with this input" can catch this one type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed file content: bad CSV row, non-numeric field, unknown enum code.
class ParseError : public Error {
 public:
  using Error::Error;
};

// A metric is undefined for the given input (empty text, L = 0, ...).
class UndefinedInputError : public Error {
 public:
  using Error::Error;
};

// A numeric parameter is outside its admissible domain.
class ParameterError : public Error {
 public:
  using Error::Error;
};

// Not enough points (or too degenerate) to fit a model.
class InsufficientDataError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

class FileNotFoundError : public IoError {
 public:
  using IoError::IoError;
};

class EncodingError : public Error {
 public:
  using Error::Error;
};

class MissingSourceError : public Error {
 public:
  using Error::Error;
};

}  // namespace lexigauge
