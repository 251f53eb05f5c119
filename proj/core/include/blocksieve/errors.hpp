#pragma once

#include <stdexcept>
#include <string>

namespace blocksieve {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed JSON input or a value that breaks a schema invariant.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A precondition on the arguments of an operation does not hold.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// The search would exceed a configured level or node cap.
class SearchLimitError : public Error {
 public:
  using Error::Error;
};

/// The coradical does not split into full matrix coalgebras over the rationals.
class NonSplitError : public Error {
 public:
  using Error::Error;
};

}  // namespace blocksieve
