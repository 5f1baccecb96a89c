#pragma once

#include <stdexcept>

namespace udcode {

/// Base class for all library errors.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Alphabet size outside the supported range (constructions need k >= 3).
class UnsupportedArityError : public Error {
  public:
    using Error::Error;
};

/// A configured resource limit (tuple enumeration, codeword storage) would be exceeded.
class CapacityError : public Error {
  public:
    using Error::Error;
};

/// Malformed or inconsistent input file.
class ParseError : public Error {
  public:
    using Error::Error;
};

/// Operation requires a uniquely decodable code and the input is not.
class NotUniquelyDecodableError : public Error {
  public:
    using Error::Error;
};

/// A sum word has no preimage under the code (not a valid channel output).
class NotAchievableError : public Error {
  public:
    using Error::Error;
};

/// A recursive decode step produced a value the recorded construction cannot explain.
class InconsistentTraceError : public Error {
  public:
    using Error::Error;
};

}  // namespace udcode
