#pragma once

#include <stdexcept>
#include <string>

namespace codemark {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input violated a documented precondition.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A file or record could not be decoded.
class FormatError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

class NotApplicable : public Error {
 public:
  using Error::Error;
};

/// The rule has no deterministic transformer; only a model backend can apply it.
class EngineUnsupported : public Error {
 public:
  using Error::Error;
};

class NetworkError : public Error {
 public:
  using Error::Error;
};

/// A model reply did not contain the expected payload.
class ParseError : public Error {
 public:
  using Error::Error;
};

class MockUnsupported : public Error {
 public:
  using Error::Error;
};

class EmbeddingFailed : public Error {
 public:
  using Error::Error;
};

class CredentialError : public Error {
 public:
  using Error::Error;
};

}  // namespace codemark
