#pragma once

#include <stdexcept>
#include <string>

namespace spanforge {

/// Base class for all toolkit errors.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Bad configuration or failed pre-run validation (CLI exit code 2).
class ConfigError : public Error {
public:
  using Error::Error;
};

/// Problems with input data: corpora, annotations, lexicons, model files
/// (CLI exit code 3).
class DataError : public Error {
public:
  using Error::Error;
};

class ParseError : public DataError {
public:
  using DataError::DataError;
};

class LoadError : public DataError {
public:
  using DataError::DataError;
};

class CorpusError : public DataError {
public:
  using DataError::DataError;
};

class SamplingError : public DataError {
public:
  using DataError::DataError;
};

class TrainingError : public DataError {
public:
  using DataError::DataError;
};

} // namespace spanforge
