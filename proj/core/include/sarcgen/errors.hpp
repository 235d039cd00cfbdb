#pragma once

#include <stdexcept>
#include <string>

namespace sarcgen {

// Base class for every error raised by the toolkit. kind() is a stable
// machine-readable name used in traces and CLI diagnostics.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
  virtual const char* kind() const noexcept { return "Error"; }
};

class EmptyInput : public Error {
public:
  using Error::Error;
  const char* kind() const noexcept override { return "EmptyInput"; }
};

class LexiconParseError : public Error {
public:
  using Error::Error;
  const char* kind() const noexcept override { return "LexiconParseError"; }
};

class CorpusParseError : public Error {
public:
  using Error::Error;
  const char* kind() const noexcept override { return "CorpusParseError"; }
};

class NoReversalTarget : public Error {
public:
  using Error::Error;
  const char* kind() const noexcept override { return "NoReversalTarget"; }
};

class AntonymMissing : public Error {
public:
  using Error::Error;
  const char* kind() const noexcept override { return "AntonymMissing"; }
};

class NoConcept : public Error {
public:
  using Error::Error;
  const char* kind() const noexcept override { return "NoConcept"; }
};

class NoContext : public Error {
public:
  using Error::Error;
  const char* kind() const noexcept override { return "NoContext"; }
};

class BackendUnavailable : public Error {
public:
  using Error::Error;
  const char* kind() const noexcept override { return "BackendUnavailable"; }
};

class BackendMalformed : public Error {
public:
  using Error::Error;
  const char* kind() const noexcept override { return "BackendMalformed"; }
};

class ItemMismatch : public Error {
public:
  using Error::Error;
  const char* kind() const noexcept override { return "ItemMismatch"; }
};

class DegenerateInput : public Error {
public:
  using Error::Error;
  const char* kind() const noexcept override { return "DegenerateInput"; }
};

// Bad flag combinations, unreadable resource files, missing backends.
class ConfigError : public Error {
public:
  using Error::Error;
  const char* kind() const noexcept override { return "ConfigError"; }
};

}  // namespace sarcgen
