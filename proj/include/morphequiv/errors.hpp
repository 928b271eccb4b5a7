#pragma once

#include <stdexcept>
#include <string>

namespace morphequiv {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// An identifier that names no object, cell, element or family member.
class UnknownId : public Error {
public:
  explicit UnknownId(const std::string& id) : Error("unknown id: " + id), id_(id) {}
  const std::string& id() const noexcept { return id_; }

private:
  std::string id_;
};

class NotComposable : public Error {
public:
  using Error::Error;
};

/// Tables that fail an axiom of the structure they claim to be.
class LawViolation : public Error {
public:
  using Error::Error;
};

class InvalidPremise : public Error {
public:
  using Error::Error;
};

class DimensionMismatch : public Error {
public:
  using Error::Error;
};

class ClassViolation : public Error {
public:
  using Error::Error;
};

class NotAFrame : public Error {
public:
  using Error::Error;
};

class NotUnitary : public Error {
public:
  using Error::Error;
};

class BadPhase : public Error {
public:
  using Error::Error;
};

class NotParallel : public Error {
public:
  using Error::Error;
};

class InvalidCell : public Error {
public:
  using Error::Error;
};

class UnknownElement : public Error {
public:
  explicit UnknownElement(const std::string& id) : Error("unknown element: " + id) {}
};

/// Malformed input document (bad JSON).
class ParseError : public Error {
public:
  using Error::Error;
};

/// Well-formed JSON that does not match the expected instance schema.
class SchemaError : public Error {
public:
  using Error::Error;
};

}  // namespace morphequiv
