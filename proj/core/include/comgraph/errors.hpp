#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace comgraph {

/// Base class for every recoverable error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Closure enumeration produced more elements than the configured cap.
class OrderCapExceeded : public Error {
 public:
  explicit OrderCapExceeded(std::size_t cap)
      : Error("group order exceeds cap of " + std::to_string(cap)), cap_(cap) {}
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t cap_;
};

class IncompatibleGenerators : public Error {
 public:
  using Error::Error;
};

class UnsupportedParams : public Error {
 public:
  using Error::Error;
};

class NotValidPrime : public Error {
 public:
  using Error::Error;
};

class SingularGenerator : public Error {
 public:
  using Error::Error;
};

class InvalidPhi : public Error {
 public:
  using Error::Error;
};

class EmptyGraph : public Error {
 public:
  using Error::Error;
};

class CentralVertex : public Error {
 public:
  using Error::Error;
};

/// A witness search came back empty where a lemma guarantees one.
class NoWitness : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace comgraph
