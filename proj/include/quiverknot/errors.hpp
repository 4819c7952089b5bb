#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace quiverknot {

// Exit code the CLI maps each error family onto.
enum class ErrorClass { usage = 2, data = 3, internal = 4 };

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual ErrorClass error_class() const noexcept { return ErrorClass::data; }
};

class InvalidParameter : public Error {
 public:
  using Error::Error;
  ErrorClass error_class() const noexcept override { return ErrorClass::usage; }
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at offset " + std::to_string(position) + ")"), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class StructuralError : public Error {
 public:
  using Error::Error;
};

class UnsupportedError : public Error {
 public:
  using Error::Error;
};

class LoadError : public Error {
 public:
  LoadError(std::string entry, const std::string& what)
      : Error("catalog entry '" + entry + "': " + what), entry_(std::move(entry)) {}
  const std::string& entry() const noexcept { return entry_; }

 private:
  std::string entry_;
};

// Raised when an internal consistency check fails; never a user error.
class InternalError : public Error {
 public:
  using Error::Error;
  ErrorClass error_class() const noexcept override { return ErrorClass::internal; }
};

}  // namespace quiverknot
