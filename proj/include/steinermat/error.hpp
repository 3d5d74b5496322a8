#pragma once

#include <stdexcept>
#include <string>

namespace steinermat {

/// Base class for errors raised on malformed external input.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class ParseErrorKind {
  kEmpty,
  kBadToken,
  kNonContiguousLabels,
  kCycle,
  kDisconnected,
};

const char* to_string(ParseErrorKind kind);

class ParseError : public Error {
 public:
  ParseError(ParseErrorKind kind, const std::string& what)
      : Error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ParseErrorKind kind() const noexcept { return kind_; }

 private:
  ParseErrorKind kind_;
};

}  // namespace steinermat
