#pragma once

#include <stdexcept>
#include <string>

namespace daisy {

enum class ErrorKind {
  InvalidArgument,  // caller bug or bad parameter (width mismatch, unknown family, ...)
  CapExceeded,      // a configured size cap would be exceeded
  Format,           // malformed input file or inconsistent files
  NotConnected,     // graph is disconnected
  NotDaisy,         // input is not a daisy cube or an algorithm invariant was violated
};

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

}  // namespace daisy
