#pragma once

#include <stdexcept>
#include <string>

namespace modseries {

enum class ErrorKind {
  field,
  shape,
  range,
  invalid_submodule,
  degenerate_input,
  resource,
  precondition,
  series_validation,
  unsupported_input,
  incomparable_label,
  parse,
  internal,
};

const char* to_string(ErrorKind kind);

// Every failure raised by the library. what() reads "<kind> error: <detail>".
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail);

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

}  // namespace modseries
