#include "modseries/error.hpp"

namespace modseries {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::field: return "field";
    case ErrorKind::shape: return "shape";
    case ErrorKind::range: return "range";
    case ErrorKind::invalid_submodule: return "invalid-submodule";
    case ErrorKind::degenerate_input: return "degenerate-input";
    case ErrorKind::resource: return "resource";
    case ErrorKind::precondition: return "precondition";
    case ErrorKind::series_validation: return "series-validation";
    case ErrorKind::unsupported_input: return "unsupported-input";
    case ErrorKind::incomparable_label: return "incomparable-label";
    case ErrorKind::parse: return "parse";
    case ErrorKind::internal: return "internal";
  }
  return "unknown";
}

Error::Error(ErrorKind kind, const std::string& detail)
    : std::runtime_error(std::string(to_string(kind)) + " error: " + detail),
      kind_(kind),
      detail_(detail) {}

}  // namespace modseries
