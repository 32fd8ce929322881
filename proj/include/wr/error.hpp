#pragma once

#include <stdexcept>
#include <string>

namespace wr {

// Error taxonomy, mirrored by the CLI exit codes:
//   parse_error     -> 2  (malformed input, bad flags, unknown subcommand)
//   precision_error -> 3  (root-depth overflow, window underflow, iteration
//                          caps, resource caps, indeterminate valuations)
//   domain_error    -> 4  (mathematical precondition violated: non-unit
//                          inversion, zero element where nonzero required,
//                          incompatible contexts, failed primitivity, ...)
struct error : std::runtime_error {
  explicit error(const std::string& m) : std::runtime_error(m) {}
};

struct parse_error : error {
  explicit parse_error(const std::string& m) : error("parse error: " + m) {}
};

struct precision_error : error {
  explicit precision_error(const std::string& m)
      : error("precision error: " + m) {}
};

struct domain_error : error {
  explicit domain_error(const std::string& m) : error("domain error: " + m) {}
};

}  // namespace wr
