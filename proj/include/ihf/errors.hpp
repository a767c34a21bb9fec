#pragma once

#include <stdexcept>
#include <string>

namespace ihf {

// Error taxonomy mirrored by the CLI exit codes:
//   argument_error   -> usage (1)
//   parse_error      -> unreadable/ill-formed input document (2)
//   structural_error -> well-formed input that violates a precondition (3)
//   internal_error   -> invariant the library itself guarantees failed (4)
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct argument_error : error {
  using error::error;
};

struct parse_error : error {
  using error::error;
};

struct structural_error : error {
  using error::error;
};

struct internal_error : error {
  using error::error;
};

}  // namespace ihf
