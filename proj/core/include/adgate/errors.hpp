#pragma once

#include <stdexcept>
#include <string>

namespace adgate {

/// Failure classes surfaced across the toolkit. The CLI maps these onto
/// distinct process exit codes, so additions here need a mapping there too.
enum class ErrorCode {
  invalid_argument,
  transport_error,
  malformed_response,
  validation_exhausted,
  already_injected,
  group_incompatible,
  insufficient_sources,
  not_enough_poison,
  slogan_collision,
  template_render_error,
  invalid_dataset,
  unknown_domain,
  missing_labels,
  config_error,
  io_error,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace adgate
