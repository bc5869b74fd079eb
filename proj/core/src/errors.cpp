#include "adgate/errors.hpp"

namespace adgate {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_argument: return "invalid_argument";
    case ErrorCode::transport_error: return "transport_error";
    case ErrorCode::malformed_response: return "malformed_response";
    case ErrorCode::validation_exhausted: return "validation_exhausted";
    case ErrorCode::already_injected: return "already_injected";
    case ErrorCode::group_incompatible: return "group_incompatible";
    case ErrorCode::insufficient_sources: return "insufficient_sources";
    case ErrorCode::not_enough_poison: return "not_enough_poison";
    case ErrorCode::slogan_collision: return "slogan_collision";
    case ErrorCode::template_render_error: return "template_render_error";
    case ErrorCode::invalid_dataset: return "invalid_dataset";
    case ErrorCode::unknown_domain: return "unknown_domain";
    case ErrorCode::missing_labels: return "missing_labels";
    case ErrorCode::config_error: return "config_error";
    case ErrorCode::io_error: return "io_error";
  }
  return "unknown";
}

}  // namespace adgate
