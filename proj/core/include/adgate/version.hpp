#pragma once

namespace adgate {

inline constexpr const char* kToolkitVersion = "0.1.0";

// Bumped whenever any on-disk JSON/JSONL layout changes shape.
inline constexpr int kSchemaVersion = 1;

}  // namespace adgate
