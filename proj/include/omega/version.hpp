#pragma once

namespace omega {

inline constexpr const char* kVersion = "0.1.0";

// Top-level "schema" field of every JSON document this tool emits.
inline constexpr const char* kSchema = "omega/1";

}  // namespace omega
