#pragma once

namespace gqm {

inline constexpr const char* kToolName = "gqm";
inline constexpr const char* kVersion = "0.1.0";

}  // namespace gqm
