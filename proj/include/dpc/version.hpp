#pragma once

namespace dpc {

inline constexpr const char* kToolName = "dpc-sim";
inline constexpr const char* kToolVersion = "1.0.0";

} // namespace dpc
