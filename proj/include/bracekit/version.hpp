#pragma once

namespace bracekit {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr const char* kGeneratorName = "bracekit 0.1.0";

}  // namespace bracekit
