#pragma once

namespace ujac {

inline constexpr const char* kEngineVersion = "0.1.0";

}  // namespace ujac
