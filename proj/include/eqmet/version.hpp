#pragma once

namespace eqmet {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace eqmet
