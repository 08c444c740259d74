#pragma once

namespace tropmod {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace tropmod
