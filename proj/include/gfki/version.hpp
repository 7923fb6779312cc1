#pragma once

namespace gfki {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace gfki
