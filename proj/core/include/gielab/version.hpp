#pragma once

namespace gielab {

inline constexpr const char* version = "1.0.0";

} // namespace gielab
