#pragma once

namespace ionsaddles {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace ionsaddles
