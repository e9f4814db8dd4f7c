#pragma once

namespace gintail {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace gintail
