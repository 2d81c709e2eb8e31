#pragma once

namespace ancss {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace ancss
