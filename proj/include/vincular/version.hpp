#pragma once

namespace vincular {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace vincular
