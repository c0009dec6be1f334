#pragma once

namespace rshare {

inline constexpr const char* kVersion = "1.0.0";

} // namespace rshare
