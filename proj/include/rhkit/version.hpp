#pragma once

namespace rhkit {

inline constexpr const char* library_version = "0.1.0";

}  // namespace rhkit
