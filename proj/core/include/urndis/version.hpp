#pragma once

namespace urndis {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace urndis
