#pragma once

namespace perc {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace perc
