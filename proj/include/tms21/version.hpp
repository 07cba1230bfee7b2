#pragma once

namespace tms21 {

inline constexpr const char* kVersion = "tms21 0.1.0";

}
