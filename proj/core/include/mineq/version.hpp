#pragma once

namespace mineq {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace mineq
