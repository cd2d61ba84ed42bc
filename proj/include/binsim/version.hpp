#pragma once

namespace binsim {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace binsim
