#pragma once

namespace bregcs {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace bregcs
