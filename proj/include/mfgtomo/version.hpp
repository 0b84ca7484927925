#pragma once

namespace mfgtomo {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace mfgtomo
