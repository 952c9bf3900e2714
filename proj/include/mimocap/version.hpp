#pragma once

namespace mimocap {

inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace mimocap
