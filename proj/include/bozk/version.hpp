#pragma once

namespace bozk {

inline constexpr const char* kVersion = "bozk-lab 0.1.0";

} // namespace bozk
