#pragma once

namespace mixtype {

inline constexpr const char* kVersion = "0.1.0";

} // namespace mixtype
