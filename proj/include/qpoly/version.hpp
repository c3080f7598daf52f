#pragma once

namespace qpoly {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace qpoly
