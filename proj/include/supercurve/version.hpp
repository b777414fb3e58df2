#pragma once

namespace supercurve {
inline constexpr const char* kVersion = "1.0.0";
}
