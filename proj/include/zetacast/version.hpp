#pragma once

namespace zetacast {

inline constexpr const char* kVersion = "0.1.0";

} // namespace zetacast
