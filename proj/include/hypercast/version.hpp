#pragma once

#include <string_view>

namespace hypercast {

inline constexpr std::string_view kVersion = "0.1.0";

}  // namespace hypercast
