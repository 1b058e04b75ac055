#pragma once

#include <string_view>

namespace pcmtk {

inline constexpr std::string_view kToolkitVersion = "0.1.0";

}  // namespace pcmtk
