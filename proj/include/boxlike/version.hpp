#pragma once

#include <string_view>

namespace boxlike {

inline constexpr std::string_view kToolName = "boxdim";
inline constexpr std::string_view kToolVersion = "0.1.0";

}  // namespace boxlike
