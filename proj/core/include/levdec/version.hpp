// SPDX-License-Identifier: MIT
#pragma once

#include <string_view>

namespace levdec {

inline constexpr std::string_view kVersionString = "0.1.0";

}  // namespace levdec
