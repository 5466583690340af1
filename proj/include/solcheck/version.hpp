#pragma once

namespace solcheck {

inline constexpr const char* kToolVersion = "0.1.0";

}
