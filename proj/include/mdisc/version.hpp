#pragma once

namespace mdisc {
inline constexpr const char* kVersion = "0.1.0";
}
