#pragma once

namespace qmono {

inline constexpr char kVersion[] = "0.1.0";

} // namespace qmono
