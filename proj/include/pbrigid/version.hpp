#pragma once

namespace pbrigid {

inline constexpr char kVersion[] = "0.1.0";

} // namespace pbrigid
