#ifndef VEXL_VERSION_HPP
#define VEXL_VERSION_HPP

namespace vexl {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace vexl

#endif  // VEXL_VERSION_HPP
