#ifndef ADMKIT_VERSION_HPP
#define ADMKIT_VERSION_HPP

namespace admkit {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace admkit

#endif  // ADMKIT_VERSION_HPP
