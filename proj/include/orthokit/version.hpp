#ifndef ORTHOKIT_VERSION_HPP
#define ORTHOKIT_VERSION_HPP

namespace orthokit {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace orthokit

#endif  // ORTHOKIT_VERSION_HPP
