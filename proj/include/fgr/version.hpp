#ifndef FGR_VERSION_HPP
#define FGR_VERSION_HPP

namespace fgr {
inline constexpr const char* kVersion = "0.1.0";
}

#endif
