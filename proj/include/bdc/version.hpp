#ifndef BDC_VERSION_HPP
#define BDC_VERSION_HPP

namespace bdc {
inline constexpr const char* kVersion = "0.1.0";
}

#endif
