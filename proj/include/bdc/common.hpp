#ifndef BDC_COMMON_HPP
#define BDC_COMMON_HPP

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace bdc {

/// Thrown when an operator denominator fails the strict-positivity guard.
class strict_positivity_error : public std::runtime_error {
 public:
  explicit strict_positivity_error(const std::string& what)
      : std::runtime_error(what) {}
};

/// Thrown on invalid experiment / operator configuration (dominance
/// failures, unresolvable descriptors).  The CLI maps this to exit code 2.
class config_error : public std::runtime_error {
 public:
  explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

/// x^p for small integer p, 0^0 == 1.
inline double pow_int(double x, int p) {
  if (p < 0) return 1.0 / pow_int(x, -p);
  double r = 1.0;
  double b = x;
  while (p > 0) {
    if (p & 1) r *= b;
    b *= b;
    p >>= 1;
  }
  return r;
}

/// Deterministic uniform double in [0,1) from a raw 64-bit draw.  Used
/// instead of std::uniform_real_distribution so seeded output is stable
/// across standard library implementations.
inline double uniform01(std::uint64_t bits) {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

}  // namespace bdc

#endif
