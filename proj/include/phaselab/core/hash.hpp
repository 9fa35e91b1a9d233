#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace phaselab {

inline std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

inline std::string hex64(std::uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = digits[v & 0xf];
    v >>= 4;
  }
  return out;
}

// Stable identifier for a serialized configuration; stamped into reports and
// checkpoints so outputs can be traced back to the exact settings.
inline std::string config_hash(std::string_view serialized) {
  return hex64(fnv1a64(serialized));
}

}  // namespace phaselab
