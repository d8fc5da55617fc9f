#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace failnet {

// FNV-1a 64-bit, hex encoded. Audit-trail fingerprint, not cryptographic.
inline std::string digest(std::string_view payload) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : payload) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  static const char *hex = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = hex[hash & 0xf];
    hash >>= 4;
  }
  return out;
}

} // namespace failnet
