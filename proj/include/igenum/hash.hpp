#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>

namespace igenum {

/// Order-dependent mix of small integer fields (splitmix64 finalizer).
inline std::size_t hash_fields(std::initializer_list<std::int64_t> fields) noexcept {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL;
  for (std::int64_t f : fields) {
    h ^= static_cast<std::uint64_t>(f) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h ^= h >> 30;
    h *= 0xbf58476d1ce4e5b9ULL;
    h ^= h >> 27;
    h *= 0x94d049bb133111ebULL;
    h ^= h >> 31;
  }
  return static_cast<std::size_t>(h);
}

}  // namespace igenum
