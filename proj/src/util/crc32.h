#ifndef LKV_UTIL_CRC32_H_
#define LKV_UTIL_CRC32_H_

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace lkv {

uint32_t Crc32(const char* data, size_t n);

inline uint32_t Crc32(std::string_view s) { return Crc32(s.data(), s.size()); }

}  // namespace lkv

#endif  // LKV_UTIL_CRC32_H_
