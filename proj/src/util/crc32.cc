#include "util/crc32.h"

#include <zlib.h>

namespace lkv {

uint32_t Crc32(const char* data, size_t n) {
  return static_cast<uint32_t>(
      crc32(0L, reinterpret_cast<const Bytef*>(data), static_cast<uInt>(n)));
}

}  // namespace lkv
