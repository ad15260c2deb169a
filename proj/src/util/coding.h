#ifndef LKV_UTIL_CODING_H_
#define LKV_UTIL_CODING_H_

#include <cstdint>
#include <cstring>
#include <string>

#include "lkv/key.h"

namespace lkv {

// Little-endian fixed-width integer encoding. Keys are the one exception
// store-wide and use big-endian (see lkv/key.h).

inline void PutFixed32(std::string* dst, uint32_t v) {
  char buf[4];
  buf[0] = static_cast<char>(v);
  buf[1] = static_cast<char>(v >> 8);
  buf[2] = static_cast<char>(v >> 16);
  buf[3] = static_cast<char>(v >> 24);
  dst->append(buf, 4);
}

inline void PutFixed64(std::string* dst, uint64_t v) {
  char buf[8];
  for (int i = 0; i < 8; i++) buf[i] = static_cast<char>(v >> (8 * i));
  dst->append(buf, 8);
}

inline uint32_t DecodeFixed32(const char* p) {
  const uint8_t* u = reinterpret_cast<const uint8_t*>(p);
  return static_cast<uint32_t>(u[0]) | (static_cast<uint32_t>(u[1]) << 8) |
         (static_cast<uint32_t>(u[2]) << 16) |
         (static_cast<uint32_t>(u[3]) << 24);
}

inline uint64_t DecodeFixed64(const char* p) {
  uint64_t v = 0;
  const uint8_t* u = reinterpret_cast<const uint8_t*>(p);
  for (int i = 7; i >= 0; i--) v = (v << 8) | u[i];
  return v;
}

inline void PutFixed64(char* dst, uint64_t v) {
  for (int i = 0; i < 8; i++) dst[i] = static_cast<char>(v >> (8 * i));
}

inline void PutFixed32(char* dst, uint32_t v) {
  for (int i = 0; i < 4; i++) dst[i] = static_cast<char>(v >> (8 * i));
}

// 128-bit little-endian, used by the model file encoding.
inline void PutFixed128LE(std::string* dst, KeyInt v) {
  char buf[16];
  for (int i = 0; i < 16; i++) buf[i] = static_cast<char>(v >> (8 * i));
  dst->append(buf, 16);
}

inline KeyInt DecodeFixed128LE(const char* p) {
  KeyInt v = 0;
  const uint8_t* u = reinterpret_cast<const uint8_t*>(p);
  for (int i = 15; i >= 0; i--) v = (v << 8) | u[i];
  return v;
}

inline void PutDouble(std::string* dst, double d) {
  uint64_t bits;
  std::memcpy(&bits, &d, 8);
  PutFixed64(dst, bits);
}

inline double DecodeDouble(const char* p) {
  uint64_t bits = DecodeFixed64(p);
  double d;
  std::memcpy(&d, &bits, 8);
  return d;
}

}  // namespace lkv

#endif  // LKV_UTIL_CODING_H_
