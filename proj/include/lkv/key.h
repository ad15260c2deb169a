#ifndef LKV_KEY_H_
#define LKV_KEY_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

namespace lkv {

// Keys are fixed-size byte strings whose bytewise order equals the numeric
// order of their big-endian integer interpretation. All internal arithmetic
// works on this 128-bit value.
using KeyInt = unsigned __int128;

inline constexpr size_t kDefaultKeySize = 16;
inline constexpr size_t kMaxKeySize = 16;

// Encodes the low `key_size` bytes of `key` big-endian into `dst`.
inline void EncodeKey(KeyInt key, size_t key_size, char* dst) {
  for (size_t i = 0; i < key_size; i++) {
    dst[i] = static_cast<char>(
        static_cast<uint8_t>(key >> (8 * (key_size - 1 - i))));
  }
}

inline KeyInt DecodeKey(const char* src, size_t key_size) {
  KeyInt key = 0;
  for (size_t i = 0; i < key_size; i++) {
    key = (key << 8) | static_cast<uint8_t>(src[i]);
  }
  return key;
}

inline std::string EncodeKeyString(KeyInt key, size_t key_size) {
  std::string s(key_size, '\0');
  EncodeKey(key, key_size, s.data());
  return s;
}

// True iff `key` fits in `key_size` bytes.
inline bool KeyFits(KeyInt key, size_t key_size) {
  if (key_size >= kMaxKeySize) return true;
  return (key >> (8 * key_size)) == 0;
}

// Decimal formatting; KeyInt exceeds the widths std streams understand.
std::string KeyToString(KeyInt key);
bool ParseKey(std::string_view text, KeyInt* key);

}  // namespace lkv

#endif  // LKV_KEY_H_
