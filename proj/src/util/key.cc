#include "lkv/key.h"

#include <algorithm>

namespace lkv {

std::string KeyToString(KeyInt key) {
  if (key == 0) return "0";
  std::string out;
  while (key > 0) {
    out.push_back(static_cast<char>('0' + static_cast<int>(key % 10)));
    key /= 10;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

bool ParseKey(std::string_view text, KeyInt* key) {
  if (text.empty()) return false;
  constexpr KeyInt kMax = ~static_cast<KeyInt>(0);
  KeyInt v = 0;
  for (char c : text) {
    if (c < '0' || c > '9') return false;
    int digit = c - '0';
    if (v > (kMax - digit) / 10) return false;
    v = v * 10 + digit;
  }
  *key = v;
  return true;
}

}  // namespace lkv
