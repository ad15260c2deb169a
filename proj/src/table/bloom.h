#ifndef LKV_TABLE_BLOOM_H_
#define LKV_TABLE_BLOOM_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "lkv/key.h"
#include "lkv/status.h"

namespace lkv {

// Double-hashing bloom filter over fixed-size keys; one filter per sstable.
// No false negatives for inserted keys.
class BloomFilter {
 public:
  static constexpr uint32_t kDefaultBitsPerKey = 10;
  static constexpr uint32_t kDefaultHashes = 7;

  BloomFilter() = default;

  static BloomFilter Build(const std::vector<KeyInt>& keys, size_t key_size,
                           uint32_t bits_per_key = kDefaultBitsPerKey,
                           uint32_t hashes = kDefaultHashes);

  bool MayContain(KeyInt key, size_t key_size) const;

  // Block encoding: [hashes u32 | bit_count u64 | bit bytes].
  void EncodeTo(std::string* dst) const;
  static Status DecodeFrom(std::string_view data, BloomFilter* out);

  uint64_t bit_count() const { return bit_count_; }
  uint32_t hashes() const { return hashes_; }

 private:
  uint64_t bit_count_ = 0;
  uint32_t hashes_ = kDefaultHashes;
  std::string bits_;
};

}  // namespace lkv

#endif  // LKV_TABLE_BLOOM_H_
