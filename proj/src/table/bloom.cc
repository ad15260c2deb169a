#include "table/bloom.h"

#include "util/coding.h"

namespace lkv {

namespace {

// FNV-1a over the encoded key bytes.
uint64_t HashKey(KeyInt key, size_t key_size) {
  char buf[kMaxKeySize];
  EncodeKey(key, key_size, buf);
  uint64_t h = 14695981039346656037ull;
  for (size_t i = 0; i < key_size; i++) {
    h ^= static_cast<uint8_t>(buf[i]);
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace

BloomFilter BloomFilter::Build(const std::vector<KeyInt>& keys,
                               size_t key_size, uint32_t bits_per_key,
                               uint32_t hashes) {
  BloomFilter f;
  f.hashes_ = hashes;
  uint64_t bits = static_cast<uint64_t>(keys.size()) * bits_per_key;
  if (bits < 64) bits = 64;
  f.bit_count_ = bits;
  f.bits_.assign((bits + 7) / 8, '\0');
  for (KeyInt key : keys) {
    uint64_t h = HashKey(key, key_size);
    const uint64_t step = (h >> 17) | (h << 47);
    for (uint32_t i = 0; i < hashes; i++) {
      uint64_t bit = h % bits;
      f.bits_[bit / 8] |= static_cast<char>(1u << (bit % 8));
      h += step;
    }
  }
  return f;
}

bool BloomFilter::MayContain(KeyInt key, size_t key_size) const {
  if (bit_count_ == 0) return false;
  uint64_t h = HashKey(key, key_size);
  const uint64_t step = (h >> 17) | (h << 47);
  for (uint32_t i = 0; i < hashes_; i++) {
    uint64_t bit = h % bit_count_;
    if ((bits_[bit / 8] & (1u << (bit % 8))) == 0) return false;
    h += step;
  }
  return true;
}

void BloomFilter::EncodeTo(std::string* dst) const {
  PutFixed32(dst, hashes_);
  PutFixed64(dst, bit_count_);
  dst->append(bits_);
}

Status BloomFilter::DecodeFrom(std::string_view data, BloomFilter* out) {
  if (data.size() < 12) return Status::Corruption("filter block too small");
  uint32_t hashes = DecodeFixed32(data.data());
  uint64_t bits = DecodeFixed64(data.data() + 4);
  if (hashes == 0 || hashes > 32) {
    return Status::Corruption("filter block: bad hash count");
  }
  if (data.size() != 12 + (bits + 7) / 8) {
    return Status::Corruption("filter block: length mismatch");
  }
  out->hashes_ = hashes;
  out->bit_count_ = bits;
  out->bits_.assign(data.data() + 12, data.size() - 12);
  return Status::OK();
}

}  // namespace lkv
