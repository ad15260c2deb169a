#ifndef LKV_TABLE_FORMAT_H_
#define LKV_TABLE_FORMAT_H_

#include <cstdint>
#include <string>

#include "lkv/key.h"
#include "lkv/status.h"

namespace lkv {

// Location of one value in the value log. Encodes to exactly 16 bytes:
//   [vlog_file_id_and_flags u32 | offset u64 | length u32]
// The tombstone flag rides the top bit of the file-id word, so vlog file ids
// must stay below 2^31.
struct ValuePointer {
  uint32_t vlog_file_id = 0;
  uint64_t offset = 0;
  uint32_t length = 0;
  uint8_t flags = 0;

  static constexpr uint8_t kTombstoneFlag = 0x1;
  static constexpr size_t kEncodedSize = 16;

  bool tombstone() const { return (flags & kTombstoneFlag) != 0; }

  static ValuePointer Tombstone() {
    ValuePointer p;
    p.flags = kTombstoneFlag;
    return p;
  }

  bool operator==(const ValuePointer& o) const {
    return vlog_file_id == o.vlog_file_id && offset == o.offset &&
           length == o.length && flags == o.flags;
  }
};

void EncodeValuePointer(const ValuePointer& p, char* dst);
ValuePointer DecodeValuePointer(const char* src);

// SSTable records are fixed size: key (big-endian) followed by the pointer.
inline constexpr size_t RecordSize(size_t key_size) {
  return key_size + ValuePointer::kEncodedSize;
}

inline constexpr size_t kBlockTargetBytes = 4096;

inline constexpr size_t RecordsPerBlock(size_t key_size) {
  return kBlockTargetBytes / RecordSize(key_size) == 0
             ? 1
             : kBlockTargetBytes / RecordSize(key_size);
}

// SSTable footer:
//   index_off u64 | index_len u32 | filter_off u64 | filter_len u32 | "BSST"
inline constexpr char kSstMagic[4] = {'B', 'S', 'S', 'T'};
inline constexpr size_t kFooterBytes = 8 + 4 + 8 + 4 + 4;

// Index block entry: last key of the data block, then the block's byte
// position within the file.
//   [last_key key_size BE | offset u64 | size u32]
inline constexpr size_t IndexEntrySize(size_t key_size) {
  return key_size + 12;
}

}  // namespace lkv

#endif  // LKV_TABLE_FORMAT_H_
