#ifndef LKV_TABLE_SSTABLE_H_
#define LKV_TABLE_SSTABLE_H_

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "lkv/key.h"
#include "lkv/status.h"
#include "table/bloom.h"
#include "table/format.h"
#include "util/file_io.h"

namespace lkv {

struct SstableBuildResult {
  KeyInt min_key = 0;
  KeyInt max_key = 0;
  uint64_t record_count = 0;
  uint64_t file_bytes = 0;
};

// Streams sorted fixed-size records into an sstable file:
//   [data blocks][index block][filter block][footer]
// Blocks pack back to back with no padding, so the data region is one
// contiguous array of record_size-byte records; a record's byte offset is
// just index * record_size.
class SstableBuilder {
 public:
  SstableBuilder(std::string path, size_t key_size);

  // Keys must be strictly ascending.
  Status Add(KeyInt key, const ValuePointer& vptr);

  Status Finish(SstableBuildResult* result);
  Status Abandon();

  uint64_t record_count() const { return record_count_; }
  uint64_t data_bytes() const { return record_count_ * record_size_; }

 private:
  std::string path_;
  size_t key_size_;
  size_t record_size_;
  size_t records_per_block_;

  std::string data_;
  std::vector<KeyInt> keys_;
  std::vector<KeyInt> block_last_keys_;
  uint64_t record_count_ = 0;
  bool finished_ = false;
};

// Immutable open sstable. The index and filter blocks are parsed once at
// open and held in memory; data reads go through pread.
class SstableReader {
 public:
  static Status Open(const std::string& path, size_t key_size,
                     std::unique_ptr<SstableReader>* out);

  struct BlockHandle {
    size_t block_index = 0;
    uint64_t offset = 0;
    uint32_t size = 0;
    uint64_t first_record = 0;
    uint64_t record_count = 0;
  };

  // First block whose last key >= key; nullopt when key > file max.
  std::optional<BlockHandle> SearchIndexBlock(KeyInt key) const;

  bool MayContain(KeyInt key) const {
    return filter_.MayContain(key, key_size_);
  }

  Status LoadBlock(const BlockHandle& h, std::string* out) const;

  // Records lo..hi inclusive. Offsets derive from record_size arithmetic;
  // when the range spans blocks the index supplies the block positions.
  Status LoadRecordRange(uint64_t lo, uint64_t hi, std::string* out) const;

  Status ReadRecord(uint64_t index, KeyInt* key, ValuePointer* vptr) const;

  // Sequential scan support: reads one block's records into out.
  Status ReadBlockRecords(size_t block_index,
                          std::vector<std::pair<KeyInt, ValuePointer>>* out) const;

  uint64_t record_count() const { return record_count_; }
  size_t block_count() const { return index_.size(); }
  size_t key_size() const { return key_size_; }
  size_t record_size() const { return record_size_; }
  uint64_t file_bytes() const { return file_->Size(); }
  KeyInt block_last_key(size_t block_index) const {
    return index_[block_index].last_key;
  }

  // Decodes record `i` from a buffer that starts at record `base`.
  void ParseRecord(const std::string& buf, uint64_t base, uint64_t i,
                   KeyInt* key, ValuePointer* vptr) const;

 private:
  struct IndexEntry {
    KeyInt last_key;
    uint64_t offset;
    uint32_t size;
    uint64_t first_record;
  };

  SstableReader(std::unique_ptr<RandomAccessFile> file, size_t key_size)
      : file_(std::move(file)),
        key_size_(key_size),
        record_size_(RecordSize(key_size)) {}

  Status Init();

  std::unique_ptr<RandomAccessFile> file_;
  size_t key_size_;
  size_t record_size_;
  uint64_t data_bytes_ = 0;
  uint64_t record_count_ = 0;
  std::vector<IndexEntry> index_;
  BloomFilter filter_;
};

}  // namespace lkv

#endif  // LKV_TABLE_SSTABLE_H_
