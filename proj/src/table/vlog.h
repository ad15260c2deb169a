#ifndef LKV_TABLE_VLOG_H_
#define LKV_TABLE_VLOG_H_

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>

#include "lkv/key.h"
#include "lkv/status.h"
#include "table/format.h"
#include "util/file_io.h"

namespace lkv {

// Append-only value log, shared by every sstable in the store. Records:
//   [crc32 u32 | key key_size BE | value_len u32 | value]
// with the crc covering key through value. Single writer; readers may fetch
// any pointer returned by Append, including bytes still in the write buffer.
class VlogWriter {
 public:
  VlogWriter(std::string dir, size_t key_size, uint64_t max_file_bytes);

  // Resumes at `active_id` (next id when the directory is empty).
  Status Open(uint32_t active_id);

  Status Append(KeyInt key, std::string_view value, ValuePointer* ptr);

  // Serves reads for the active file, including unflushed bytes.
  Status ReadActive(const ValuePointer& ptr, uint32_t active_id, bool* served,
                    std::string* record_out);

  Status Flush();
  Status Sync();
  uint32_t active_id() const { return active_id_; }

 private:
  Status Roll();

  std::string dir_;
  size_t key_size_;
  uint64_t max_file_bytes_;

  std::mutex mu_;
  uint32_t active_id_ = 0;
  std::unique_ptr<AppendFile> file_;
  std::unique_ptr<RandomAccessFile> read_file_;
};

// Shared read side with a per-file descriptor cache.
class VlogReader {
 public:
  VlogReader(std::string dir, size_t key_size, VlogWriter* writer);

  // Verifies the crc and the stored key; returns the value.
  Status Read(const ValuePointer& ptr, KeyInt expected_key, std::string* value);

 private:
  Status ParseRecord(const std::string& buf, const ValuePointer& ptr,
                     KeyInt expected_key, std::string* value);

  std::string dir_;
  size_t key_size_;
  VlogWriter* writer_;

  std::mutex cache_mu_;
  std::map<uint32_t, std::shared_ptr<RandomAccessFile>> files_;
};

// Byte length of one vlog record for a value of `value_len` bytes.
inline uint64_t VlogRecordBytes(size_t key_size, uint64_t value_len) {
  return 4 + key_size + 4 + value_len;
}

}  // namespace lkv

#endif  // LKV_TABLE_VLOG_H_
