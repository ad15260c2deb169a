#ifndef LKV_TABLE_MANIFEST_H_
#define LKV_TABLE_MANIFEST_H_

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "lkv/key.h"
#include "lkv/status.h"
#include "util/file_io.h"

namespace lkv {

inline constexpr int kNumLevels = 7;

struct ManifestFileRecord {
  int level = 0;
  uint64_t file_id = 0;
  uint64_t record_count = 0;
  uint64_t file_bytes = 0;
  KeyInt min_key = 0;
  KeyInt max_key = 0;
};

// One atomic change to the live-file set: a flush adds one or more files, a
// compaction deletes its inputs and adds its outputs in a single edit.
struct VersionEdit {
  std::vector<std::pair<int, uint64_t>> deleted;  // (level, file_id)
  std::vector<ManifestFileRecord> added;
};

// Durable record of live files per level. Length-prefixed, crc-protected
// edit records; replay stops cleanly at a truncated or corrupt tail.
class ManifestWriter {
 public:
  static Status Open(const std::string& path,
                     std::unique_ptr<ManifestWriter>* out);
  Status Append(const VersionEdit& edit);
  Status Sync();

 private:
  explicit ManifestWriter(std::unique_ptr<AppendFile> file)
      : file_(std::move(file)) {}
  std::unique_ptr<AppendFile> file_;
};

// Applies edits in order; yields the resulting live-file map.
Status ReplayManifest(const std::string& path,
                      std::vector<VersionEdit>* edits);

void EncodeVersionEdit(const VersionEdit& edit, std::string* out);
Status DecodeVersionEdit(std::string_view payload, VersionEdit* out);

}  // namespace lkv

#endif  // LKV_TABLE_MANIFEST_H_
