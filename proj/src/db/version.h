#ifndef LKV_DB_VERSION_H_
#define LKV_DB_VERSION_H_

#include <array>
#include <atomic>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "lkv/key.h"
#include "lkv/status.h"
#include "plr/plr_model.h"
#include "table/manifest.h"
#include "table/sstable.h"

namespace lkv {

// Immutable metadata for one live sstable. Shared across Version snapshots;
// the reader and the learned model are published at most once while the
// file is live, so lock-free readers can use raw acquire loads backed by
// the owning shared_ptrs.
struct FileMeta {
  FileMeta(uint64_t id, int lvl, KeyInt min_k, KeyInt max_k, uint64_t records,
           uint64_t bytes, std::string sst, std::string model)
      : file_id(id),
        level(lvl),
        min_key(min_k),
        max_key(max_k),
        record_count(records),
        file_bytes(bytes),
        sst_path(std::move(sst)),
        model_path(std::move(model)) {}
  ~FileMeta();

  FileMeta(const FileMeta&) = delete;
  FileMeta& operator=(const FileMeta&) = delete;

  const uint64_t file_id;
  const int level;
  const KeyInt min_key;
  const KeyInt max_key;
  const uint64_t record_count;
  const uint64_t file_bytes;
  const std::string sst_path;
  const std::string model_path;

  int64_t created_at_ns = 0;

  // Lazily opened on first probe; LoadIbFb accounts for the open cost.
  Status EnsureReaderOpen(size_t key_size, const SstableReader** out);
  const SstableReader* reader() const {
    return reader_raw_.load(std::memory_order_acquire);
  }

  const plr::PlrModel* model() const {
    return model_raw_.load(std::memory_order_acquire);
  }
  // Returns false if the file is already deleted or a model is attached.
  bool AttachModel(std::shared_ptr<const plr::PlrModel> model);

  void MarkDeleted() { deleted_.store(true, std::memory_order_release); }
  bool deleted() const { return deleted_.load(std::memory_order_acquire); }

  // When set, the destructor removes the sstable and model files.
  void RemoveFilesOnDrop() { remove_files_.store(true); }

 private:
  std::mutex mu_;
  std::shared_ptr<SstableReader> reader_;
  std::atomic<const SstableReader*> reader_raw_{nullptr};
  std::shared_ptr<const plr::PlrModel> model_;
  std::atomic<const plr::PlrModel*> model_raw_{nullptr};
  std::atomic<bool> deleted_{false};
  std::atomic<bool> remove_files_{false};
};

using FileMetaPtr = std::shared_ptr<FileMeta>;

// Copy-on-write snapshot of the leveled file arrangement. L0 files are
// ordered by file_id (ascending age); deeper levels are key-disjoint and
// sorted by min_key.
struct Version {
  std::array<std::vector<FileMetaPtr>, kNumLevels> files;
  // Bumped whenever the level's file set changes; level models are valid
  // only for a matching stamp.
  std::array<uint64_t, kNumLevels> level_stamp{};

  uint64_t LevelBytes(int level) const;
  int FileCount(int level) const {
    return static_cast<int>(files[level].size());
  }

  // All L0 files containing `key`, newest first, then at most one file per
  // deeper level.
  void FindFiles(KeyInt key, std::vector<FileMetaPtr>* out) const;

  // The single candidate at a disjoint level, or null.
  FileMetaPtr FindFileInLevel(int level, KeyInt key) const;

  // True when no level deeper than `level` could contain `key`; a tombstone
  // compacted into such a level can be dropped.
  bool IsBaseLevelForKey(int level, KeyInt key) const;

  bool FileIsLive(uint64_t file_id) const;

  // Asserts level ordering and disjointness; used by tests and debug builds.
  Status CheckWellFormed() const;
};

// Applies an edit to `base`, producing a new snapshot. Added files must not
// collide with live ids.
std::shared_ptr<const Version> ApplyEdit(
    const Version& base, const std::vector<FileMetaPtr>& added,
    const std::vector<std::pair<int, uint64_t>>& deleted);

struct CompactionConfig {
  int l0_trigger = 4;
  double level_size_divisor = 1.0;
  // Level i >= 1 byte limit.
  uint64_t LevelLimitBytes(int level) const;
};

struct CompactionJob {
  int input_level = 0;
  int output_level = 1;
  std::vector<FileMetaPtr> upper;  // files at input_level
  std::vector<FileMetaPtr> lower;  // overlapping files at output_level
};

// L0 compacts when the file count reaches the trigger; deeper levels when
// their byte size exceeds the limit, choosing victims round-robin by key
// range. Returns nullopt when every level is within bounds.
std::optional<CompactionJob> PickCompaction(
    const Version& version, const CompactionConfig& config,
    std::array<KeyInt, kNumLevels>* compact_pointers);

}  // namespace lkv

#endif  // LKV_DB_VERSION_H_
