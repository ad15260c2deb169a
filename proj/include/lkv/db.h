#ifndef LKV_DB_H_
#define LKV_DB_H_

#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lkv/key.h"
#include "lkv/options.h"
#include "lkv/stats.h"
#include "lkv/status.h"

namespace lkv {

class DBImpl;

// Embedded log-structured key-value store with learned per-file (or
// per-level) position models. Keys are fixed-size; values live in an
// append-only value log referenced by pointers from the sstables.
class DB {
 public:
  static Status Open(const Options& options, const std::string& path,
                     std::unique_ptr<DB>* db);

  ~DB();
  DB(const DB&) = delete;
  DB& operator=(const DB&) = delete;

  // Keys must be exactly options().key_size bytes.
  Status Put(std::string_view key, std::string_view value);
  Status Delete(std::string_view key);
  Status Get(std::string_view key, std::string* value);

  // Up to `limit` live pairs with key >= start_key, ascending.
  Status Scan(std::string_view start_key, size_t limit,
              std::vector<std::pair<std::string, std::string>>* out);

  // Numeric-key conveniences.
  Status Put(KeyInt key, std::string_view value);
  Status Delete(KeyInt key);
  Status Get(KeyInt key, std::string* value);

  // Pushes the active memtable to L0 and waits for the flush.
  Status Flush();

  // Blocks until flushes, pending compactions, wait timers, and queued
  // learning have all drained.
  void WaitIdle();

  const Options& options() const;
  const std::string& path() const;

  EngineCounters counters() const;

  // Measurement toggle: when false, lookups ignore attached models and take
  // the baseline path.
  void SetModelPathEnabled(bool enabled);

  // Calibrated per-point training cost in nanoseconds.
  double TrainCostPerPointNs() const;

  std::vector<FileStatRow> DumpFileStats() const;
  std::vector<LevelStatRow> DumpLevelStats() const;
  std::vector<LiveFileInfo> ListLiveFiles() const;
  LearnerIntrospection LearnerState() const;

  // Test hook: invoked after a model is trained and before it is attached.
  void SetLearnCompletionHook(std::function<void(uint64_t file_id)> hook);

  DBImpl* TEST_impl() { return impl_.get(); }

 private:
  DB();
  std::unique_ptr<DBImpl> impl_;
};

}  // namespace lkv

#endif  // LKV_DB_H_
