#ifndef LKV_OPTIONS_H_
#define LKV_OPTIONS_H_

#include <cstddef>
#include <cstdint>
#include <string>

#include "lkv/key.h"

namespace lkv {

class Clock;

enum class LearningMode {
  kFile,   // learn individual sstable files (default)
  kLevel,  // learn whole levels >= 1; files stay unlearned
  kOff,    // never learn, never load persisted models
};

enum class CbaMode {
  kCba,      // cost-benefit decisions after bootstrap
  kAlways,   // learn every file that survives the wait
  kOffline,  // keep models loaded from disk, never learn anew
};

struct Options {
  // Fixed at store creation; validated against existing stores on reopen.
  size_t key_size = kDefaultKeySize;

  // PLR error bound in record positions.
  uint32_t delta = 8;

  // Wait threshold before a file (or level) is considered for learning.
  // Negative selects auto mode: wait the estimated model build time.
  int64_t t_wait_ms = 50;

  LearningMode learning_mode = LearningMode::kFile;
  CbaMode cba_mode = CbaMode::kCba;

  // Level i (>= 1) size limit is 10^i MB / level_size_divisor.
  double level_size_divisor = 1.0;

  size_t memtable_bytes = 4u << 20;
  size_t max_file_bytes = 4u << 20;
  int l0_compaction_trigger = 4;
  size_t vlog_file_max_bytes = 1u << 30;

  int learner_threads = 1;

  // Completed files per level required before cost-benefit decisions start.
  int cba_min_completed_files = 10;

  bool create_if_missing = true;
  bool error_if_exists = false;

  // Test hook: timestamps and wait timers use this clock when set.
  Clock* clock = nullptr;

  // Number of points in the startup training-cost calibration run.
  size_t calibration_points = 1u << 20;

  std::string DebugString() const;
};

const char* LearningModeName(LearningMode m);
const char* CbaModeName(CbaMode m);
bool ParseLearningMode(const std::string& name, LearningMode* out);
bool ParseCbaMode(const std::string& name, CbaMode* out);

}  // namespace lkv

#endif  // LKV_OPTIONS_H_
