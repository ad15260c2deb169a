#ifndef LKV_STATS_H_
#define LKV_STATS_H_

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace lkv {

// Lookup steps, named after the stages a request passes through. Baseline
// internal lookups use SearchIb/LoadDb/SearchDb; model internal lookups use
// ModelLookup/LoadChunk/LocateKey. The remaining steps are shared.
enum Step : int {
  kStepMemTable = 0,
  kStepFindFiles,
  kStepLoadIbFb,
  kStepSearchIb,
  kStepSearchFb,
  kStepLoadDb,
  kStepSearchDb,
  kStepModelLookup,
  kStepLoadChunk,
  kStepLocateKey,
  kStepReadValue,
  kNumSteps,
};

const char* StepName(Step s);

struct StepTimes {
  std::array<uint64_t, kNumSteps> ns{};

  void Add(Step s, uint64_t d) { ns[s] += d; }
  uint64_t Total() const {
    uint64_t t = 0;
    for (auto v : ns) t += v;
    return t;
  }
};

// One probe of one candidate file (or level model) during a get.
struct InternalLookupRecord {
  uint64_t file_id = 0;
  int level = -1;
  bool positive = false;
  bool model_path = false;
  StepTimes steps;
};

// Monotonic store-wide counters, snapshotted for reports.
struct EngineCounters {
  std::array<uint64_t, kNumSteps> step_ns{};
  std::array<uint64_t, kNumSteps> step_count{};

  uint64_t internal_pos_model = 0;
  uint64_t internal_neg_model = 0;
  uint64_t internal_pos_baseline = 0;
  uint64_t internal_neg_baseline = 0;

  uint64_t gets = 0;
  uint64_t gets_not_found = 0;
  uint64_t puts = 0;
  uint64_t deletes = 0;
  uint64_t scans = 0;

  uint64_t flushes = 0;
  uint64_t compactions = 0;
  uint64_t compaction_ns = 0;

  uint64_t files_learned = 0;
  uint64_t levels_learned = 0;
  uint64_t learns_discarded = 0;
  uint64_t learning_ns = 0;
  uint64_t decisions_learn = 0;
  uint64_t decisions_skip = 0;
  uint64_t decisions_bootstrap = 0;

  uint64_t stats_dropped_records = 0;

  uint64_t InternalLookups() const {
    return internal_pos_model + internal_neg_model + internal_pos_baseline +
           internal_neg_baseline;
  }
};

// Stats-dump row: one per completed or live file. Missing duration estimates
// print as 0.
struct FileStatRow {
  int level = 0;
  uint64_t file_id = 0;
  bool live = false;
  double lifetime_ms = 0;  // for live files: age so far
  uint64_t n_pos = 0;
  uint64_t n_neg = 0;
  double t_pb_us = 0;
  double t_nb_us = 0;
  double t_pm_us = 0;
  double t_nm_us = 0;
  uint64_t records = 0;
};

// Per-level aggregate over completed files that passed the short-lived filter.
struct LevelStatRow {
  int level = 0;
  uint64_t completed_files = 0;
  double mean_n_pos = 0;
  double mean_n_neg = 0;
  double t_pb_us = 0;
  double t_nb_us = 0;
  double t_pm_us = 0;
  double t_nm_us = 0;
  double mean_records = 0;
};

struct LiveFileInfo {
  int level = 0;
  uint64_t file_id = 0;
  uint64_t records = 0;
  uint64_t file_bytes = 0;
  std::string min_key;
  std::string max_key;
  bool learned = false;
  uint32_t model_segments = 0;
};

struct LearnerIntrospection {
  size_t pending_timers = 0;
  size_t queued_tasks = 0;
  size_t running_tasks = 0;
};

}  // namespace lkv

#endif  // LKV_STATS_H_
