#include "db/version.h"

#include <algorithm>

#include "util/file_io.h"

namespace lkv {

FileMeta::~FileMeta() {
  if (remove_files_.load()) {
    RemoveFile(sst_path);
    RemoveFile(model_path);
  }
}

Status FileMeta::EnsureReaderOpen(size_t key_size, const SstableReader** out) {
  const SstableReader* r = reader_raw_.load(std::memory_order_acquire);
  if (r != nullptr) {
    *out = r;
    return Status::OK();
  }
  std::lock_guard<std::mutex> l(mu_);
  if (reader_ == nullptr) {
    std::unique_ptr<SstableReader> reader;
    Status s = SstableReader::Open(sst_path, key_size, &reader);
    if (!s.ok()) return s;
    reader_ = std::move(reader);
    reader_raw_.store(reader_.get(), std::memory_order_release);
  }
  *out = reader_.get();
  return Status::OK();
}

bool FileMeta::AttachModel(std::shared_ptr<const plr::PlrModel> model) {
  std::lock_guard<std::mutex> l(mu_);
  if (deleted_.load(std::memory_order_acquire)) return false;
  if (model_ != nullptr) return false;
  model_ = std::move(model);
  model_raw_.store(model_.get(), std::memory_order_release);
  return true;
}

uint64_t Version::LevelBytes(int level) const {
  uint64_t total = 0;
  for (const auto& f : files[level]) total += f->file_bytes;
  return total;
}

void Version::FindFiles(KeyInt key, std::vector<FileMetaPtr>* out) const {
  out->clear();
  // L0 may overlap; probe newest first.
  for (auto it = files[0].rbegin(); it != files[0].rend(); ++it) {
    if (key >= (*it)->min_key && key <= (*it)->max_key) out->push_back(*it);
  }
  for (int level = 1; level < kNumLevels; level++) {
    FileMetaPtr f = FindFileInLevel(level, key);
    if (f != nullptr) out->push_back(std::move(f));
  }
}

FileMetaPtr Version::FindFileInLevel(int level, KeyInt key) const {
  const auto& level_files = files[level];
  auto it = std::lower_bound(
      level_files.begin(), level_files.end(), key,
      [](const FileMetaPtr& f, KeyInt k) { return f->max_key < k; });
  if (it == level_files.end() || key < (*it)->min_key) return nullptr;
  return *it;
}

bool Version::IsBaseLevelForKey(int level, KeyInt key) const {
  for (int l = level + 1; l < kNumLevels; l++) {
    if (FindFileInLevel(l, key) != nullptr) return false;
  }
  return true;
}

bool Version::FileIsLive(uint64_t file_id) const {
  for (const auto& level_files : files) {
    for (const auto& f : level_files) {
      if (f->file_id == file_id) return true;
    }
  }
  return false;
}

Status Version::CheckWellFormed() const {
  for (size_t i = 1; i + 1 <= files[0].size(); i++) {
    if (files[0][i]->file_id <= files[0][i - 1]->file_id) {
      return Status::Corruption("L0 files out of creation order");
    }
  }
  for (int level = 1; level < kNumLevels; level++) {
    const auto& fs = files[level];
    for (size_t i = 0; i < fs.size(); i++) {
      if (fs[i]->min_key > fs[i]->max_key) {
        return Status::Corruption("file with inverted key range");
      }
      if (i > 0 && fs[i]->min_key <= fs[i - 1]->max_key) {
        return Status::Corruption("overlapping files at a sorted level");
      }
    }
  }
  return Status::OK();
}

std::shared_ptr<const Version> ApplyEdit(
    const Version& base, const std::vector<FileMetaPtr>& added,
    const std::vector<std::pair<int, uint64_t>>& deleted) {
  auto v = std::make_shared<Version>();
  v->files = base.files;
  v->level_stamp = base.level_stamp;

  std::array<bool, kNumLevels> touched{};
  for (const auto& [level, file_id] : deleted) {
    auto& fs = v->files[level];
    fs.erase(std::remove_if(fs.begin(), fs.end(),
                            [&](const FileMetaPtr& f) {
                              return f->file_id == file_id;
                            }),
             fs.end());
    touched[level] = true;
  }
  for (const auto& f : added) {
    v->files[f->level].push_back(f);
    touched[f->level] = true;
  }
  for (int level = 0; level < kNumLevels; level++) {
    if (!touched[level]) continue;
    v->level_stamp[level]++;
    auto& fs = v->files[level];
    if (level == 0) {
      std::sort(fs.begin(), fs.end(),
                [](const FileMetaPtr& a, const FileMetaPtr& b) {
                  return a->file_id < b->file_id;
                });
    } else {
      std::sort(fs.begin(), fs.end(),
                [](const FileMetaPtr& a, const FileMetaPtr& b) {
                  return a->min_key < b->min_key;
                });
    }
  }
  return v;
}

uint64_t CompactionConfig::LevelLimitBytes(int level) const {
  double mb = 1.0;
  for (int i = 0; i < level; i++) mb *= 10.0;
  double bytes = mb * 1024.0 * 1024.0 / level_size_divisor;
  return bytes < 1.0 ? 1 : static_cast<uint64_t>(bytes);
}

namespace {

void AppendOverlapping(const Version& version, int level, KeyInt min_key,
                       KeyInt max_key, std::vector<FileMetaPtr>* out) {
  for (const auto& f : version.files[level]) {
    if (f->max_key >= min_key && f->min_key <= max_key) out->push_back(f);
  }
}

}  // namespace

std::optional<CompactionJob> PickCompaction(
    const Version& version, const CompactionConfig& config,
    std::array<KeyInt, kNumLevels>* compact_pointers) {
  if (version.FileCount(0) >= config.l0_trigger) {
    CompactionJob job;
    job.input_level = 0;
    job.output_level = 1;
    job.upper = version.files[0];
    KeyInt min_key = job.upper[0]->min_key;
    KeyInt max_key = job.upper[0]->max_key;
    for (const auto& f : job.upper) {
      min_key = std::min(min_key, f->min_key);
      max_key = std::max(max_key, f->max_key);
    }
    AppendOverlapping(version, 1, min_key, max_key, &job.lower);
    return job;
  }

  // Deeper levels by worst relative overage; the bottom level never spills.
  int best_level = -1;
  double best_score = 1.0;
  for (int level = 1; level < kNumLevels - 1; level++) {
    if (version.files[level].empty()) continue;
    double score = static_cast<double>(version.LevelBytes(level)) /
                   static_cast<double>(config.LevelLimitBytes(level));
    if (score > best_score) {
      best_score = score;
      best_level = level;
    }
  }
  if (best_level < 0) return std::nullopt;

  const auto& fs = version.files[best_level];
  // Round-robin by key range: first file past the last compacted key.
  const KeyInt pointer = (*compact_pointers)[best_level];
  FileMetaPtr victim;
  for (const auto& f : fs) {
    if (f->min_key > pointer) {
      victim = f;
      break;
    }
  }
  if (victim == nullptr) victim = fs[0];  // wrap
  (*compact_pointers)[best_level] = victim->max_key;

  CompactionJob job;
  job.input_level = best_level;
  job.output_level = best_level + 1;
  job.upper = {victim};
  AppendOverlapping(version, job.output_level, victim->min_key, victim->max_key,
                    &job.lower);
  return job;
}

}  // namespace lkv
