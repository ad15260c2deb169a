#include "lkv/options.h"

#include <sstream>

namespace lkv {

const char* LearningModeName(LearningMode m) {
  switch (m) {
    case LearningMode::kFile: return "file";
    case LearningMode::kLevel: return "level";
    case LearningMode::kOff: return "off";
  }
  return "?";
}

const char* CbaModeName(CbaMode m) {
  switch (m) {
    case CbaMode::kCba: return "cba";
    case CbaMode::kAlways: return "always";
    case CbaMode::kOffline: return "offline";
  }
  return "?";
}

bool ParseLearningMode(const std::string& name, LearningMode* out) {
  if (name == "file") *out = LearningMode::kFile;
  else if (name == "level") *out = LearningMode::kLevel;
  else if (name == "off") *out = LearningMode::kOff;
  else return false;
  return true;
}

bool ParseCbaMode(const std::string& name, CbaMode* out) {
  if (name == "cba") *out = CbaMode::kCba;
  else if (name == "always") *out = CbaMode::kAlways;
  else if (name == "offline") *out = CbaMode::kOffline;
  else return false;
  return true;
}

std::string Options::DebugString() const {
  std::ostringstream os;
  os << "key_size=" << key_size << " delta=" << delta
     << " t_wait_ms=" << t_wait_ms
     << " learning_mode=" << LearningModeName(learning_mode)
     << " cba_mode=" << CbaModeName(cba_mode)
     << " level_size_divisor=" << level_size_divisor
     << " memtable_bytes=" << memtable_bytes
     << " max_file_bytes=" << max_file_bytes
     << " l0_compaction_trigger=" << l0_compaction_trigger
     << " learner_threads=" << learner_threads;
  return os.str();
}

}  // namespace lkv
