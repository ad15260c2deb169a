#include "table/filename.h"

#include <cstdio>

namespace lkv {

namespace {
std::string Numbered(const std::string& dir, uint64_t n, const char* suffix) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "/%06llu.%s",
                static_cast<unsigned long long>(n), suffix);
  return dir + buf;
}
}  // namespace

std::string SstPath(const std::string& dir, uint64_t file_id) {
  return Numbered(dir, file_id, "sst");
}

std::string ModelPath(const std::string& dir, uint64_t file_id) {
  return Numbered(dir, file_id, "model");
}

std::string VlogPath(const std::string& dir, uint32_t vlog_id) {
  return Numbered(dir, vlog_id, "vlog");
}

std::string ManifestPath(const std::string& dir) { return dir + "/MANIFEST"; }

std::string StoreMetaPath(const std::string& dir) { return dir + "/STORE"; }

std::string LockPath(const std::string& dir) { return dir + "/LOCK"; }

bool ParseVlogName(const std::string& name, uint32_t* vlog_id) {
  size_t dot = name.find('.');
  if (dot == std::string::npos || name.substr(dot) != ".vlog") return false;
  uint64_t id = 0;
  for (size_t i = 0; i < dot; i++) {
    if (name[i] < '0' || name[i] > '9') return false;
    id = id * 10 + (name[i] - '0');
    if (id > 0x7fffffff) return false;
  }
  if (dot == 0) return false;
  *vlog_id = static_cast<uint32_t>(id);
  return true;
}

}  // namespace lkv
