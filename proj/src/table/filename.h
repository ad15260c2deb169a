#ifndef LKV_TABLE_FILENAME_H_
#define LKV_TABLE_FILENAME_H_

#include <cstdint>
#include <string>

namespace lkv {

std::string SstPath(const std::string& dir, uint64_t file_id);
std::string ModelPath(const std::string& dir, uint64_t file_id);
std::string VlogPath(const std::string& dir, uint32_t vlog_id);
std::string ManifestPath(const std::string& dir);
std::string StoreMetaPath(const std::string& dir);
std::string LockPath(const std::string& dir);

// Parses "NNN.vlog" names; returns false for anything else.
bool ParseVlogName(const std::string& name, uint32_t* vlog_id);

}  // namespace lkv

#endif  // LKV_TABLE_FILENAME_H_
