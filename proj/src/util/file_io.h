#ifndef LKV_UTIL_FILE_IO_H_
#define LKV_UTIL_FILE_IO_H_

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "lkv/status.h"

namespace lkv {

// Thin POSIX wrappers. All paths are absolute or store-relative as given.

class RandomAccessFile {
 public:
  static Status Open(const std::string& path,
                     std::unique_ptr<RandomAccessFile>* out);
  ~RandomAccessFile();
  RandomAccessFile(const RandomAccessFile&) = delete;
  RandomAccessFile& operator=(const RandomAccessFile&) = delete;

  // Reads exactly n bytes at offset into scratch; short reads are errors.
  Status Read(uint64_t offset, size_t n, char* scratch) const;
  uint64_t Size() const { return size_; }
  const std::string& path() const { return path_; }

 private:
  RandomAccessFile(std::string path, int fd, uint64_t size)
      : path_(std::move(path)), fd_(fd), size_(size) {}
  std::string path_;
  int fd_;
  uint64_t size_;
};

class AppendFile {
 public:
  // Opens for appending, creating if needed. `offset` resumes at file end.
  static Status Open(const std::string& path, std::unique_ptr<AppendFile>* out);
  ~AppendFile();
  AppendFile(const AppendFile&) = delete;
  AppendFile& operator=(const AppendFile&) = delete;

  Status Append(std::string_view data);
  Status Flush();
  Status Sync();
  uint64_t Offset() const { return offset_; }
  uint64_t FlushedOffset() const { return offset_ - buffer_.size(); }
  const std::string& path() const { return path_; }

 private:
  AppendFile(std::string path, int fd, uint64_t offset)
      : path_(std::move(path)), fd_(fd), offset_(offset) {}
  std::string path_;
  int fd_;
  uint64_t offset_;
  std::string buffer_;
};

Status WriteFileAtomic(const std::string& path, std::string_view contents);
Status ReadFileToString(const std::string& path, std::string* out);
Status CreateDirIfMissing(const std::string& path);
bool FileExists(const std::string& path);
Status RemoveFile(const std::string& path);
Status ListDir(const std::string& path, std::vector<std::string>* names);
Status SyncDir(const std::string& path);

}  // namespace lkv

#endif  // LKV_UTIL_FILE_IO_H_
