#include "table/vlog.h"

#include "table/filename.h"
#include "util/coding.h"
#include "util/crc32.h"

namespace lkv {

VlogWriter::VlogWriter(std::string dir, size_t key_size,
                       uint64_t max_file_bytes)
    : dir_(std::move(dir)),
      key_size_(key_size),
      max_file_bytes_(max_file_bytes) {}

Status VlogWriter::Open(uint32_t active_id) {
  std::lock_guard<std::mutex> l(mu_);
  active_id_ = active_id;
  return AppendFile::Open(VlogPath(dir_, active_id_), &file_);
}

Status VlogWriter::Roll() {
  Status s = file_->Sync();
  if (!s.ok()) return s;
  active_id_++;
  read_file_.reset();
  return AppendFile::Open(VlogPath(dir_, active_id_), &file_);
}

Status VlogWriter::Append(KeyInt key, std::string_view value,
                          ValuePointer* ptr) {
  if (value.size() >= 0xffffffffull) {
    return Status::InvalidArgument("value too large");
  }
  std::lock_guard<std::mutex> l(mu_);
  if (file_->Offset() >= max_file_bytes_ && file_->Offset() > 0) {
    Status s = Roll();
    if (!s.ok()) return s;
  }

  std::string body;
  body.reserve(key_size_ + 4 + value.size());
  char keybuf[kMaxKeySize];
  EncodeKey(key, key_size_, keybuf);
  body.append(keybuf, key_size_);
  PutFixed32(&body, static_cast<uint32_t>(value.size()));
  body.append(value);

  std::string record;
  record.reserve(4 + body.size());
  PutFixed32(&record, Crc32(body));
  record.append(body);

  ptr->vlog_file_id = active_id_;
  ptr->offset = file_->Offset();
  ptr->length = static_cast<uint32_t>(value.size());
  ptr->flags = 0;
  return file_->Append(record);
}

Status VlogWriter::ReadActive(const ValuePointer& ptr, uint32_t,
                              bool* served, std::string* record_out) {
  std::lock_guard<std::mutex> l(mu_);
  if (ptr.vlog_file_id != active_id_) {
    *served = false;
    return Status::OK();
  }
  *served = true;
  const uint64_t record_len = VlogRecordBytes(key_size_, ptr.length);
  if (ptr.offset + record_len > file_->Offset()) {
    return Status::InvalidArgument("value pointer beyond log end");
  }
  if (ptr.offset + record_len > file_->FlushedOffset()) {
    Status s = file_->Flush();
    if (!s.ok()) return s;
  }
  if (read_file_ == nullptr) {
    Status s = RandomAccessFile::Open(VlogPath(dir_, active_id_), &read_file_);
    if (!s.ok()) return s;
  }
  record_out->resize(record_len);
  return read_file_->Read(ptr.offset, record_len, record_out->data());
}

Status VlogWriter::Flush() {
  std::lock_guard<std::mutex> l(mu_);
  return file_->Flush();
}

Status VlogWriter::Sync() {
  std::lock_guard<std::mutex> l(mu_);
  return file_->Sync();
}

VlogReader::VlogReader(std::string dir, size_t key_size, VlogWriter* writer)
    : dir_(std::move(dir)), key_size_(key_size), writer_(writer) {}

Status VlogReader::Read(const ValuePointer& ptr, KeyInt expected_key,
                        std::string* value) {
  if (ptr.tombstone()) {
    return Status::InvalidArgument("tombstone pointer has no value");
  }
  const uint64_t record_len = VlogRecordBytes(key_size_, ptr.length);
  std::string buf;

  if (writer_ != nullptr) {
    bool served = false;
    Status s = writer_->ReadActive(ptr, ptr.vlog_file_id, &served, &buf);
    if (served) {
      if (!s.ok()) return s;
      return ParseRecord(buf, ptr, expected_key, value);
    }
  }

  std::shared_ptr<RandomAccessFile> file;
  {
    std::lock_guard<std::mutex> l(cache_mu_);
    auto it = files_.find(ptr.vlog_file_id);
    if (it != files_.end()) file = it->second;
  }
  if (file == nullptr) {
    std::unique_ptr<RandomAccessFile> f;
    Status s = RandomAccessFile::Open(VlogPath(dir_, ptr.vlog_file_id), &f);
    if (!s.ok()) return s;
    file = std::move(f);
    std::lock_guard<std::mutex> l(cache_mu_);
    files_[ptr.vlog_file_id] = file;
  }
  if (ptr.offset + record_len > file->Size()) {
    return Status::InvalidArgument("value pointer beyond log end");
  }
  buf.resize(record_len);
  Status s = file->Read(ptr.offset, record_len, buf.data());
  if (!s.ok()) return s;
  return ParseRecord(buf, ptr, expected_key, value);
}

Status VlogReader::ParseRecord(const std::string& buf, const ValuePointer& ptr,
                               KeyInt expected_key, std::string* value) {
  const uint32_t stored_crc = DecodeFixed32(buf.data());
  if (Crc32(buf.data() + 4, buf.size() - 4) != stored_crc) {
    return Status::Corruption("value log record crc mismatch");
  }
  KeyInt key = DecodeKey(buf.data() + 4, key_size_);
  if (key != expected_key) {
    return Status::Corruption("value log record key mismatch");
  }
  const uint32_t len = DecodeFixed32(buf.data() + 4 + key_size_);
  if (len != ptr.length) {
    return Status::Corruption("value log record length mismatch");
  }
  value->assign(buf.data() + 4 + key_size_ + 4, len);
  return Status::OK();
}

}  // namespace lkv
