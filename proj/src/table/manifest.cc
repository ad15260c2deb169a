#include "table/manifest.h"

#include "util/coding.h"
#include "util/crc32.h"

namespace lkv {

namespace {

void PutKeyBE(std::string* dst, KeyInt key) {
  char buf[kMaxKeySize];
  EncodeKey(key, kMaxKeySize, buf);
  dst->append(buf, kMaxKeySize);
}

}  // namespace

void EncodeVersionEdit(const VersionEdit& edit, std::string* out) {
  out->clear();
  PutFixed32(out, static_cast<uint32_t>(edit.deleted.size()));
  for (const auto& [level, file_id] : edit.deleted) {
    out->push_back(static_cast<char>(level));
    PutFixed64(out, file_id);
  }
  PutFixed32(out, static_cast<uint32_t>(edit.added.size()));
  for (const ManifestFileRecord& f : edit.added) {
    out->push_back(static_cast<char>(f.level));
    PutFixed64(out, f.file_id);
    PutFixed64(out, f.record_count);
    PutFixed64(out, f.file_bytes);
    PutKeyBE(out, f.min_key);
    PutKeyBE(out, f.max_key);
  }
}

Status DecodeVersionEdit(std::string_view payload, VersionEdit* out) {
  out->deleted.clear();
  out->added.clear();
  const char* p = payload.data();
  const char* end = p + payload.size();
  auto need = [&](size_t n) { return static_cast<size_t>(end - p) >= n; };

  if (!need(4)) return Status::Corruption("manifest edit truncated");
  uint32_t n_del = DecodeFixed32(p);
  p += 4;
  for (uint32_t i = 0; i < n_del; i++) {
    if (!need(9)) return Status::Corruption("manifest edit truncated");
    int level = static_cast<uint8_t>(*p);
    p++;
    uint64_t id = DecodeFixed64(p);
    p += 8;
    if (level >= kNumLevels) return Status::Corruption("manifest: bad level");
    out->deleted.emplace_back(level, id);
  }

  if (!need(4)) return Status::Corruption("manifest edit truncated");
  uint32_t n_add = DecodeFixed32(p);
  p += 4;
  const size_t add_size = 1 + 8 + 8 + 8 + 2 * kMaxKeySize;
  for (uint32_t i = 0; i < n_add; i++) {
    if (!need(add_size)) return Status::Corruption("manifest edit truncated");
    ManifestFileRecord f;
    f.level = static_cast<uint8_t>(*p);
    p++;
    f.file_id = DecodeFixed64(p);
    p += 8;
    f.record_count = DecodeFixed64(p);
    p += 8;
    f.file_bytes = DecodeFixed64(p);
    p += 8;
    f.min_key = DecodeKey(p, kMaxKeySize);
    p += kMaxKeySize;
    f.max_key = DecodeKey(p, kMaxKeySize);
    p += kMaxKeySize;
    if (f.level >= kNumLevels) return Status::Corruption("manifest: bad level");
    out->added.push_back(f);
  }
  if (p != end) return Status::Corruption("manifest edit trailing bytes");
  return Status::OK();
}

Status ManifestWriter::Open(const std::string& path,
                            std::unique_ptr<ManifestWriter>* out) {
  std::unique_ptr<AppendFile> file;
  Status s = AppendFile::Open(path, &file);
  if (!s.ok()) return s;
  out->reset(new ManifestWriter(std::move(file)));
  return Status::OK();
}

Status ManifestWriter::Append(const VersionEdit& edit) {
  std::string payload;
  EncodeVersionEdit(edit, &payload);
  std::string record;
  record.reserve(8 + payload.size());
  PutFixed32(&record, static_cast<uint32_t>(payload.size()));
  PutFixed32(&record, Crc32(payload));
  record.append(payload);
  Status s = file_->Append(record);
  if (!s.ok()) return s;
  return file_->Flush();
}

Status ManifestWriter::Sync() { return file_->Sync(); }

Status ReplayManifest(const std::string& path,
                      std::vector<VersionEdit>* edits) {
  edits->clear();
  std::string data;
  Status s = ReadFileToString(path, &data);
  if (!s.ok()) return s;

  size_t pos = 0;
  while (pos + 8 <= data.size()) {
    uint32_t len = DecodeFixed32(data.data() + pos);
    uint32_t crc = DecodeFixed32(data.data() + pos + 4);
    if (pos + 8 + len > data.size()) break;  // torn tail record
    std::string_view payload(data.data() + pos + 8, len);
    if (Crc32(payload) != crc) break;  // corrupt tail
    VersionEdit edit;
    s = DecodeVersionEdit(payload, &edit);
    if (!s.ok()) break;
    edits->push_back(std::move(edit));
    pos += 8 + len;
  }
  return Status::OK();
}

}  // namespace lkv
