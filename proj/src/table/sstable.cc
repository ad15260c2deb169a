#include "table/sstable.h"

#include <algorithm>
#include <cstring>
#include <optional>

#include "util/coding.h"

namespace lkv {

SstableBuilder::SstableBuilder(std::string path, size_t key_size)
    : path_(std::move(path)),
      key_size_(key_size),
      record_size_(RecordSize(key_size)),
      records_per_block_(RecordsPerBlock(key_size)) {}

Status SstableBuilder::Add(KeyInt key, const ValuePointer& vptr) {
  if (finished_) return Status::InvalidArgument("builder already finished");
  if (!keys_.empty() && key <= keys_.back()) {
    return Status::InvalidArgument("sstable records must be strictly ascending");
  }
  char rec[kMaxKeySize + ValuePointer::kEncodedSize];
  EncodeKey(key, key_size_, rec);
  EncodeValuePointer(vptr, rec + key_size_);
  data_.append(rec, record_size_);
  keys_.push_back(key);
  record_count_++;
  if (record_count_ % records_per_block_ == 0) {
    block_last_keys_.push_back(key);
  }
  return Status::OK();
}

Status SstableBuilder::Finish(SstableBuildResult* result) {
  if (finished_) return Status::InvalidArgument("builder already finished");
  finished_ = true;
  if (record_count_ == 0) {
    return Status::InvalidArgument("sstable must contain at least one record");
  }
  if (record_count_ % records_per_block_ != 0) {
    block_last_keys_.push_back(keys_.back());
  }

  std::string file;
  file.reserve(data_.size() + block_last_keys_.size() * 32 +
               keys_.size() * 2 + kFooterBytes + 64);
  file.append(data_);

  const uint64_t index_off = file.size();
  for (size_t b = 0; b < block_last_keys_.size(); b++) {
    uint64_t first = static_cast<uint64_t>(b) * records_per_block_;
    uint64_t count =
        std::min<uint64_t>(records_per_block_, record_count_ - first);
    char keybuf[kMaxKeySize];
    EncodeKey(block_last_keys_[b], key_size_, keybuf);
    file.append(keybuf, key_size_);
    PutFixed64(&file, first * record_size_);
    PutFixed32(&file, static_cast<uint32_t>(count * record_size_));
  }
  const uint32_t index_len = static_cast<uint32_t>(file.size() - index_off);

  const uint64_t filter_off = file.size();
  BloomFilter filter = BloomFilter::Build(keys_, key_size_);
  filter.EncodeTo(&file);
  const uint32_t filter_len = static_cast<uint32_t>(file.size() - filter_off);

  PutFixed64(&file, index_off);
  PutFixed32(&file, index_len);
  PutFixed64(&file, filter_off);
  PutFixed32(&file, filter_len);
  file.append(kSstMagic, 4);

  Status s = WriteFileAtomic(path_, file);
  if (!s.ok()) return s;

  result->min_key = keys_.front();
  result->max_key = keys_.back();
  result->record_count = record_count_;
  result->file_bytes = file.size();
  return Status::OK();
}

Status SstableBuilder::Abandon() {
  finished_ = true;
  return Status::OK();
}

Status SstableReader::Open(const std::string& path, size_t key_size,
                           std::unique_ptr<SstableReader>* out) {
  std::unique_ptr<RandomAccessFile> file;
  Status s = RandomAccessFile::Open(path, &file);
  if (!s.ok()) return s;
  std::unique_ptr<SstableReader> reader(
      new SstableReader(std::move(file), key_size));
  s = reader->Init();
  if (!s.ok()) return s;
  *out = std::move(reader);
  return Status::OK();
}

Status SstableReader::Init() {
  const uint64_t size = file_->Size();
  if (size < kFooterBytes) return Status::Corruption("sstable too small");

  char footer[kFooterBytes];
  Status s = file_->Read(size - kFooterBytes, kFooterBytes, footer);
  if (!s.ok()) return s;
  if (std::memcmp(footer + 24, kSstMagic, 4) != 0) {
    return Status::Corruption("sstable: bad magic");
  }
  const uint64_t index_off = DecodeFixed64(footer);
  const uint32_t index_len = DecodeFixed32(footer + 8);
  const uint64_t filter_off = DecodeFixed64(footer + 12);
  const uint32_t filter_len = DecodeFixed32(footer + 20);
  if (index_off + index_len != filter_off ||
      filter_off + filter_len != size - kFooterBytes) {
    return Status::Corruption("sstable: bad footer layout");
  }

  const size_t entry_size = IndexEntrySize(key_size_);
  if (index_len == 0 || index_len % entry_size != 0) {
    return Status::Corruption("sstable: bad index block length");
  }
  std::string index_block(index_len, '\0');
  s = file_->Read(index_off, index_len, index_block.data());
  if (!s.ok()) return s;

  data_bytes_ = index_off;
  if (data_bytes_ % record_size_ != 0) {
    return Status::Corruption("sstable: data region not record aligned");
  }
  record_count_ = data_bytes_ / record_size_;

  const size_t entries = index_len / entry_size;
  index_.reserve(entries);
  uint64_t expected_offset = 0;
  KeyInt prev_key = 0;
  for (size_t i = 0; i < entries; i++) {
    const char* p = index_block.data() + i * entry_size;
    IndexEntry e;
    e.last_key = DecodeKey(p, key_size_);
    e.offset = DecodeFixed64(p + key_size_);
    e.size = DecodeFixed32(p + key_size_ + 8);
    e.first_record = e.offset / record_size_;
    if (e.offset != expected_offset || e.size == 0 ||
        e.size % record_size_ != 0 || e.offset + e.size > data_bytes_) {
      return Status::Corruption("sstable: corrupt index block");
    }
    if (i > 0 && e.last_key <= prev_key) {
      return Status::Corruption("sstable: index keys not ascending");
    }
    prev_key = e.last_key;
    expected_offset = e.offset + e.size;
    index_.push_back(e);
  }
  if (expected_offset != data_bytes_) {
    return Status::Corruption("sstable: index does not cover data region");
  }

  std::string filter_block(filter_len, '\0');
  if (filter_len > 0) {
    s = file_->Read(filter_off, filter_len, filter_block.data());
    if (!s.ok()) return s;
  }
  return BloomFilter::DecodeFrom(filter_block, &filter_);
}

std::optional<SstableReader::BlockHandle> SstableReader::SearchIndexBlock(
    KeyInt key) const {
  auto it = std::lower_bound(
      index_.begin(), index_.end(), key,
      [](const IndexEntry& e, KeyInt k) { return e.last_key < k; });
  if (it == index_.end()) return std::nullopt;
  BlockHandle h;
  h.block_index = static_cast<size_t>(it - index_.begin());
  h.offset = it->offset;
  h.size = it->size;
  h.first_record = it->first_record;
  h.record_count = it->size / record_size_;
  return h;
}

Status SstableReader::LoadBlock(const BlockHandle& h, std::string* out) const {
  out->resize(h.size);
  return file_->Read(h.offset, h.size, out->data());
}

Status SstableReader::LoadRecordRange(uint64_t lo, uint64_t hi,
                                      std::string* out) const {
  if (lo > hi || hi >= record_count_) {
    return Status::InvalidArgument("record range outside file");
  }
  const size_t rpb = index_.empty() ? 1 : index_[0].size / record_size_;
  uint64_t begin;
  if (lo / rpb == hi / rpb) {
    begin = lo * record_size_;
  } else {
    // Spans blocks: resolve the starting block's file position through the
    // index, then extend across the span. Blocks pack contiguously, so this
    // lands on the same bytes as the direct arithmetic.
    const size_t first_block = static_cast<size_t>(lo / rpb);
    begin = index_[first_block].offset + (lo % rpb) * record_size_;
  }
  const size_t len = static_cast<size_t>(hi - lo + 1) * record_size_;
  out->resize(len);
  return file_->Read(begin, len, out->data());
}

Status SstableReader::ReadRecord(uint64_t index, KeyInt* key,
                                 ValuePointer* vptr) const {
  if (index >= record_count_) {
    return Status::InvalidArgument("record index outside file");
  }
  char buf[kMaxKeySize + ValuePointer::kEncodedSize];
  Status s = file_->Read(index * record_size_, record_size_, buf);
  if (!s.ok()) return s;
  *key = DecodeKey(buf, key_size_);
  *vptr = DecodeValuePointer(buf + key_size_);
  return Status::OK();
}

Status SstableReader::ReadBlockRecords(
    size_t block_index, std::vector<std::pair<KeyInt, ValuePointer>>* out) const {
  if (block_index >= index_.size()) {
    return Status::InvalidArgument("block index outside file");
  }
  const IndexEntry& e = index_[block_index];
  std::string buf(e.size, '\0');
  Status s = file_->Read(e.offset, e.size, buf.data());
  if (!s.ok()) return s;
  const size_t n = e.size / record_size_;
  out->clear();
  out->reserve(n);
  for (size_t i = 0; i < n; i++) {
    const char* p = buf.data() + i * record_size_;
    out->emplace_back(DecodeKey(p, key_size_),
                      DecodeValuePointer(p + key_size_));
  }
  return Status::OK();
}

void SstableReader::ParseRecord(const std::string& buf, uint64_t base,
                                uint64_t i, KeyInt* key,
                                ValuePointer* vptr) const {
  const char* p = buf.data() + (i - base) * record_size_;
  *key = DecodeKey(p, key_size_);
  *vptr = DecodeValuePointer(p + key_size_);
}

}  // namespace lkv
