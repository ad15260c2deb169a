#include "plr/plr_model.h"

#include <algorithm>
#include <cmath>
#include <cstring>

#include "util/coding.h"
#include "util/crc32.h"

namespace lkv {
namespace plr {

std::optional<PredictedRange> PlrModel::Predict(KeyInt key) const {
  if (segments_.empty() || key < min_key_ || key > max_key_) {
    return std::nullopt;
  }
  // Last segment with start_key <= key.
  auto it = std::upper_bound(
      segments_.begin(), segments_.end(), key,
      [](KeyInt k, const Segment& s) { return k < s.start_key; });
  const Segment& seg = *(it - 1);

  double raw = seg.PredictRaw(key);
  int64_t pos = std::llround(raw);
  int64_t last = static_cast<int64_t>(num_points_) - 1;
  pos = std::clamp<int64_t>(pos, 0, last);

  PredictedRange r;
  r.pos = static_cast<uint64_t>(pos);
  int64_t d = static_cast<int64_t>(delta_);
  r.lo = static_cast<uint64_t>(std::max<int64_t>(0, pos - d));
  r.hi = static_cast<uint64_t>(std::min<int64_t>(last, pos + d));
  return r;
}

Status SerializeModel(const PlrModel& model, std::string* out) {
  if (model.segments().empty()) {
    return Status::InvalidArgument("cannot serialize a model with no segments");
  }
  out->clear();
  out->reserve(kModelHeaderBytes +
               model.segments().size() * kModelSegmentBytes + 4);
  out->append(kModelMagic, 4);
  PutFixed32(out, kModelVersion);
  PutFixed32(out, model.delta());
  PutFixed64(out, model.num_points());
  PutFixed32(out, static_cast<uint32_t>(model.segments().size()));
  for (const Segment& s : model.segments()) {
    PutFixed128LE(out, s.start_key);
    PutDouble(out, s.slope);
    PutDouble(out, s.intercept);
  }
  PutFixed32(out, Crc32(*out));
  return Status::OK();
}

Status DeserializeModel(std::string_view data, PlrModel* out) {
  if (data.size() < kModelHeaderBytes + 4) {
    return Status::Corruption("model: truncated header");
  }
  if (std::memcmp(data.data(), kModelMagic, 4) != 0) {
    return Status::Corruption("model: bad magic");
  }
  const char* p = data.data() + 4;
  uint32_t version = DecodeFixed32(p);
  p += 4;
  if (version != kModelVersion) {
    return Status::Corruption("model: unknown version");
  }
  uint32_t delta = DecodeFixed32(p);
  p += 4;
  uint64_t num_points = DecodeFixed64(p);
  p += 8;
  uint32_t count = DecodeFixed32(p);
  p += 4;
  if (count == 0) return Status::Corruption("model: zero segments");

  size_t expected =
      kModelHeaderBytes + static_cast<size_t>(count) * kModelSegmentBytes + 4;
  if (data.size() != expected) {
    return Status::Corruption("model: length mismatch");
  }
  uint32_t stored_crc = DecodeFixed32(data.data() + data.size() - 4);
  if (Crc32(data.data(), data.size() - 4) != stored_crc) {
    return Status::Corruption("model: crc mismatch");
  }

  std::vector<Segment> segments;
  segments.reserve(count);
  KeyInt prev_start = 0;
  for (uint32_t i = 0; i < count; i++) {
    Segment s;
    s.start_key = DecodeFixed128LE(p);
    p += 16;
    s.slope = DecodeDouble(p);
    p += 8;
    s.intercept = DecodeDouble(p);
    p += 8;
    if (i > 0 && s.start_key <= prev_start) {
      return Status::Corruption("model: segment starts not increasing");
    }
    prev_start = s.start_key;
    segments.push_back(s);
  }

  KeyInt min_key = segments.front().start_key;
  // max_key is not part of the encoding; reconstruct a permissive bound so
  // in-range keys of the original model stay in range. The owning file's
  // metadata carries the exact key range.
  KeyInt max_key = ~static_cast<KeyInt>(0);
  *out = PlrModel(std::move(segments), delta, num_points, min_key, max_key);
  return Status::OK();
}

}  // namespace plr
}  // namespace lkv
