#ifndef LKV_PLR_PLR_MODEL_H_
#define LKV_PLR_PLR_MODEL_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lkv/key.h"
#include "lkv/status.h"

namespace lkv {
namespace plr {

// One line of a piecewise-linear position model. Prediction subtracts the
// segment's start key before going to double precision, so slopes stay
// accurate over wide 128-bit key ranges.
struct Segment {
  KeyInt start_key = 0;
  double slope = 0;
  double intercept = 0;

  double PredictRaw(KeyInt key) const {
    return slope * static_cast<double>(key - start_key) + intercept;
  }

  bool operator==(const Segment& o) const {
    return start_key == o.start_key && slope == o.slope &&
           intercept == o.intercept;
  }
};

// Clamped prediction window; the true position of a trained key is
// guaranteed to lie inside [lo, hi].
struct PredictedRange {
  uint64_t pos = 0;
  uint64_t lo = 0;
  uint64_t hi = 0;
};

// Immutable once trained; shareable across threads without synchronization.
class PlrModel {
 public:
  PlrModel() = default;
  PlrModel(std::vector<Segment> segments, uint32_t delta, uint64_t num_points,
           KeyInt min_key, KeyInt max_key)
      : segments_(std::move(segments)),
        delta_(delta),
        num_points_(num_points),
        min_key_(min_key),
        max_key_(max_key) {}

  // Binary search for the last segment with start_key <= key, then the line
  // arithmetic above. Keys outside [min_key, max_key] signal out-of-range;
  // callers treat that as a negative lookup.
  std::optional<PredictedRange> Predict(KeyInt key) const;

  const std::vector<Segment>& segments() const { return segments_; }
  uint32_t delta() const { return delta_; }
  uint64_t num_points() const { return num_points_; }
  KeyInt min_key() const { return min_key_; }
  KeyInt max_key() const { return max_key_; }

  uint64_t ApproximateMemoryBytes() const {
    return sizeof(*this) + segments_.size() * sizeof(Segment);
  }

 private:
  std::vector<Segment> segments_;
  uint32_t delta_ = 0;
  uint64_t num_points_ = 0;
  KeyInt min_key_ = 0;
  KeyInt max_key_ = 0;
};

// File encoding, little-endian throughout:
//   magic "BPLR" | version u32 | delta u32 | num_points u64 |
//   segment_count u32 | [start_key 16B | slope f64 | intercept f64]* |
//   crc32 of all preceding bytes
inline constexpr char kModelMagic[4] = {'B', 'P', 'L', 'R'};
inline constexpr uint32_t kModelVersion = 1;
inline constexpr size_t kModelSegmentBytes = 32;
inline constexpr size_t kModelHeaderBytes = 4 + 4 + 4 + 8 + 4;

Status SerializeModel(const PlrModel& model, std::string* out);
Status DeserializeModel(std::string_view data, PlrModel* out);

}  // namespace plr
}  // namespace lkv

#endif  // LKV_PLR_PLR_MODEL_H_
