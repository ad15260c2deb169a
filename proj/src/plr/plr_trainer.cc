#include "plr/plr_trainer.h"

#include <algorithm>
#include <cmath>
#include <limits>

namespace lkv {
namespace plr {

void GreedyPlrBuilder::Add(KeyInt key, uint64_t pos) {
  if (!open_) {
    open_ = true;
    anchor_key_ = key;
    anchor_pos_ = pos;
    points_in_segment_ = 1;
    slope_lo_ = -std::numeric_limits<double>::infinity();
    slope_hi_ = std::numeric_limits<double>::infinity();
    return;
  }
  const double dx = static_cast<double>(key - anchor_key_);
  const double dy =
      static_cast<double>(pos) - static_cast<double>(anchor_pos_);
  const double d = static_cast<double>(delta_);
  const double lo = (dy - d) / dx;
  const double hi = (dy + d) / dx;
  const double new_lo = std::max(slope_lo_, lo);
  const double new_hi = std::min(slope_hi_, hi);
  if (new_lo <= new_hi) {
    slope_lo_ = new_lo;
    slope_hi_ = new_hi;
    points_in_segment_++;
  } else {
    Seal();
    open_ = true;
    anchor_key_ = key;
    anchor_pos_ = pos;
    points_in_segment_ = 1;
    slope_lo_ = -std::numeric_limits<double>::infinity();
    slope_hi_ = std::numeric_limits<double>::infinity();
  }
}

void GreedyPlrBuilder::Seal() {
  Segment s;
  s.start_key = anchor_key_;
  s.intercept = static_cast<double>(anchor_pos_);
  if (points_in_segment_ <= 1) {
    s.slope = 0;
  } else {
    // Any slope in the cone satisfies every point of the segment; positions
    // ascend, so clamping the midpoint at zero stays feasible.
    s.slope = std::max(0.0, (slope_lo_ + slope_hi_) / 2);
  }
  segments_.push_back(s);
  open_ = false;
}

std::vector<Segment> GreedyPlrBuilder::TakeSegments() {
  if (open_) Seal();
  return std::move(segments_);
}

namespace {

struct SegmentSpan {
  Segment seg;
  uint64_t first = 0;  // index of the segment's first training point
  uint64_t last = 0;   // inclusive
};

// Mirrors PlrModel::Predict for the segment the inference search would pick.
inline bool PointOk(const Segment& seg, KeyInt key, uint64_t pos,
                    uint64_t num_points, uint32_t delta) {
  int64_t predicted = std::llround(seg.PredictRaw(key));
  predicted = std::clamp<int64_t>(predicted, 0,
                                  static_cast<int64_t>(num_points) - 1);
  int64_t err = predicted - static_cast<int64_t>(pos);
  return err <= static_cast<int64_t>(delta) &&
         -err <= static_cast<int64_t>(delta);
}

std::vector<SegmentSpan> BuildSpans(std::span<const KeyInt> keys,
                                    std::vector<Segment> segs) {
  std::vector<SegmentSpan> spans;
  spans.reserve(segs.size());
  size_t si = 0;
  for (size_t i = 0; i < keys.size(); i++) {
    while (si + 1 < segs.size() && keys[i] >= segs[si + 1].start_key) si++;
    if (spans.size() <= si) {
      spans.push_back({segs[si], i, i});
    } else {
      spans[si].last = i;
    }
  }
  return spans;
}

std::vector<Segment> TrainRange(std::span<const KeyInt> keys, uint64_t first,
                                uint64_t last, uint32_t delta) {
  if (delta == 0) {
    // Exact fallback: one segment per point.
    std::vector<Segment> out;
    out.reserve(last - first + 1);
    for (uint64_t i = first; i <= last; i++) {
      out.push_back({keys[i], 0, static_cast<double>(i)});
    }
    return out;
  }
  GreedyPlrBuilder builder(delta);
  for (uint64_t i = first; i <= last; i++) builder.Add(keys[i], i);
  return builder.TakeSegments();
}

}  // namespace

Status TrainGreedyPlr(std::span<const KeyInt> keys, uint32_t delta,
                      PlrModel* out) {
  if (keys.empty()) {
    return Status::InvalidArgument("plr: no training points");
  }
  if (delta < 1) {
    return Status::InvalidArgument("plr: delta must be >= 1");
  }
  for (size_t i = 1; i < keys.size(); i++) {
    if (keys[i] <= keys[i - 1]) {
      return Status::InvalidArgument("plr: keys not strictly ascending");
    }
  }

  GreedyPlrBuilder builder(delta);
  for (size_t i = 0; i < keys.size(); i++) {
    builder.Add(keys[i], i);
  }
  std::vector<SegmentSpan> spans = BuildSpans(keys, builder.TakeSegments());

  // Re-check every point under inference arithmetic; floating-point rounding
  // can push a prediction just past the bound, in which case the offending
  // span is retrained with a tighter bound until it verifies.
  const uint64_t n = keys.size();
  uint32_t train_delta = delta;
  for (;;) {
    std::vector<SegmentSpan> repaired;
    bool any_violation = false;
    for (const SegmentSpan& span : spans) {
      bool bad = false;
      for (uint64_t i = span.first; i <= span.last; i++) {
        if (!PointOk(span.seg, keys[i], i, n, delta)) {
          bad = true;
          break;
        }
      }
      if (!bad) {
        repaired.push_back(span);
        continue;
      }
      any_violation = true;
      uint32_t tighter = train_delta > 0 ? train_delta - 1 : 0;
      std::vector<Segment> sub =
          TrainRange(keys, span.first, span.last, tighter);
      std::vector<SegmentSpan> sub_spans = BuildSpans(
          std::span<const KeyInt>(keys.data() + span.first,
                                  span.last - span.first + 1),
          std::move(sub));
      for (SegmentSpan& ss : sub_spans) {
        ss.first += span.first;
        ss.last += span.first;
        repaired.push_back(ss);
      }
    }
    spans = std::move(repaired);
    if (!any_violation) break;
    if (train_delta > 0) train_delta--;
  }

  std::vector<Segment> segments;
  segments.reserve(spans.size());
  for (const SegmentSpan& span : spans) segments.push_back(span.seg);
  *out = PlrModel(std::move(segments), delta, n, keys.front(), keys.back());
  return Status::OK();
}

}  // namespace plr
}  // namespace lkv
