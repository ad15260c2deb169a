#ifndef LKV_PLR_PLR_TRAINER_H_
#define LKV_PLR_PLR_TRAINER_H_

#include <cstdint>
#include <span>
#include <vector>

#include "lkv/key.h"
#include "lkv/status.h"
#include "plr/plr_model.h"

namespace lkv {
namespace plr {

// Single-pass greedy segmentation: a feasible slope cone anchored at the
// segment's first point is intersected with each new point's constraint;
// when the cone empties, the segment is sealed and the point starts a new
// one. Equality at the cone boundary continues the current segment.
class GreedyPlrBuilder {
 public:
  explicit GreedyPlrBuilder(uint32_t delta) : delta_(delta) {}

  // Keys must arrive strictly increasing; positions increment from the
  // first Add. The caller validates ordering.
  void Add(KeyInt key, uint64_t pos);
  std::vector<Segment> TakeSegments();

 private:
  void Seal();

  uint32_t delta_;
  bool open_ = false;
  KeyInt anchor_key_ = 0;
  uint64_t anchor_pos_ = 0;
  uint64_t points_in_segment_ = 0;
  double slope_lo_ = 0;
  double slope_hi_ = 0;
  std::vector<Segment> segments_;
};

// Trains a model over (keys[i], i) pairs and guarantees the delta bound
// under the actual inference arithmetic: a post-training pass re-predicts
// every point and retrains any violating segment with a tightened training
// bound until the model verifies clean.
//
// Fails with InvalidArgument on empty input, delta < 1, or keys that are
// not strictly ascending.
Status TrainGreedyPlr(std::span<const KeyInt> keys, uint32_t delta,
                      PlrModel* out);

}  // namespace plr
}  // namespace lkv

#endif  // LKV_PLR_PLR_TRAINER_H_
