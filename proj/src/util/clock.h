#ifndef LKV_UTIL_CLOCK_H_
#define LKV_UTIL_CLOCK_H_

#include <chrono>
#include <condition_variable>
#include <cstdint>
#include <functional>
#include <mutex>

namespace lkv {

// Time source for file timestamps and wait timers. The learner blocks on
// WaitUntil so a virtual clock can drive scheduling deterministically in
// tests. Step duration measurements always use the real steady clock.
class Clock {
 public:
  virtual ~Clock() = default;
  virtual int64_t NowNs() = 0;

  // Blocks until NowNs() >= deadline_ns or `wake` is notified. Returns the
  // current time.
  virtual int64_t WaitUntil(std::unique_lock<std::mutex>& lock,
                            std::condition_variable& wake,
                            int64_t deadline_ns) = 0;
};

class SystemClock : public Clock {
 public:
  static SystemClock* Default() {
    static SystemClock clock;
    return &clock;
  }

  int64_t NowNs() override {
    return std::chrono::duration_cast<std::chrono::nanoseconds>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
  }

  int64_t WaitUntil(std::unique_lock<std::mutex>& lock,
                    std::condition_variable& wake,
                    int64_t deadline_ns) override {
    int64_t now = NowNs();
    if (now < deadline_ns) {
      wake.wait_for(lock, std::chrono::nanoseconds(deadline_ns - now));
    }
    return NowNs();
  }
};

// Manually advanced clock. Waiters are re-notified on every Advance call.
class VirtualClock : public Clock {
 public:
  explicit VirtualClock(int64_t start_ns = 0) : now_ns_(start_ns) {}

  int64_t NowNs() override {
    std::lock_guard<std::mutex> l(mu_);
    return now_ns_;
  }

  int64_t WaitUntil(std::unique_lock<std::mutex>& lock,
                    std::condition_variable& wake,
                    int64_t deadline_ns) override {
    if (NowNs() < deadline_ns) {
      wake.wait_for(lock, std::chrono::milliseconds(50));
    }
    return NowNs();
  }

  void AdvanceNs(int64_t delta_ns) {
    {
      std::lock_guard<std::mutex> l(mu_);
      now_ns_ += delta_ns;
    }
    if (on_advance_) on_advance_();
  }

  void AdvanceMs(int64_t delta_ms) { AdvanceNs(delta_ms * 1000000); }

  // Installed by the learner so Advance wakes its scheduler immediately.
  void SetAdvanceCallback(std::function<void()> cb) {
    on_advance_ = std::move(cb);
  }

 private:
  std::mutex mu_;
  int64_t now_ns_;
  std::function<void()> on_advance_;
};

// Real elapsed-time measurement for step timings and reports.
inline uint64_t MonotonicNowNs() {
  return std::chrono::duration_cast<std::chrono::nanoseconds>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

}  // namespace lkv

#endif  // LKV_UTIL_CLOCK_H_
