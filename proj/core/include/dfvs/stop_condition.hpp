#pragma once

#include <atomic>
#include <chrono>
#include <optional>

namespace dfvs {

using Clock = std::chrono::steady_clock;

/// Set-once cancellation flag plus an optional wall-clock deadline. Cheap to
/// copy; the flag is owned elsewhere (typically by the signal bridge).
class StopCondition {
 public:
  StopCondition() = default;
  explicit StopCondition(const std::atomic<bool>* flag,
                         std::optional<Clock::time_point> deadline = {})
      : flag_(flag), deadline_(deadline) {}

  bool stop_requested() const {
    if (flag_ != nullptr && flag_->load(std::memory_order_relaxed)) return true;
    return deadline_ && Clock::now() >= *deadline_;
  }

  bool cancelled() const {
    return flag_ != nullptr && flag_->load(std::memory_order_relaxed);
  }

  std::optional<Clock::time_point> deadline() const { return deadline_; }

  /// Time left until the deadline; nullopt when there is none.
  std::optional<Clock::duration> remaining() const {
    if (!deadline_) return std::nullopt;
    return *deadline_ - Clock::now();
  }

 private:
  const std::atomic<bool>* flag_ = nullptr;
  std::optional<Clock::time_point> deadline_;
};

}  // namespace dfvs
