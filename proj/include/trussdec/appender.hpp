#pragma once

#include <atomic>
#include <cstddef>
#include <cstdint>

namespace trussdec {

/// Worker-private staging buffer in front of a shared array. A flush
/// reserves a contiguous range with a single atomic tail addition and then
/// copies, so the shared tail is touched once per `Capacity` appends.
template <typename T, std::size_t Capacity = 2048>
class BufferedAppender {
public:
    BufferedAppender(T* target, std::atomic<std::size_t>& tail)
        : target_(target), tail_(&tail) {}

    ~BufferedAppender() { flush(); }

    BufferedAppender(const BufferedAppender&) = delete;
    BufferedAppender& operator=(const BufferedAppender&) = delete;

    void push(T value) {
        buf_[count_++] = value;
        if (count_ == Capacity) flush();
    }

    void flush() {
        if (count_ == 0) return;
        std::size_t base = tail_->fetch_add(count_, std::memory_order_relaxed);
        for (std::size_t i = 0; i < count_; i++) target_[base + i] = buf_[i];
        count_ = 0;
    }

private:
    T* target_;
    std::atomic<std::size_t>* tail_;
    std::size_t count_ = 0;
    T buf_[Capacity];
};

}  // namespace trussdec
