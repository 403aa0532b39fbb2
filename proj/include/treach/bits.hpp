#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace treach {

// Fixed-capacity bitset sized at runtime. The reachability kernels spend most
// of their time OR-ing and popcounting these, so everything is inline and the
// word vector is exposed for the hot loops.
class DynBits {
  public:
    DynBits() = default;
    explicit DynBits(int n) : n_(n), w_((n + 63) / 64, 0) {}

    void reset() { std::fill(w_.begin(), w_.end(), 0); }
    void set(int i) { w_[i >> 6] |= std::uint64_t(1) << (i & 63); }
    void clear(int i) { w_[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }
    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

    int count() const {
        int c = 0;
        for (std::uint64_t x : w_) c += std::popcount(x);
        return c;
    }

    void or_with(const DynBits& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    }

    int size() const { return n_; }
    std::uint64_t* words() { return w_.data(); }
    const std::uint64_t* words() const { return w_.data(); }
    int word_count() const { return static_cast<int>(w_.size()); }

    bool operator==(const DynBits& o) const = default;

    // Sorted list of set bit positions.
    std::vector<int> to_indices() const {
        std::vector<int> out;
        for (int wi = 0; wi < word_count(); ++wi) {
            std::uint64_t x = w_[wi];
            while (x) {
                int b = std::countr_zero(x);
                out.push_back(wi * 64 + b);
                x &= x - 1;
            }
        }
        return out;
    }

  private:
    int n_ = 0;
    std::vector<std::uint64_t> w_;
};

} // namespace treach
