#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace zdrlab {

/// Fixed-width bitset sized at runtime. Used for adjacency rows and vertex sets.
class DynamicBitset {
 public:
  DynamicBitset() = default;
  explicit DynamicBitset(std::size_t bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

  std::size_t size() const noexcept { return bits_; }

  bool test(std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i) noexcept { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) noexcept { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  void clear() noexcept {
    for (auto& w : words_) w = 0;
  }

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool any() const noexcept {
    for (auto w : words_)
      if (w != 0) return true;
    return false;
  }
  bool none() const noexcept { return !any(); }

  bool intersects(const DynamicBitset& other) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & other.words_[i]) return true;
    return false;
  }

  DynamicBitset& operator&=(const DynamicBitset& other) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
  }
  DynamicBitset& operator|=(const DynamicBitset& other) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
  }
  /// Clears every bit that is set in `other`.
  DynamicBitset& subtract(const DynamicBitset& other) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
    return *this;
  }

  /// Index of the first set bit at or after `from`, or size() when none.
  std::size_t find_next(std::size_t from) const noexcept {
    if (from >= bits_) return bits_;
    std::size_t wi = from >> 6;
    std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (from & 63));
    while (true) {
      if (w != 0) {
        std::size_t idx = (wi << 6) + static_cast<std::size_t>(std::countr_zero(w));
        return idx < bits_ ? idx : bits_;
      }
      if (++wi >= words_.size()) return bits_;
      w = words_[wi];
    }
  }
  std::size_t find_first() const noexcept { return find_next(0); }

  const std::vector<std::uint64_t>& words() const noexcept { return words_; }

  friend bool operator==(const DynamicBitset&, const DynamicBitset&) = default;
  friend auto operator<=>(const DynamicBitset& a, const DynamicBitset& b) {
    return a.words_ <=> b.words_;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t i = find_first(); i < bits_; i = find_next(i + 1)) f(i);
  }

 private:
  std::size_t bits_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace zdrlab
