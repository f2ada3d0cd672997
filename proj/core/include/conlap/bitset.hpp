#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace conlap {

// Fixed-width set of small indices backed by 64-bit words.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t width) : width_(width), words_((width + 63) / 64, 0) {}

  [[nodiscard]] std::size_t width() const noexcept { return width_; }
  // Grows (or shrinks) the index range; members beyond the new width are dropped.
  void resize(std::size_t width) {
    words_.resize((width + 63) / 64, 0);
    if (width < width_ && width % 64 != 0 && !words_.empty()) {
      words_.back() &= (std::uint64_t{1} << (width % 64)) - 1;
    }
    width_ = width;
  }

  void set(std::size_t i) noexcept { words_[i / 64] |= (std::uint64_t{1} << (i % 64)); }
  void reset(std::size_t i) noexcept { words_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
  [[nodiscard]] bool test(std::size_t i) const noexcept {
    return (words_[i / 64] >> (i % 64)) & 1U;
  }

  [[nodiscard]] std::size_t count() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  [[nodiscard]] bool none() const noexcept {
    for (auto w : words_) {
      if (w != 0) return false;
    }
    return true;
  }
  [[nodiscard]] bool any() const noexcept { return !none(); }

  [[nodiscard]] bool intersects(const Bitset& o) const noexcept {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      if ((words_[k] & o.words_[k]) != 0) return true;
    }
    return false;
  }
  // True when every member of *this is a member of o.
  [[nodiscard]] bool subset_of(const Bitset& o) const noexcept {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      if ((words_[k] & ~o.words_[k]) != 0) return false;
    }
    return true;
  }

  Bitset& operator&=(const Bitset& o) noexcept {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
    return *this;
  }
  Bitset& operator|=(const Bitset& o) noexcept {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
    return *this;
  }
  friend Bitset operator&(Bitset a, const Bitset& b) noexcept { return a &= b; }
  friend Bitset operator|(Bitset a, const Bitset& b) noexcept { return a |= b; }
  friend bool operator==(const Bitset&, const Bitset&) = default;

  // Calls fn(i) for every member in increasing order.
  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      std::uint64_t w = words_[k];
      while (w != 0) {
        const auto bit = static_cast<std::size_t>(std::countr_zero(w));
        fn(k * 64 + bit);
        w &= w - 1;
      }
    }
  }

  // Clears every member with index <= i.
  void clear_through(std::size_t i) noexcept {
    const std::size_t word = i / 64;
    for (std::size_t k = 0; k < word && k < words_.size(); ++k) words_[k] = 0;
    if (word < words_.size()) {
      const std::size_t bit = i % 64;
      words_[word] &= (bit == 63) ? 0 : ~((std::uint64_t{2} << bit) - 1);
    }
  }

 private:
  std::size_t width_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace conlap
