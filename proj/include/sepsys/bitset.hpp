#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace sepsys {

/// Fixed-size bitset sized at runtime. Used for edge membership of family
/// members, where separation checks reduce to word-wise AND/ANDNOT.
class Bitset {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  Bitset() = default;
  explicit Bitset(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  std::size_t size() const { return size_; }
  std::size_t word_count() const { return words_.size(); }
  const std::vector<std::uint64_t>& words() const { return words_; }

  void set(std::size_t i) { words_[i >> 6] |= bit(i); }
  void reset(std::size_t i) { words_[i >> 6] &= ~bit(i); }
  bool test(std::size_t i) const { return (words_[i >> 6] & bit(i)) != 0; }

  void set_all() {
    for (auto& w : words_) w = ~std::uint64_t{0};
    trim();
  }
  void clear() {
    for (auto& w : words_) w = 0;
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool any() const {
    for (auto w : words_)
      if (w) return true;
    return false;
  }
  bool none() const { return !any(); }

  Bitset& operator&=(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  Bitset& operator|=(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  Bitset& subtract(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }

  bool is_subset_of(const Bitset& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }
  bool intersects(const Bitset& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }
  /// |this ∩ o|
  std::size_t count_and(const Bitset& o) const {
    std::size_t c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
      c += static_cast<std::size_t>(std::popcount(words_[i] & o.words_[i]));
    return c;
  }
  /// |this \ o|
  std::size_t count_and_not(const Bitset& o) const {
    std::size_t c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
      c += static_cast<std::size_t>(std::popcount(words_[i] & ~o.words_[i]));
    return c;
  }

  std::size_t find_first() const { return find_from(0); }
  std::size_t find_next(std::size_t i) const { return find_from(i + 1); }

  std::vector<std::size_t> to_indices() const {
    std::vector<std::size_t> out;
    for (auto i = find_first(); i != npos; i = find_next(i)) out.push_back(i);
    return out;
  }

  friend bool operator==(const Bitset&, const Bitset&) = default;

 private:
  static std::uint64_t bit(std::size_t i) { return std::uint64_t{1} << (i & 63); }

  std::size_t find_from(std::size_t i) const {
    if (i >= size_) return npos;
    std::size_t w = i >> 6;
    std::uint64_t cur = words_[w] & (~std::uint64_t{0} << (i & 63));
    while (true) {
      if (cur) return (w << 6) + static_cast<std::size_t>(std::countr_zero(cur));
      if (++w >= words_.size()) return npos;
      cur = words_[w];
    }
  }

  void trim() {
    if (size_ % 64 && !words_.empty())
      words_.back() &= (std::uint64_t{1} << (size_ % 64)) - 1;
  }

  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace sepsys
