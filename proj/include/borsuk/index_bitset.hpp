#ifndef BORSUK_INDEX_BITSET_HPP
#define BORSUK_INDEX_BITSET_HPP

#include <cstdint>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace borsuk {

// Fixed-capacity bitset over vertex indices, sized at construction.
class IndexBitset {
 public:
  IndexBitset() : nbits_(0) {}
  explicit IndexBitset(std::size_t nbits)
      : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

  std::size_t capacity() const { return nbits_; }

  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

  void set_all() {
    for (auto& w : words_) w = ~std::uint64_t{0};
    trim();
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(__builtin_popcountll(w));
    return c;
  }

  bool any() const {
    for (auto w : words_)
      if (w) return true;
    return false;
  }

  std::size_t intersect_count(const IndexBitset& other) const {
    std::size_t c = 0;
    for (std::size_t k = 0; k < words_.size(); ++k)
      c += static_cast<std::size_t>(__builtin_popcountll(words_[k] & other.words_[k]));
    return c;
  }

  bool intersects(const IndexBitset& other) const {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & other.words_[k]) return true;
    return false;
  }

  IndexBitset& operator&=(const IndexBitset& other) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= other.words_[k];
    return *this;
  }

  IndexBitset& operator|=(const IndexBitset& other) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= other.words_[k];
    return *this;
  }

  IndexBitset& and_not(const IndexBitset& other) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= ~other.words_[k];
    return *this;
  }

  // Calls f(index) for every set bit, in ascending order.
  template <typename F>
  void for_each(F f) const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      std::uint64_t w = words_[k];
      while (w) {
        std::size_t bit = static_cast<std::size_t>(__builtin_ctzll(w));
        f(k * 64 + bit);
        w &= w - 1;
      }
    }
  }

  friend bool operator==(const IndexBitset&, const IndexBitset&) = default;

 private:
  void trim() {
    if (nbits_ % 64 != 0 && !words_.empty())
      words_.back() &= (std::uint64_t{1} << (nbits_ % 64)) - 1;
  }

  std::size_t nbits_;
  std::vector<std::uint64_t> words_;
};

}  // namespace borsuk

#endif  // BORSUK_INDEX_BITSET_HPP
