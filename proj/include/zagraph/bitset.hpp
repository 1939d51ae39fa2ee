#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

namespace zag {

// Fixed-width membership vector. Used for element sets of a ring (ElementSet)
// and for adjacency rows of graphs.
class BitSet {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  BitSet() = default;
  explicit BitSet(std::size_t size) : size_(size), words_((size + kWordBits - 1) / kWordBits, 0) {}
  BitSet(std::size_t size, std::initializer_list<std::size_t> members) : BitSet(size) {
    for (auto m : members) set(m);
  }

  static BitSet full(std::size_t size) {
    BitSet s(size);
    for (auto& w : s.words_) w = ~Word{0};
    s.trim();
    return s;
  }

  std::size_t size() const noexcept { return size_; }

  bool test(std::size_t i) const noexcept { return (words_[i / kWordBits] >> (i % kWordBits)) & 1U; }
  void set(std::size_t i) noexcept { words_[i / kWordBits] |= Word{1} << (i % kWordBits); }
  void reset(std::size_t i) noexcept { words_[i / kWordBits] &= ~(Word{1} << (i % kWordBits)); }
  void assign(std::size_t i, bool v) noexcept { v ? set(i) : reset(i); }

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool any() const noexcept {
    for (auto w : words_)
      if (w) return true;
    return false;
  }
  bool none() const noexcept { return !any(); }

  // Index of the lowest member, or size() if empty.
  std::size_t first() const noexcept { return next(0); }
  // Index of the lowest member >= from, or size() if none.
  std::size_t next(std::size_t from) const noexcept {
    if (from >= size_) return size_;
    std::size_t wi = from / kWordBits;
    Word w = words_[wi] & (~Word{0} << (from % kWordBits));
    while (true) {
      if (w) return wi * kWordBits + static_cast<std::size_t>(std::countr_zero(w));
      if (++wi == words_.size()) return size_;
      w = words_[wi];
    }
  }

  bool intersects(const BitSet& o) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }
  bool is_subset_of(const BitSet& o) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }
  std::size_t intersection_count(const BitSet& o) const noexcept {
    std::size_t c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) c += static_cast<std::size_t>(std::popcount(words_[i] & o.words_[i]));
    return c;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      Word w = words_[wi];
      while (w) {
        f(wi * kWordBits + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  std::vector<std::size_t> members() const {
    std::vector<std::size_t> out;
    out.reserve(count());
    for_each([&](std::size_t i) { out.push_back(i); });
    return out;
  }

  BitSet& operator&=(const BitSet& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  BitSet& operator|=(const BitSet& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  BitSet& operator-=(const BitSet& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend BitSet operator&(BitSet a, const BitSet& b) noexcept { return a &= b; }
  friend BitSet operator|(BitSet a, const BitSet& b) noexcept { return a |= b; }
  friend BitSet operator-(BitSet a, const BitSet& b) noexcept { return a -= b; }
  BitSet operator~() const {
    BitSet r = *this;
    for (auto& w : r.words_) w = ~w;
    r.trim();
    return r;
  }

  friend bool operator==(const BitSet&, const BitSet&) = default;

  // Canonical order: compare the ascending member lists lexicographically,
  // so the set holding the smallest differing element sorts first.
  friend std::strong_ordering operator<=>(const BitSet& a, const BitSet& b) noexcept {
    if (auto c = a.size_ <=> b.size_; c != 0) return c;
    for (std::size_t i = 0; i < a.words_.size(); ++i) {
      Word diff = a.words_[i] ^ b.words_[i];
      if (!diff) continue;
      Word low = diff & (~diff + 1);
      return (a.words_[i] & low) ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
  }

  std::size_t hash() const noexcept {
    std::size_t h = size_;
    for (auto w : words_) h ^= std::hash<Word>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }

 private:
  void trim() noexcept {
    if (size_ % kWordBits && !words_.empty()) words_.back() &= (Word{1} << (size_ % kWordBits)) - 1;
  }

  std::size_t size_ = 0;
  std::vector<Word> words_;
};

struct BitSetHash {
  std::size_t operator()(const BitSet& s) const noexcept { return s.hash(); }
};

// A subset of a ring's element domain; size() is the ring order.
using ElementSet = BitSet;

}  // namespace zag
