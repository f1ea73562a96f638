#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace paley {

/// Fixed-size bitset with a runtime length; the word layout is exposed for
/// the bit-parallel solver.
class Bitset {
public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  Bitset() = default;
  explicit Bitset(std::size_t n) : n_(n), words_((n + kWordBits - 1) / kWordBits, 0) {}

  std::size_t size() const { return n_; }
  std::size_t word_count() const { return words_.size(); }
  Word *data() { return words_.data(); }
  const Word *data() const { return words_.data(); }

  bool test(std::size_t i) const { return (words_[i / kWordBits] >> (i % kWordBits)) & 1u; }
  void set(std::size_t i) { words_[i / kWordBits] |= Word{1} << (i % kWordBits); }
  void reset(std::size_t i) { words_[i / kWordBits] &= ~(Word{1} << (i % kWordBits)); }
  void set_all() {
    for (auto &w : words_)
      w = ~Word{0};
    clear_tail();
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_)
      c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool none() const {
    for (auto w : words_)
      if (w)
        return false;
    return true;
  }

  /// Index of the first set bit at or after `from`, or size() if none.
  std::size_t next(std::size_t from) const {
    if (from >= n_)
      return n_;
    std::size_t wi = from / kWordBits;
    Word w = words_[wi] & (~Word{0} << (from % kWordBits));
    while (true) {
      if (w)
        return wi * kWordBits + static_cast<std::size_t>(std::countr_zero(w));
      if (++wi == words_.size())
        return n_;
      w = words_[wi];
    }
  }

  Bitset &operator&=(const Bitset &o) {
    for (std::size_t i = 0; i < words_.size(); ++i)
      words_[i] &= o.words_[i];
    return *this;
  }
  Bitset &operator|=(const Bitset &o) {
    for (std::size_t i = 0; i < words_.size(); ++i)
      words_[i] |= o.words_[i];
    return *this;
  }
  Bitset &subtract(const Bitset &o) {
    for (std::size_t i = 0; i < words_.size(); ++i)
      words_[i] &= ~o.words_[i];
    return *this;
  }
  void flip() {
    for (auto &w : words_)
      w = ~w;
    clear_tail();
  }

  bool operator==(const Bitset &) const = default;

private:
  void clear_tail() {
    if (n_ % kWordBits != 0 && !words_.empty())
      words_.back() &= (Word{1} << (n_ % kWordBits)) - 1;
  }

  std::size_t n_ = 0;
  std::vector<Word> words_;
};

} // namespace paley
