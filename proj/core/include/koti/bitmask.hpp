#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "koti/errors.hpp"

namespace koti {

// Fixed-width bit vector. Bit i is element i; bits at or above size() are
// kept zero so whole-word comparisons stay valid.
class Bitmask {
public:
  Bitmask() = default;

  explicit Bitmask(std::size_t size) : size_(size), words_(word_count(size), 0) {}

  static Bitmask ones(std::size_t size) {
    Bitmask m(size);
    for (auto& w : m.words_) w = ~std::uint64_t{0};
    m.trim();
    return m;
  }

  // Low `size` bits of `value`; `value` must fit.
  static Bitmask from_u64(std::size_t size, std::uint64_t value) {
    if (size < 64 && (value >> size) != 0)
      throw std::logic_error("Bitmask::from_u64: value does not fit");
    Bitmask m(size);
    if (!m.words_.empty()) m.words_[0] = value;
    return m;
  }

  static Bitmask singleton(std::size_t size, std::size_t bit) {
    Bitmask m(size);
    m.set(bit);
    return m;
  }

  std::size_t size() const { return size_; }

  bool test(std::size_t i) const {
    check_index(i);
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }

  void set(std::size_t i, bool value = true) {
    check_index(i);
    const std::uint64_t bit = std::uint64_t{1} << (i & 63);
    if (value)
      words_[i >> 6] |= bit;
    else
      words_[i >> 6] &= ~bit;
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool none() const {
    for (auto w : words_)
      if (w != 0) return false;
    return true;
  }

  bool all() const { return count() == size_; }

  Bitmask operator~() const {
    Bitmask r(size_);
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = ~words_[i];
    r.trim();
    return r;
  }

  Bitmask operator&(const Bitmask& other) const {
    check_same_size(other);
    Bitmask r(size_);
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] & other.words_[i];
    return r;
  }

  Bitmask operator|(const Bitmask& other) const {
    check_same_size(other);
    Bitmask r(size_);
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] | other.words_[i];
    return r;
  }

  bool is_subset_of(const Bitmask& other) const {
    check_same_size(other);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if ((words_[i] & ~other.words_[i]) != 0) return false;
    return true;
  }

  bool intersects(const Bitmask& other) const {
    check_same_size(other);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if ((words_[i] & other.words_[i]) != 0) return true;
    return false;
  }

  // The mask read as an unsigned integer (bit i contributes 2^i).
  std::uint64_t to_u64() const {
    for (std::size_t i = 1; i < words_.size(); ++i)
      if (words_[i] != 0)
        throw Error(ErrorKind::CapacityExceeded, "bitmask value exceeds 64-bit range");
    return words_.empty() ? 0 : words_[0];
  }

  bool operator==(const Bitmask& other) const = default;

private:
  static std::size_t word_count(std::size_t bits) { return (bits + 63) / 64; }

  void trim() {
    if (size_ % 64 != 0 && !words_.empty())
      words_.back() &= (std::uint64_t{1} << (size_ % 64)) - 1;
  }

  void check_index(std::size_t i) const {
    if (i >= size_) throw std::logic_error("Bitmask: bit index out of range");
  }

  void check_same_size(const Bitmask& other) const {
    if (size_ != other.size_) throw std::logic_error("Bitmask: size mismatch");
  }

  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

} // namespace koti
