#ifndef LATSPEC_BITS_HPP
#define LATSPEC_BITS_HPP

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <string>
#include <string_view>
#include <vector>

namespace latspec {

/// Subset of a carrier {0, ..., n-1} with n <= 64, stored as one machine word.
///
/// Lattice carriers and spectrum point sets both use this type; all set
/// algebra in the library reduces to word operations on it.
class Bits {
 public:
  static constexpr std::size_t kCapacity = 64;

  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = std::size_t;
    using difference_type = std::ptrdiff_t;
    using pointer = void;
    using reference = std::size_t;

    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}

    constexpr std::size_t operator*() const { return static_cast<std::size_t>(std::countr_zero(rest_)); }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    constexpr bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr Bits() = default;
  constexpr explicit Bits(std::uint64_t word) : word_(word) {}

  static constexpr Bits single(std::size_t i) { return Bits{std::uint64_t{1} << i}; }
  static constexpr Bits full(std::size_t n) {
    return n >= kCapacity ? Bits{~std::uint64_t{0}} : Bits{(std::uint64_t{1} << n) - 1};
  }

  constexpr std::uint64_t word() const { return word_; }
  constexpr bool empty() const { return word_ == 0; }
  constexpr std::size_t count() const { return static_cast<std::size_t>(std::popcount(word_)); }
  constexpr bool contains(std::size_t i) const { return (word_ >> i) & 1U; }
  constexpr void insert(std::size_t i) { word_ |= std::uint64_t{1} << i; }
  constexpr void erase(std::size_t i) { word_ &= ~(std::uint64_t{1} << i); }
  /// Index of the lowest member; undefined on the empty set.
  constexpr std::size_t lowest() const { return static_cast<std::size_t>(std::countr_zero(word_)); }

  constexpr bool subset_of(Bits other) const { return (word_ & ~other.word_) == 0; }
  constexpr bool intersects(Bits other) const { return (word_ & other.word_) != 0; }

  constexpr Bits operator|(Bits o) const { return Bits{word_ | o.word_}; }
  constexpr Bits operator&(Bits o) const { return Bits{word_ & o.word_}; }
  constexpr Bits operator^(Bits o) const { return Bits{word_ ^ o.word_}; }
  /// Set difference.
  constexpr Bits operator-(Bits o) const { return Bits{word_ & ~o.word_}; }
  constexpr Bits& operator|=(Bits o) { word_ |= o.word_; return *this; }
  constexpr Bits& operator&=(Bits o) { word_ &= o.word_; return *this; }
  constexpr Bits& operator-=(Bits o) { word_ &= ~o.word_; return *this; }

  /// Complement relative to a carrier of size n.
  constexpr Bits complement(std::size_t n) const { return full(n) - *this; }

  constexpr bool operator==(const Bits&) const = default;
  constexpr std::strong_ordering operator<=>(const Bits&) const = default;

  constexpr iterator begin() const { return iterator{word_}; }
  constexpr iterator end() const { return iterator{}; }

 private:
  std::uint64_t word_ = 0;
};

struct BitsHash {
  std::size_t operator()(Bits b) const noexcept { return std::hash<std::uint64_t>{}(b.word()); }
};

/// Renders a subset as `{x,y,...}` using the given display names.
inline std::string format_set(Bits set, const std::vector<std::string>& names) {
  std::string out = "{";
  bool first = true;
  for (std::size_t i : set) {
    if (!first) out += ',';
    first = false;
    out += i < names.size() ? names[i] : std::to_string(i);
  }
  out += '}';
  return out;
}

}  // namespace latspec

#endif  // LATSPEC_BITS_HPP
