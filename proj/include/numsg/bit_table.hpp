// Dense bit table used for gap and pseudo-Frobenius sets.

#ifndef NUMSG_BIT_TABLE_HPP_
#define NUMSG_BIT_TABLE_HPP_

#include <bit>      // for countr_zero, popcount
#include <compare>  // for strong_ordering
#include <cstddef>  // for size_t
#include <cstdint>  // for uint64_t
#include <span>     // for span
#include <vector>   // for vector

namespace numsg {

  // Fixed-size set of integers in [0, size()). Bits at or beyond size() are
  // always zero.
  class BitTable {
   public:
    BitTable() = default;
    explicit BitTable(std::size_t size)
        : _size(size), _words((size + 63) / 64, 0) {}

    // Takes (size + 63) / 64 words; bits at or beyond size must be clear.
    BitTable(std::size_t size, std::span<std::uint64_t const> words)
        : _size(size), _words(words.begin(), words.end()) {}

    std::size_t size() const noexcept {
      return _size;
    }

    bool test(std::size_t i) const noexcept {
      return i < _size && ((_words[i >> 6] >> (i & 63)) & 1U);
    }

    void set(std::size_t i) noexcept {
      _words[i >> 6] |= std::uint64_t{1} << (i & 63);
    }

    void reset(std::size_t i) noexcept {
      _words[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
    }

    std::span<std::uint64_t const> words() const noexcept {
      return _words;
    }

    std::size_t count() const noexcept;

    bool none() const noexcept;

    // True iff for every set bit i >= shift, bit i - shift is also set.
    bool closed_under_subtraction(std::size_t shift) const noexcept;

    // True iff some set bit i of other has bit i + shift set in *this.
    bool intersects_shifted(BitTable const& other,
                            std::size_t     shift) const noexcept;

    template <typename Func>
    void for_each(Func&& f) const {
      for (std::size_t w = 0; w < _words.size(); ++w) {
        std::uint64_t word = _words[w];
        while (word != 0) {
          f(static_cast<int>(w * 64 + std::countr_zero(word)));
          word &= word - 1;
        }
      }
    }

    std::vector<int> to_vector() const;

    // Lexicographic comparison of the two sets read as ascending sequences,
    // valid when both tables have the same size and the top bit set in both:
    // the set holding the least element of the symmetric difference is the
    // smaller one.
    std::strong_ordering compare_same_top(BitTable const& that) const noexcept;

    bool operator==(BitTable const&) const = default;

   private:
    std::size_t                _size = 0;
    std::vector<std::uint64_t> _words;
  };

}  // namespace numsg

#endif  // NUMSG_BIT_TABLE_HPP_
