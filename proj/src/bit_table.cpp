#include "numsg/bit_table.hpp"

#include <algorithm>  // for all_of

namespace numsg {

  std::size_t BitTable::count() const noexcept {
    std::size_t n = 0;
    for (auto w : _words) {
      n += std::popcount(w);
    }
    return n;
  }

  bool BitTable::none() const noexcept {
    return std::all_of(
        _words.begin(), _words.end(), [](std::uint64_t w) { return w == 0; });
  }

  bool BitTable::closed_under_subtraction(std::size_t shift) const noexcept {
    // Word k of (*this >> shift) must be a subset of word k of *this.
    std::size_t const n    = _words.size();
    std::size_t const skip = shift >> 6;
    unsigned const    bits = shift & 63;
    for (std::size_t k = 0; k + skip < n; ++k) {
      std::uint64_t shifted = _words[k + skip] >> bits;
      if (bits != 0 && k + skip + 1 < n) {
        shifted |= _words[k + skip + 1] << (64 - bits);
      }
      if ((shifted & ~_words[k]) != 0) {
        return false;
      }
    }
    return true;
  }

  bool BitTable::intersects_shifted(BitTable const& other,
                                    std::size_t     shift) const noexcept {
    std::size_t const skip = shift >> 6;
    unsigned const    bits = shift & 63;
    std::size_t const m    = other._words.size();
    for (std::size_t k = skip; k < _words.size(); ++k) {
      std::size_t const src     = k - skip;
      std::uint64_t     shifted = src < m ? other._words[src] << bits : 0;
      if (bits != 0 && src >= 1 && src - 1 < m) {
        shifted |= other._words[src - 1] >> (64 - bits);
      }
      if ((shifted & _words[k]) != 0) {
        return true;
      }
    }
    return false;
  }

  std::strong_ordering BitTable::compare_same_top(
      BitTable const& that) const noexcept {
    for (std::size_t k = 0; k < _words.size(); ++k) {
      std::uint64_t const diff = _words[k] ^ that._words[k];
      if (diff != 0) {
        return (_words[k] & (diff & -diff)) != 0 ? std::strong_ordering::less
                                                 : std::strong_ordering::greater;
      }
    }
    return std::strong_ordering::equal;
  }

  std::vector<int> BitTable::to_vector() const {
    std::vector<int> out;
    out.reserve(count());
    for_each([&out](int i) { out.push_back(i); });
    return out;
  }

}  // namespace numsg
