#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace grpcov {

  // Fixed-width bit array over element ids 0..size()-1. Subgroup membership,
  // intersections and containment tests are all word-parallel on this type.
  class Bitset {
   public:
    using word_type = std::uint64_t;
    static constexpr std::size_t word_bits = 64;

    Bitset() = default;
    explicit Bitset(std::size_t nbits)
        : _nbits(nbits), _words((nbits + word_bits - 1) / word_bits, 0) {}

    std::size_t size() const noexcept { return _nbits; }

    bool test(std::size_t i) const noexcept {
      return (_words[i / word_bits] >> (i % word_bits)) & 1u;
    }
    void set(std::size_t i) noexcept {
      _words[i / word_bits] |= word_type(1) << (i % word_bits);
    }
    void reset(std::size_t i) noexcept {
      _words[i / word_bits] &= ~(word_type(1) << (i % word_bits));
    }
    void set_all() noexcept {
      std::fill(_words.begin(), _words.end(), ~word_type(0));
      trim();
    }
    void clear() noexcept { std::fill(_words.begin(), _words.end(), 0); }

    std::size_t count() const noexcept {
      std::size_t c = 0;
      for (auto w : _words) {
        c += std::popcount(w);
      }
      return c;
    }
    bool none() const noexcept {
      return std::all_of(
          _words.begin(), _words.end(), [](word_type w) { return w == 0; });
    }
    bool all() const noexcept { return count() == _nbits; }

    Bitset& operator&=(Bitset const& that) noexcept {
      for (std::size_t i = 0; i < _words.size(); ++i) {
        _words[i] &= that._words[i];
      }
      return *this;
    }
    Bitset& operator|=(Bitset const& that) noexcept {
      for (std::size_t i = 0; i < _words.size(); ++i) {
        _words[i] |= that._words[i];
      }
      return *this;
    }
    // Removes the bits of that.
    Bitset& subtract(Bitset const& that) noexcept {
      for (std::size_t i = 0; i < _words.size(); ++i) {
        _words[i] &= ~that._words[i];
      }
      return *this;
    }

    friend Bitset operator&(Bitset a, Bitset const& b) { return a &= b; }
    friend Bitset operator|(Bitset a, Bitset const& b) { return a |= b; }

    bool is_subset_of(Bitset const& that) const noexcept {
      for (std::size_t i = 0; i < _words.size(); ++i) {
        if (_words[i] & ~that._words[i]) {
          return false;
        }
      }
      return true;
    }
    bool intersects(Bitset const& that) const noexcept {
      for (std::size_t i = 0; i < _words.size(); ++i) {
        if (_words[i] & that._words[i]) {
          return true;
        }
      }
      return false;
    }

    // Index of the lowest set bit, or size() if there is none.
    std::size_t first() const noexcept { return next(0); }
    // Index of the lowest set bit >= from, or size().
    std::size_t next(std::size_t from) const noexcept {
      if (from >= _nbits) {
        return _nbits;
      }
      std::size_t wi = from / word_bits;
      word_type   w  = _words[wi] & (~word_type(0) << (from % word_bits));
      while (true) {
        if (w != 0) {
          return wi * word_bits + std::countr_zero(w);
        }
        if (++wi == _words.size()) {
          return _nbits;
        }
        w = _words[wi];
      }
    }

    template <typename F>
    void for_each(F&& f) const {
      for (std::size_t wi = 0; wi < _words.size(); ++wi) {
        word_type w = _words[wi];
        while (w != 0) {
          f(wi * word_bits + std::countr_zero(w));
          w &= w - 1;
        }
      }
    }

    std::vector<std::uint32_t> to_vector() const {
      std::vector<std::uint32_t> out;
      out.reserve(count());
      for_each([&out](std::size_t i) { out.push_back(std::uint32_t(i)); });
      return out;
    }

    // Lexicographic order of the sorted member lists, for sets of equal
    // cardinality: the set owning the lowest bit of the symmetric difference
    // comes first.
    bool lex_less(Bitset const& that) const noexcept {
      for (std::size_t i = 0; i < _words.size(); ++i) {
        word_type diff = _words[i] ^ that._words[i];
        if (diff != 0) {
          return (_words[i] >> std::countr_zero(diff)) & 1u;
        }
      }
      return false;
    }

    std::size_t hash() const noexcept {
      std::size_t h = 0x9e3779b97f4a7c15ull ^ _nbits;
      for (auto w : _words) {
        h ^= std::hash<word_type>{}(w) + 0x9e3779b97f4a7c15ull + (h << 6)
             + (h >> 2);
      }
      return h;
    }

    friend bool operator==(Bitset const&, Bitset const&) = default;

   private:
    void trim() noexcept {
      if (_nbits % word_bits != 0 && !_words.empty()) {
        _words.back() &= (word_type(1) << (_nbits % word_bits)) - 1;
      }
    }

    std::size_t            _nbits = 0;
    std::vector<word_type> _words;
  };

  struct BitsetHash {
    std::size_t operator()(Bitset const& b) const noexcept { return b.hash(); }
  };

}  // namespace grpcov
