#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "config.hpp"

namespace grpcov {

  // A bijection of {0,...,degree-1}. Products compose left to right:
  // (x * y)[i] = y[x[i]], i.e. apply x first.
  class Permutation {
   public:
    Permutation() = default;
    explicit Permutation(std::vector<std::uint32_t> images)
        : _images(std::move(images)) {}

    static Permutation identity(std::size_t degree) {
      std::vector<std::uint32_t> im(degree);
      for (std::size_t i = 0; i < degree; ++i) {
        im[i] = static_cast<std::uint32_t>(i);
      }
      return Permutation(std::move(im));
    }

    // Builds a permutation from disjoint cycles of 0-based points.
    static Permutation
    from_cycles(std::size_t                                    degree,
                std::vector<std::vector<std::uint32_t>> const& cycles) {
      auto p = identity(degree);
      std::vector<bool> seen(degree, false);
      for (auto const& c : cycles) {
        for (std::size_t i = 0; i < c.size(); ++i) {
          if (c[i] >= degree) {
            throw InvalidArgument("cycle point " + std::to_string(c[i])
                                  + " outside degree "
                                  + std::to_string(degree));
          }
          if (seen[c[i]]) {
            throw InvalidArgument("point " + std::to_string(c[i])
                                  + " repeated in cycle notation");
          }
          seen[c[i]]       = true;
          p._images[c[i]] = c[(i + 1) % c.size()];
        }
      }
      return p;
    }

    std::size_t degree() const noexcept { return _images.size(); }
    std::uint32_t operator[](std::size_t i) const { return _images[i]; }
    std::vector<std::uint32_t> const& images() const noexcept {
      return _images;
    }

    bool is_bijection() const {
      std::vector<bool> hit(_images.size(), false);
      for (auto x : _images) {
        if (x >= _images.size() || hit[x]) {
          return false;
        }
        hit[x] = true;
      }
      return true;
    }

    bool is_identity() const noexcept {
      for (std::size_t i = 0; i < _images.size(); ++i) {
        if (_images[i] != i) {
          return false;
        }
      }
      return true;
    }

    Permutation inverse() const {
      std::vector<std::uint32_t> im(_images.size());
      for (std::size_t i = 0; i < _images.size(); ++i) {
        im[_images[i]] = static_cast<std::uint32_t>(i);
      }
      return Permutation(std::move(im));
    }

    friend Permutation operator*(Permutation const& x, Permutation const& y) {
      std::vector<std::uint32_t> im(x.degree());
      for (std::size_t i = 0; i < im.size(); ++i) {
        im[i] = y._images[x._images[i]];
      }
      return Permutation(std::move(im));
    }

    bool is_even() const {
      std::vector<bool> seen(_images.size(), false);
      std::size_t       transpositions = 0;
      for (std::size_t i = 0; i < _images.size(); ++i) {
        if (seen[i]) {
          continue;
        }
        std::size_t len = 0;
        for (std::size_t j = i; !seen[j]; j = _images[j]) {
          seen[j] = true;
          ++len;
        }
        transpositions += len - 1;
      }
      return transpositions % 2 == 0;
    }

    std::vector<std::vector<std::uint32_t>> cycles() const {
      std::vector<std::vector<std::uint32_t>> out;
      std::vector<bool> seen(_images.size(), false);
      for (std::uint32_t i = 0; i < _images.size(); ++i) {
        if (seen[i] || _images[i] == i) {
          continue;
        }
        std::vector<std::uint32_t> c;
        for (std::uint32_t j = i; !seen[j]; j = _images[j]) {
          seen[j] = true;
          c.push_back(j);
        }
        out.push_back(std::move(c));
      }
      return out;
    }

    friend bool operator==(Permutation const&, Permutation const&) = default;

   private:
    std::vector<std::uint32_t> _images;
  };

}  // namespace grpcov
