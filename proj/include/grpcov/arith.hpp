#pragma once

#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

namespace grpcov::arith {

  inline bool is_prime(std::uint64_t n) {
    if (n < 2) {
      return false;
    }
    for (std::uint64_t d = 2; d * d <= n; ++d) {
      if (n % d == 0) {
        return false;
      }
    }
    return true;
  }

  // (prime, exponent) pairs in increasing prime order.
  inline std::vector<std::pair<std::uint64_t, unsigned>>
  factorize(std::uint64_t n) {
    std::vector<std::pair<std::uint64_t, unsigned>> out;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
      if (n % p == 0) {
        unsigned e = 0;
        while (n % p == 0) {
          n /= p;
          ++e;
        }
        out.emplace_back(p, e);
      }
    }
    if (n > 1) {
      out.emplace_back(n, 1);
    }
    return out;
  }

  inline std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (auto [p, e] : factorize(n)) {
      out.push_back(p);
    }
    return out;
  }

  inline std::uint64_t ipow(std::uint64_t b, unsigned e) {
    std::uint64_t r = 1;
    while (e-- > 0) {
      r *= b;
    }
    return r;
  }

  inline std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    b %= m;
    while (e > 0) {
      if (e & 1) {
        r = r * b % m;
      }
      b = b * b % m;
      e >>= 1;
    }
    return r;
  }

  // Largest power of p dividing n.
  inline std::uint64_t p_part(std::uint64_t n, std::uint64_t p) {
    std::uint64_t r = 1;
    while (n % p == 0) {
      n /= p;
      r *= p;
    }
    return r;
  }

  // If q = p^k for a prime p, returns {p, k}; otherwise {0, 0}.
  inline std::pair<std::uint64_t, unsigned> prime_power(std::uint64_t q) {
    auto f = factorize(q);
    if (f.size() != 1) {
      return {0, 0};
    }
    return f.front();
  }

}  // namespace grpcov::arith
