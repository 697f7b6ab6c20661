#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "arith.hpp"
#include "config.hpp"

namespace grpcov {

  // Element of GF(p^k), encoded as sum coeffs[i] * p^i.
  struct FieldElement {
    std::uint32_t value = 0;
    friend bool operator==(FieldElement, FieldElement) = default;
  };

  // GF(p^k) as polynomials over GF(p) modulo a fixed irreducible polynomial,
  // with full addition and multiplication tables.
  class GaloisField {
   public:
    GaloisField(std::uint32_t p, unsigned k) : _p(p), _k(k) {
      if (!arith::is_prime(p)) {
        throw InvalidArgument("field characteristic " + std::to_string(p)
                              + " is not prime");
      }
      if (k == 0) {
        throw InvalidArgument("field extension degree must be positive");
      }
      _q = static_cast<std::uint32_t>(arith::ipow(p, k));
      if (_q > 4096) {
        throw InvalidArgument("field of order " + std::to_string(_q)
                              + " is too large for table arithmetic");
      }
      _modulus = default_modulus(p, k);
      build_tables();
    }

    // Fields of prime power order q.
    static GaloisField of_order(std::uint64_t q) {
      auto [p, k] = arith::prime_power(q);
      if (p == 0) {
        throw InvalidArgument(std::to_string(q) + " is not a prime power");
      }
      return GaloisField(static_cast<std::uint32_t>(p), k);
    }

    std::uint32_t characteristic() const noexcept { return _p; }
    unsigned      degree() const noexcept { return _k; }
    std::uint32_t size() const noexcept { return _q; }
    // Monic modulus, lowest coefficient first (length k + 1).
    std::vector<std::uint32_t> const& modulus() const noexcept {
      return _modulus;
    }

    FieldElement zero() const noexcept { return {0}; }
    FieldElement one() const noexcept { return {1}; }
    FieldElement element(std::uint32_t v) const {
      if (v >= _q) {
        throw InvalidArgument("field element code out of range");
      }
      return {v};
    }
    FieldElement from_coefficients(std::vector<std::uint32_t> const& c) const {
      std::uint32_t v = 0, w = 1;
      for (unsigned i = 0; i < _k; ++i) {
        v += (i < c.size() ? c[i] % _p : 0) * w;
        w *= _p;
      }
      return {v};
    }
    std::vector<std::uint32_t> coefficients(FieldElement a) const {
      std::vector<std::uint32_t> c(_k);
      for (unsigned i = 0; i < _k; ++i) {
        c[i] = a.value % _p;
        a.value /= _p;
      }
      return c;
    }

    FieldElement add(FieldElement a, FieldElement b) const {
      return {_add[a.value * _q + b.value]};
    }
    FieldElement neg(FieldElement a) const { return {_neg[a.value]}; }
    FieldElement sub(FieldElement a, FieldElement b) const {
      return add(a, neg(b));
    }
    FieldElement mul(FieldElement a, FieldElement b) const {
      return {_mul[a.value * _q + b.value]};
    }
    FieldElement inv(FieldElement a) const {
      if (a.value == 0) {
        throw InvalidArgument("inverse of zero");
      }
      return {_inv[a.value]};
    }
    FieldElement pow(FieldElement a, std::uint64_t e) const {
      FieldElement r = one();
      while (e > 0) {
        if (e & 1) {
          r = mul(r, a);
        }
        a = mul(a, a);
        e >>= 1;
      }
      return r;
    }
    std::uint64_t multiplicative_order(FieldElement a) const {
      if (a.value == 0) {
        return 0;
      }
      std::uint64_t n = 1;
      for (FieldElement x = a; x.value != 1; x = mul(x, a)) {
        ++n;
      }
      return n;
    }

   private:
    using Poly = std::vector<std::uint32_t>;

    // x^3+x+1 for GF(8) and x^2+1 for GF(9); otherwise the first monic
    // irreducible polynomial in order of its encoded lower coefficients.
    static Poly default_modulus(std::uint32_t p, unsigned k) {
      if (k == 1) {
        return {0, 1};
      }
      if (p == 2 && k == 3) {
        return {1, 1, 0, 1};
      }
      if (p == 3 && k == 2) {
        return {1, 0, 1};
      }
      std::uint64_t const count = arith::ipow(p, k);
      for (std::uint64_t code = 0; code < count; ++code) {
        Poly f(k + 1, 0);
        f[k]              = 1;
        std::uint64_t rem = code;
        for (unsigned i = 0; i < k; ++i) {
          f[i] = static_cast<std::uint32_t>(rem % p);
          rem /= p;
        }
        if (is_irreducible(f, p)) {
          return f;
        }
      }
      throw InvalidArgument("no irreducible polynomial found");
    }

    static void trim(Poly& a) {
      while (!a.empty() && a.back() == 0) {
        a.pop_back();
      }
    }

    static Poly poly_mod(Poly a, Poly const& m, std::uint32_t p) {
      trim(a);
      std::uint32_t const lead_inv
          = static_cast<std::uint32_t>(arith::powmod(m.back(), p - 2, p));
      while (a.size() >= m.size()) {
        std::uint32_t c     = a.back() * lead_inv % p;
        std::size_t   shift = a.size() - m.size();
        for (std::size_t i = 0; i < m.size(); ++i) {
          a[shift + i] = (a[shift + i] + p - c * m[i] % p) % p;
        }
        trim(a);
      }
      return a;
    }

    static bool is_irreducible(Poly const& f, std::uint32_t p) {
      unsigned const k = static_cast<unsigned>(f.size() - 1);
      for (unsigned d = 1; d <= k / 2; ++d) {
        std::uint64_t const count = arith::ipow(p, d);
        for (std::uint64_t code = 0; code < count; ++code) {
          Poly g(d + 1, 0);
          g[d]              = 1;
          std::uint64_t rem = code;
          for (unsigned i = 0; i < d; ++i) {
            g[i] = static_cast<std::uint32_t>(rem % p);
            rem /= p;
          }
          if (poly_mod(f, g, p).empty()) {
            return false;
          }
        }
      }
      return true;
    }

    void build_tables() {
      _add.assign(std::size_t(_q) * _q, 0);
      _mul.assign(std::size_t(_q) * _q, 0);
      _neg.assign(_q, 0);
      _inv.assign(_q, 0);
      for (std::uint32_t a = 0; a < _q; ++a) {
        auto ca = coefficients({a});
        for (std::uint32_t b = 0; b < _q; ++b) {
          auto cb = coefficients({b});
          Poly sum(_k);
          for (unsigned i = 0; i < _k; ++i) {
            sum[i] = (ca[i] + cb[i]) % _p;
          }
          _add[a * _q + b] = from_coefficients(sum).value;
          Poly prod(2 * _k, 0);
          for (unsigned i = 0; i < _k; ++i) {
            for (unsigned j = 0; j < _k; ++j) {
              prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % _p;
            }
          }
          _mul[a * _q + b] = from_coefficients(poly_mod(prod, _modulus, _p)).value;
        }
      }
      for (std::uint32_t a = 0; a < _q; ++a) {
        for (std::uint32_t b = 0; b < _q; ++b) {
          if (_add[a * _q + b] == 0) {
            _neg[a] = b;
          }
          if (_mul[a * _q + b] == 1) {
            _inv[a] = b;
          }
        }
      }
    }

    std::uint32_t              _p;
    unsigned                   _k;
    std::uint32_t              _q = 0;
    Poly                       _modulus;
    std::vector<std::uint32_t> _add, _mul, _neg, _inv;
  };

}  // namespace grpcov
