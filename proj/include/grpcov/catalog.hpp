#pragma once

#include <algorithm>
#include <array>
#include <charconv>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "arith.hpp"
#include "config.hpp"
#include "finite_field.hpp"
#include "group.hpp"
#include "permutation.hpp"

namespace grpcov {

  enum class Family {
    Cyc,
    Ab,
    Dih,
    GenQ,
    ModT,
    SemiW,
    ModR,
    Meta,
    Alt,
    Sym,
    SL23,
    PSL2,
    PSL3,
    TCd,
    TCe,
    TCf,
    TCg,
    U36,
    Prod
  };

  struct GroupSpec {
    Family                     family = Family::Cyc;
    std::vector<std::uint64_t> params;
    std::vector<GroupSpec>     factors;  // Prod only

    friend bool operator==(GroupSpec const&, GroupSpec const&) = default;
  };

  namespace detail {
    struct FamilyName {
      Family           family;
      std::string_view name;
      std::string_view alias;
    };

    inline constexpr std::array<FamilyName, 19> family_names{{
        {Family::Cyc, "Cyc", "C"},       {Family::Ab, "Ab", "Ab"},
        {Family::Dih, "Dih", "D"},       {Family::GenQ, "GenQ", "Q"},
        {Family::ModT, "ModT", "T"},     {Family::SemiW, "SemiW", "W"},
        {Family::ModR, "ModR", "R"},     {Family::Meta, "Meta", "Meta"},
        {Family::Alt, "Alt", "A"},       {Family::Sym, "Sym", "S"},
        {Family::SL23, "SL23", "SL23"},  {Family::PSL2, "PSL2", "PSL2"},
        {Family::PSL3, "PSL3", "PSL3"},  {Family::TCd, "TCd", "TCd"},
        {Family::TCe, "TCe", "TCe"},     {Family::TCf, "TCf", "TCf"},
        {Family::TCg, "TCg", "TCg"},     {Family::U36, "U36", "U36"},
        {Family::Prod, "Prod", "Prod"},
    }};
  }  // namespace detail

  inline std::string_view family_name(Family f) {
    for (auto const& e : detail::family_names) {
      if (e.family == f) {
        return e.name;
      }
    }
    return "?";
  }

  // Canonical text, e.g. "Dih:5" or "Prod:[Cyc:3],[Alt:4]".
  inline std::string to_string(GroupSpec const& s) {
    std::string out(family_name(s.family));
    if (s.family == Family::Prod) {
      out += ':';
      for (std::size_t i = 0; i < s.factors.size(); ++i) {
        out += (i ? ",[" : "[") + to_string(s.factors[i]) + "]";
      }
      return out;
    }
    for (std::size_t i = 0; i < s.params.size(); ++i) {
      out += (i ? "," : ":") + std::to_string(s.params[i]);
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Validation
  ////////////////////////////////////////////////////////////////////////

  namespace detail {
    inline void require(bool ok, GroupSpec const& s, std::string const& what) {
      if (!ok) {
        throw InvalidArgument(std::string(family_name(s.family)) + ": " + what);
      }
    }

    inline void require_arity(GroupSpec const& s, std::size_t lo,
                              std::size_t hi) {
      std::size_t k = s.params.size();
      if (k < lo || k > hi) {
        std::string want = lo == hi ? std::to_string(lo)
                                    : std::to_string(lo) + " to "
                                          + std::to_string(hi);
        throw InvalidArgument(std::string(family_name(s.family)) + ": expects "
                              + want + " parameter(s), got "
                              + std::to_string(k));
      }
    }

    inline bool is_prime_power(std::uint64_t q) {
      return q >= 2 && arith::prime_power(q).first != 0;
    }

    // Saturating product for order formulas.
    inline std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
      if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) {
        return std::numeric_limits<std::uint64_t>::max();
      }
      return a * b;
    }

    inline std::uint64_t sat_pow(std::uint64_t b, std::uint64_t e) {
      std::uint64_t r = 1;
      for (std::uint64_t i = 0; i < e; ++i) {
        r = sat_mul(r, b);
      }
      return r;
    }
  }  // namespace detail

  // Throws InvalidArgument naming the failed invariant.
  inline void validate(GroupSpec const& s) {
    using detail::require;
    using detail::require_arity;
    auto const& p = s.params;
    switch (s.family) {
      case Family::Cyc:
        require_arity(s, 1, 1);
        require(p[0] >= 1, s, "order n >= 1 required");
        break;
      case Family::Ab:
        require_arity(s, 1, 64);
        for (auto x : p) {
          require(x >= 1, s, "every cyclic factor order must be >= 1");
        }
        break;
      case Family::Dih:
        require_arity(s, 1, 1);
        require(p[0] >= 3, s, "n >= 3 required (order 2n)");
        break;
      case Family::GenQ:
        require_arity(s, 1, 1);
        require(p[0] >= 3, s, "exponent n >= 3 required (order 2^n)");
        require(p[0] <= 40, s, "exponent n too large");
        break;
      case Family::ModT:
      case Family::SemiW:
        require_arity(s, 1, 1);
        require(p[0] >= 4, s, "exponent n >= 4 required (order 2^n)");
        require(p[0] <= 40, s, "exponent n too large");
        break;
      case Family::ModR:
        require_arity(s, 1, 1);
        require(p[0] >= 3, s, "exponent n >= 3 required (order 3^n)");
        require(p[0] <= 25, s, "exponent n too large");
        break;
      case Family::Meta: {
        require_arity(s, 3, 4);
        auto m = p[0], n = p[1], r = p[2];
        require(m >= 2, s, "m >= 2 required");
        require(n >= 1, s, "n >= 1 required");
        require(r < m, s, "0 <= r < m required");
        require(arith::powmod(r, n, m) == 1 % m, s,
                "r^n = 1 (mod m) required");
        if (p.size() == 4) {
          auto t = p[3];
          require(t < m, s, "0 <= s < m required");
          require((t * ((r + m - 1) % m)) % m == 0, s,
                  "s(r-1) = 0 (mod m) required");
        }
        break;
      }
      case Family::Alt:
      case Family::Sym:
        require_arity(s, 1, 1);
        require(p[0] >= 1, s, "degree n >= 1 required");
        require(p[0] <= 20, s, "degree n too large");
        break;
      case Family::SL23:
      case Family::U36:
        require_arity(s, 0, 0);
        break;
      case Family::PSL2:
      case Family::PSL3:
        require_arity(s, 1, 1);
        require(detail::is_prime_power(p[0]), s,
                "field order q must be a prime power");
        require(p[0] <= 4096, s, "field order q too large");
        break;
      case Family::TCd:
      case Family::TCe:
      case Family::TCf:
      case Family::TCg: {
        require_arity(s, 1, 1);
        auto n = p[0];
        require(n >= 1, s, "n >= 1 required");
        require(n <= 1'000'000, s, "n too large");
        bool plus_one = s.family == Family::TCd || s.family == Family::TCf;
        if (plus_one) {
          require((n + 1) % 3 != 0, s, "3 must not divide n+1");
        } else {
          require((n + 2) % 3 != 0, s, "3 must not divide n+2");
        }
        if (s.family == Family::TCf || s.family == Family::TCg) {
          require(n % 2 == 0, s, "n must be even");
        }
        break;
      }
      case Family::Prod:
        require(!s.factors.empty(), s, "at least one factor required");
        require(p.empty(), s, "factors must be bracketed specs");
        for (auto const& f : s.factors) {
          validate(f);
        }
        break;
    }
  }

  // Closed-form order (saturating at 2^64-1).
  inline std::uint64_t expected_order(GroupSpec const& s) {
    using detail::sat_mul;
    using detail::sat_pow;
    auto const& p = s.params;
    switch (s.family) {
      case Family::Cyc:
        return p[0];
      case Family::Ab: {
        std::uint64_t r = 1;
        for (auto x : p) {
          r = sat_mul(r, x);
        }
        return r;
      }
      case Family::Dih:
        return sat_mul(2, p[0]);
      case Family::GenQ:
      case Family::ModT:
      case Family::SemiW:
        return sat_pow(2, p[0]);
      case Family::ModR:
        return sat_pow(3, p[0]);
      case Family::Meta:
        return sat_mul(p[0], p[1]);
      case Family::Alt:
      case Family::Sym: {
        std::uint64_t r = 1;
        for (std::uint64_t i = 2; i <= p[0]; ++i) {
          r = sat_mul(r, i);
        }
        return s.family == Family::Alt && p[0] >= 2 ? r / 2 : r;
      }
      case Family::SL23:
        return 24;
      case Family::U36:
        return 36;
      case Family::PSL2: {
        auto q = p[0];
        return sat_mul(q, q * q - 1) / std::gcd<std::uint64_t>(2, q - 1);
      }
      case Family::PSL3: {
        auto q = p[0];
        auto o = sat_mul(sat_mul(sat_pow(q, 3), sat_pow(q, 3) - 1), q * q - 1);
        return o / std::gcd<std::uint64_t>(3, q - 1);
      }
      case Family::TCd:
      case Family::TCe:
      case Family::TCf:
      case Family::TCg:
        return sat_mul(18, p[0]);
      case Family::Prod: {
        std::uint64_t r = 1;
        for (auto const& f : s.factors) {
          r = sat_mul(r, expected_order(f));
        }
        return r;
      }
    }
    return 0;
  }

  ////////////////////////////////////////////////////////////////////////
  // Parsing
  ////////////////////////////////////////////////////////////////////////

  namespace detail {
    inline std::optional<Family> family_from_name(std::string_view w) {
      for (auto const& e : family_names) {
        if (w == e.name || w == e.alias) {
          return e.family;
        }
      }
      return std::nullopt;
    }

    inline std::string_view trim(std::string_view t) {
      while (!t.empty() && (t.front() == ' ' || t.front() == '\t')) {
        t.remove_prefix(1);
      }
      while (!t.empty() && (t.back() == ' ' || t.back() == '\t')) {
        t.remove_suffix(1);
      }
      return t;
    }

    inline GroupSpec parse_spec_unchecked(std::string_view text) {
      text = trim(text);
      auto colon = text.find(':');
      auto head  = trim(text.substr(0, colon));
      auto fam   = family_from_name(head);
      if (!fam) {
        throw InvalidArgument("unknown group family '" + std::string(head)
                              + "'");
      }
      GroupSpec s;
      s.family = *fam;
      if (colon == std::string_view::npos) {
        return s;
      }
      auto body = trim(text.substr(colon + 1));
      if (s.family == Family::Prod) {
        std::size_t i = 0;
        while (i < body.size()) {
          if (body[i] != '[') {
            throw InvalidArgument("Prod: expected '[' at position "
                                  + std::to_string(i));
          }
          int         depth = 0;
          std::size_t j     = i;
          for (; j < body.size(); ++j) {
            depth += body[j] == '[';
            depth -= body[j] == ']';
            if (depth == 0) {
              break;
            }
          }
          if (j == body.size()) {
            throw InvalidArgument("Prod: unbalanced brackets");
          }
          s.factors.push_back(parse_spec_unchecked(body.substr(i + 1, j - i - 1)));
          i = j + 1;
          while (i < body.size() && (body[i] == ' ' || body[i] == '\t')) {
            ++i;
          }
          if (i < body.size()) {
            if (body[i] != ',') {
              throw InvalidArgument("Prod: expected ',' between factors");
            }
            ++i;
            while (i < body.size() && (body[i] == ' ' || body[i] == '\t')) {
              ++i;
            }
            if (i == body.size()) {
              throw InvalidArgument("Prod: trailing ','");
            }
          }
        }
        return s;
      }
      if (body.empty()) {
        return s;
      }
      std::size_t start = 0;
      while (true) {
        auto comma = body.find(',', start);
        auto tok   = trim(body.substr(start, comma == std::string_view::npos
                                                   ? std::string_view::npos
                                                   : comma - start));
        std::uint64_t v   = 0;
        auto [ptr, ec]    = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size()) {
          throw InvalidArgument(std::string(family_name(s.family))
                                + ": parameter '" + std::string(tok)
                                + "' is not a non-negative integer");
        }
        s.params.push_back(v);
        if (comma == std::string_view::npos) {
          break;
        }
        start = comma + 1;
      }
      return s;
    }
  }  // namespace detail

  // Grammar FAMILY[:p1,p2,...]; Prod takes bracketed sub-specs,
  // e.g. "Prod:[D:5],[C:3]".
  inline GroupSpec parse_spec(std::string_view text) {
    auto s = detail::parse_spec_unchecked(text);
    validate(s);
    return s;
  }

  ////////////////////////////////////////////////////////////////////////
  // Constructions
  ////////////////////////////////////////////////////////////////////////

  // a^i b^j in <a, b | a^{3n} = 1, a^b = a^r, a^3 = b^6>.
  struct AmalgamNormalForm {
    std::uint64_t i = 0;  // mod 3n
    std::uint64_t j = 0;  // mod 6
    std::uint64_t r = 1;
    std::uint64_t n = 1;

    friend AmalgamNormalForm operator*(AmalgamNormalForm const& x,
                                       AmalgamNormalForm const& y) {
      std::uint64_t const m = 3 * x.n;
      std::uint64_t       e = (x.i + y.i * arith::powmod(x.r, x.j, m)) % m;
      std::uint64_t       j = x.j + y.j;
      if (j >= 6) {
        j -= 6;
        e = (e + 3) % m;
      }
      return {e, j, x.r, x.n};
    }
    friend bool operator==(AmalgamNormalForm const&,
                           AmalgamNormalForm const&) = default;
  };

  namespace detail {
    // <a, b | a^m = 1, b^nb = a^s, a^b = a^r>; a^i b^j has id j*m + i.
    inline Group metacyclic(std::uint64_t m, std::uint64_t nb, std::uint64_t r,
                            std::uint64_t s, std::size_t cap) {
      std::vector<std::uint64_t> rpow(nb);
      rpow[0] = 1 % m;
      for (std::uint64_t j = 1; j < nb; ++j) {
        rpow[j] = rpow[j - 1] * r % m;
      }
      return Group::from_law(
          m * nb,
          [m, nb, s, rpow = std::move(rpow)](Elem x, Elem y) {
            std::uint64_t i = x % m, j = x / m, k = y % m, l = y / m;
            std::uint64_t e = (i + k * rpow[j]) % m;
            std::uint64_t t = j + l;
            if (t >= nb) {
              t -= nb;
              e = (e + s) % m;
            }
            return Elem(t * m + e);
          },
          cap);
    }

    inline Group abelian(std::vector<std::uint64_t> const& orders,
                         std::size_t                       cap) {
      std::uint64_t n = 1;
      for (auto o : orders) {
        n = sat_mul(n, o);
      }
      return Group::from_law(
          n,
          [orders](Elem x, Elem y) {
            std::uint64_t out = 0, w = 1;
            for (auto o : orders) {
              out += ((x % o + y % o) % o) * w;
              x = Elem(x / o);
              y = Elem(y / o);
              w *= o;
            }
            return Elem(out);
          },
          cap);
    }

    inline Group symmetric_like(std::size_t n, bool alternating,
                                std::size_t cap) {
      if (n <= 1 || (alternating && n == 2)) {
        return group_from_generators({}, std::max<std::size_t>(n, 1), cap);
      }
      std::vector<Permutation> gens;
      auto cycle = [n](std::uint32_t from) {
        std::vector<std::uint32_t> c;
        for (std::uint32_t i = from; i < n; ++i) {
          c.push_back(i);
        }
        return Permutation::from_cycles(n, {c});
      };
      if (alternating) {
        gens.push_back(Permutation::from_cycles(n, {{0, 1, 2}}));
        if (n > 3) {
          gens.push_back(cycle(n % 2 == 1 ? 0 : 1));
        }
      } else {
        gens.push_back(Permutation::from_cycles(n, {{0, 1}}));
        gens.push_back(cycle(0));
      }
      return group_from_generators(gens, n, cap);
    }

    using Vec = std::vector<FieldElement>;

    // Scales v so its first nonzero coordinate is 1.
    inline Vec normalize(GaloisField const& f, Vec v) {
      for (auto x : v) {
        if (x.value != 0) {
          auto s = f.inv(x);
          for (auto& y : v) {
            y = f.mul(y, s);
          }
          break;
        }
      }
      return v;
    }

    inline std::uint32_t encode(GaloisField const& f, Vec const& v) {
      std::uint32_t code = 0;
      for (auto x : v) {
        code = code * f.size() + x.value;
      }
      return code;
    }

    // Row vector times matrix.
    inline Vec times(GaloisField const& f, Vec const& v,
                     std::vector<Vec> const& m) {
      Vec out(v.size(), f.zero());
      for (std::size_t i = 0; i < v.size(); ++i) {
        for (std::size_t j = 0; j < v.size(); ++j) {
          out[j] = f.add(out[j], f.mul(v[i], m[i][j]));
        }
      }
      return out;
    }

    // Elementary transvections I + t e_{ij}, t running over an additive basis
    // of GF(q) over its prime field; they generate SL(d, q).
    inline std::vector<std::vector<Vec>> transvections(GaloisField const& f,
                                                       std::size_t        d) {
      std::vector<std::vector<Vec>> out;
      for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
          if (i == j) {
            continue;
          }
          std::uint32_t t = 1;
          for (unsigned b = 0; b < f.degree(); ++b, t *= f.characteristic()) {
            std::vector<Vec> m(d, Vec(d, f.zero()));
            for (std::size_t k = 0; k < d; ++k) {
              m[k][k] = f.one();
            }
            m[i][j] = f.element(t);
            out.push_back(std::move(m));
          }
        }
      }
      return out;
    }

    // Acts on the given points (projective when normalizing) by v -> vM.
    inline Group matrix_action(GaloisField const& f, std::size_t d,
                               std::vector<Vec> const& points, bool projective,
                               std::size_t cap) {
      std::unordered_map<std::uint32_t, std::uint32_t> index;
      for (std::uint32_t i = 0; i < points.size(); ++i) {
        index.emplace(encode(f, points[i]), i);
      }
      std::vector<Permutation> gens;
      for (auto const& m : transvections(f, d)) {
        std::vector<std::uint32_t> im(points.size());
        for (std::size_t i = 0; i < points.size(); ++i) {
          auto w = times(f, points[i], m);
          if (projective) {
            w = normalize(f, std::move(w));
          }
          im[i] = index.at(encode(f, w));
        }
        gens.emplace_back(std::move(im));
      }
      return group_from_generators(gens, points.size(), cap);
    }

    inline std::vector<Vec> nonzero_vectors(GaloisField const& f, std::size_t d,
                                            bool projective) {
      std::vector<Vec> out;
      std::uint64_t const total = arith::ipow(f.size(), unsigned(d));
      for (std::uint64_t code = 1; code < total; ++code) {
        Vec           v(d);
        std::uint64_t c = code;
        for (std::size_t k = d; k-- > 0;) {
          v[k] = f.element(std::uint32_t(c % f.size()));
          c /= f.size();
        }
        if (!projective || normalize(f, v) == v) {
          out.push_back(std::move(v));
        }
      }
      return out;
    }

    inline Group projective_special_linear(std::size_t d, std::uint64_t q,
                                           std::size_t cap) {
      auto f = GaloisField::of_order(q);
      return matrix_action(f, d, nonzero_vectors(f, d, true), true, cap);
    }
  }  // namespace detail

  inline Group build_group(GroupSpec const& s,
                           std::size_t      cap = limits().max_elements) {
    validate(s);
    auto const order = expected_order(s);
    if (order > cap) {
      throw CapExceeded(to_string(s) + " has order " + std::to_string(order)
                            + ", above the element cap",
                        cap);
    }
    auto const& p = s.params;
    Group       g;
    switch (s.family) {
      case Family::Cyc:
        g = detail::abelian({p[0]}, cap);
        break;
      case Family::Ab:
        g = detail::abelian(p, cap);
        break;
      case Family::Dih:
        g = detail::metacyclic(p[0], 2, p[0] - 1, 0, cap);
        break;
      case Family::GenQ: {
        std::uint64_t m = arith::ipow(2, unsigned(p[0] - 1));
        g               = detail::metacyclic(m, 2, m - 1, m / 2, cap);
        break;
      }
      case Family::ModT: {
        std::uint64_t m = arith::ipow(2, unsigned(p[0] - 1));
        g               = detail::metacyclic(m, 2, m / 2 + 1, 0, cap);
        break;
      }
      case Family::SemiW: {
        std::uint64_t m = arith::ipow(2, unsigned(p[0] - 1));
        g               = detail::metacyclic(m, 2, m / 2 - 1, 0, cap);
        break;
      }
      case Family::ModR: {
        std::uint64_t m = arith::ipow(3, unsigned(p[0] - 1));
        g               = detail::metacyclic(m, 3, m / 3 + 1, 0, cap);
        break;
      }
      case Family::Meta:
        g = detail::metacyclic(p[0], p[1], p[2], p.size() == 4 ? p[3] : 0, cap);
        break;
      case Family::Alt:
      case Family::Sym:
        g = detail::symmetric_like(p[0], s.family == Family::Alt, cap);
        break;
      case Family::SL23: {
        auto f = GaloisField(3, 1);
        g      = detail::matrix_action(f, 2, detail::nonzero_vectors(f, 2, false),
                                       false, cap);
        break;
      }
      case Family::PSL2:
        g = detail::projective_special_linear(2, p[0], cap);
        break;
      case Family::PSL3:
        g = detail::projective_special_linear(3, p[0], cap);
        break;
      case Family::TCd:
      case Family::TCe:
      case Family::TCf:
      case Family::TCg: {
        std::uint64_t n     = p[0];
        bool plus_one       = s.family == Family::TCd || s.family == Family::TCf;
        std::uint64_t r     = (plus_one ? n + 1 : 2 * n + 1) % (3 * n);
        std::uint64_t const m = 3 * n;
        g = Group::from_law(
            18 * n,
            [m, r, n](Elem x, Elem y) {
              AmalgamNormalForm a{x % m, x / m, r, n}, b{y % m, y / m, r, n};
              auto c = a * b;
              return Elem(c.j * m + c.i);
            },
            cap);
        break;
      }
      case Family::U36:
        g = direct_product(detail::abelian({3}, cap),
                           detail::metacyclic(3, 4, 2, 0, cap), cap);
        break;
      case Family::Prod:
        g = build_group(s.factors[0], cap);
        for (std::size_t i = 1; i < s.factors.size(); ++i) {
          g = direct_product(g, build_group(s.factors[i], cap), cap);
        }
        break;
    }
    if (g.order() != order) {
      throw Error(to_string(s) + ": built order " + std::to_string(g.order())
                  + " differs from the closed form " + std::to_string(order));
    }
    return g;
  }

  inline Group build_group(std::string_view text,
                           std::size_t      cap = limits().max_elements) {
    return build_group(parse_spec(text), cap);
  }

}  // namespace grpcov
