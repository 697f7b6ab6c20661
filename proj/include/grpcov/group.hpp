#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <memory>
#include <random>
#include <ranges>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "arith.hpp"
#include "bitset.hpp"
#include "config.hpp"
#include "permutation.hpp"

namespace grpcov {

  // Groups up to this order keep a dense multiplication table; larger ones
  // evaluate products through their construction law.
  inline constexpr std::size_t table_limit = 8192;

  // Up to this order associativity is checked on every triple.
  inline constexpr std::size_t exhaustive_associativity_limit = 512;

  namespace detail {
    struct GroupData {
      std::size_t                     n = 1;
      std::vector<std::uint16_t>      table;
      std::function<Elem(Elem, Elem)> law;
      std::vector<Elem>               inverse;
      std::vector<std::uint32_t>      orders;
      std::vector<Elem>               generators;
      std::vector<Permutation>        perms;
    };
  }  // namespace detail

  // An immutable finite group on the element ids 0..order()-1 with 0 the
  // identity. Copies share the underlying tables.
  class Group {
   public:
    using Law = std::function<Elem(Elem, Elem)>;

    // The trivial group.
    Group() : Group(from_law(1, [](Elem, Elem) { return Elem(0); })) {}

    // Builds a group from a total product on 0..n-1 in which 0 is the
    // identity. Closure, identity, inverses and associativity are checked.
    static Group from_law(std::size_t n, Law law,
                          std::size_t cap = limits().max_elements);

    std::size_t order() const noexcept { return _d->n; }
    Elem        identity() const noexcept { return 0; }

    Elem mul(Elem a, Elem b) const {
      auto const& d = *_d;
      if (!d.table.empty()) {
        return d.table[std::size_t(a) * d.n + b];
      }
      return d.law(a, b);
    }
    Elem inv(Elem a) const { return _d->inverse[a]; }
    std::uint32_t element_order(Elem a) const { return _d->orders[a]; }
    std::span<std::uint32_t const> element_orders() const noexcept {
      return _d->orders;
    }

    // x^k for any integer k.
    Elem pow(Elem x, std::int64_t k) const {
      auto const o = std::int64_t(_d->orders[x]);
      k %= o;
      if (k < 0) {
        k += o;
      }
      return raw_pow(x, std::uint64_t(k));
    }

    // g^-1 x g
    Elem conj(Elem x, Elem g) const { return mul(mul(inv(g), x), g); }
    // x^-1 y^-1 x y
    Elem commutator(Elem x, Elem y) const {
      return mul(mul(inv(x), inv(y)), mul(x, y));
    }

    std::span<Elem const> generators() const noexcept {
      return _d->generators;
    }

    auto elements() const {
      return std::views::iota(Elem(0), Elem(_d->n));
    }

    bool has_table() const noexcept { return !_d->table.empty(); }

    bool is_abelian() const {
      for (auto x : _d->generators) {
        for (auto y : _d->generators) {
          if (mul(x, y) != mul(y, x)) {
            return false;
          }
        }
      }
      return true;
    }

    // Permutation realising element x, for groups built from permutations.
    Permutation const* permutation(Elem x) const {
      return _d->perms.empty() ? nullptr : &_d->perms[x];
    }

    bool same_as(Group const& that) const noexcept { return _d == that._d; }

   private:
    friend Group group_from_generators(std::vector<Permutation> const&,
                                       std::size_t, std::size_t);

    explicit Group(std::shared_ptr<detail::GroupData const> d)
        : _d(std::move(d)) {}

    Elem raw_pow(Elem x, std::uint64_t k) const {
      Elem result = 0;
      Elem base   = x;
      while (k > 0) {
        if (k & 1) {
          result = mul(result, base);
        }
        base = mul(base, base);
        k >>= 1;
      }
      return result;
    }

    static Group finish(std::shared_ptr<detail::GroupData> d);

    std::shared_ptr<detail::GroupData const> _d;
  };

  // The subgroup generated by gens, as a membership set.
  inline Bitset generate(Group const& g, std::span<Elem const> gens) {
    Bitset            members(g.order());
    std::vector<Elem> queue{g.identity()};
    members.set(g.identity());
    for (std::size_t i = 0; i < queue.size(); ++i) {
      for (auto s : gens) {
        Elem y = g.mul(queue[i], s);
        if (!members.test(y)) {
          members.set(y);
          queue.push_back(y);
        }
      }
    }
    return members;
  }

  // Extends members (a subgroup) by the elements gens and returns the
  // generated subgroup.
  inline Bitset generate_from(Group const&          g,
                              Bitset const&         members,
                              std::span<Elem const> old_gens,
                              std::span<Elem const> gens) {
    std::vector<Elem> all(old_gens.begin(), old_gens.end());
    all.insert(all.end(), gens.begin(), gens.end());
    Bitset            out = members;
    std::vector<Elem> queue = members.to_vector();
    for (std::size_t i = 0; i < queue.size(); ++i) {
      for (auto s : all) {
        Elem y = g.mul(queue[i], s);
        if (!out.test(y)) {
          out.set(y);
          queue.push_back(y);
        }
      }
    }
    return out;
  }

  inline Group Group::finish(std::shared_ptr<detail::GroupData> d) {
    std::size_t const n = d->n;
    Group             tmp{std::shared_ptr<detail::GroupData const>(d)};

    // Element orders: the least divisor k of n with x^k = 1.
    auto primes = arith::prime_divisors(n);
    d->orders.assign(n, 0);
    for (Elem x = 0; x < n; ++x) {
      if (tmp.raw_pow(x, n) != 0) {
        throw InvalidArgument("product is not a group law: x^|G| != 1 for "
                              "element "
                              + std::to_string(x));
      }
      std::uint64_t k = n;
      for (auto p : primes) {
        while (k % p == 0 && tmp.raw_pow(x, k / p) == 0) {
          k /= p;
        }
      }
      d->orders[x] = static_cast<std::uint32_t>(k);
    }
    d->inverse.resize(n);
    for (Elem x = 0; x < n; ++x) {
      d->inverse[x] = tmp.raw_pow(x, d->orders[x] - 1);
      if (tmp.mul(x, d->inverse[x]) != 0 || tmp.mul(d->inverse[x], x) != 0) {
        throw InvalidArgument("inverse law fails for element "
                              + std::to_string(x));
      }
    }

    // Associativity: exhaustive for small orders, random triples otherwise.
    if (n <= exhaustive_associativity_limit) {
      for (Elem a = 0; a < n; ++a) {
        for (Elem b = 0; b < n; ++b) {
          Elem ab = tmp.mul(a, b);
          for (Elem c = 0; c < n; ++c) {
            if (tmp.mul(ab, c) != tmp.mul(a, tmp.mul(b, c))) {
              throw InvalidArgument("product is not associative");
            }
          }
        }
      }
    } else {
      std::mt19937_64                    rng(0x5eed);
      std::uniform_int_distribution<Elem> pick(0, Elem(n - 1));
      for (int i = 0; i < 1000; ++i) {
        Elem a = pick(rng), b = pick(rng), c = pick(rng);
        if (tmp.mul(tmp.mul(a, b), c) != tmp.mul(a, tmp.mul(b, c))) {
          throw InvalidArgument("product is not associative");
        }
      }
    }

    // Small generating set: greedily add elements of largest order.
    std::vector<Elem> by_order(n);
    for (Elem x = 0; x < n; ++x) {
      by_order[x] = x;
    }
    std::stable_sort(by_order.begin(), by_order.end(), [&](Elem a, Elem b) {
      return d->orders[a] > d->orders[b];
    });
    Bitset current(n);
    current.set(0);
    std::vector<Elem> gens;
    std::size_t       have = 1;
    for (auto x : by_order) {
      if (have == n) {
        break;
      }
      if (!current.test(x)) {
        Elem one[] = {x};
        current    = generate_from(tmp, current, gens, one);
        have       = current.count();
        gens.push_back(x);
      }
    }
    d->generators = std::move(gens);
    return Group(std::shared_ptr<detail::GroupData const>(std::move(d)));
  }

  inline Group Group::from_law(std::size_t n, Law law, std::size_t cap) {
    if (n == 0) {
      throw InvalidArgument("a group has at least one element");
    }
    if (n > cap) {
      throw CapExceeded("group of order " + std::to_string(n)
                            + " exceeds the element cap",
                        cap);
    }
    if (n > std::numeric_limits<Elem>::max()) {
      throw CapExceeded("group order exceeds the element index range",
                        std::numeric_limits<Elem>::max());
    }
    auto d = std::make_shared<detail::GroupData>();
    d->n   = n;
    for (Elem x = 0; x < n; ++x) {
      if (law(0, x) != x || law(x, 0) != x) {
        throw InvalidArgument("element 0 is not an identity");
      }
    }
    if (n <= table_limit) {
      d->table.resize(n * n);
      for (Elem a = 0; a < n; ++a) {
        for (Elem b = 0; b < n; ++b) {
          Elem c = law(a, b);
          if (c >= n) {
            throw InvalidArgument("product leaves the element range");
          }
          d->table[std::size_t(a) * n + b] = static_cast<std::uint16_t>(c);
        }
      }
    } else {
      d->law = std::move(law);
    }
    return finish(std::move(d));
  }

  // The closure of the permutations gens acting on {0,...,degree-1}.
  // Element 0 is the identity; elements are numbered in breadth-first order.
  inline Group group_from_generators(std::vector<Permutation> const& gens,
                                     std::size_t                     degree,
                                     std::size_t cap = limits().max_elements) {
    for (auto const& g : gens) {
      if (g.degree() != degree) {
        throw InvalidArgument("generator of degree "
                              + std::to_string(g.degree())
                              + " on a domain of size "
                              + std::to_string(degree));
      }
      if (!g.is_bijection()) {
        throw InvalidArgument("generator is not a bijection");
      }
    }
    auto key = [](Permutation const& p) {
      std::u32string s(p.degree(), U'\0');
      for (std::size_t i = 0; i < p.degree(); ++i) {
        s[i] = static_cast<char32_t>(p[i]);
      }
      return s;
    };

    struct State {
      std::vector<Permutation>                 elems;
      std::unordered_map<std::u32string, Elem> index;
    };
    auto st = std::make_shared<State>();
    st->elems.push_back(Permutation::identity(degree));
    st->index.emplace(key(st->elems[0]), 0);
    std::vector<std::vector<Elem>> right(gens.size());
    std::vector<Elem>              parent{0};
    std::vector<std::uint32_t>     via{0};

    for (std::size_t i = 0; i < st->elems.size(); ++i) {
      for (std::size_t k = 0; k < gens.size(); ++k) {
        Permutation y = st->elems[i] * gens[k];
        auto        ky = key(y);
        auto        it = st->index.find(ky);
        Elem        id;
        if (it == st->index.end()) {
          if (st->elems.size() >= cap) {
            throw CapExceeded("closure of the generators exceeds the "
                              "element cap",
                              cap);
          }
          id = static_cast<Elem>(st->elems.size());
          st->index.emplace(std::move(ky), id);
          st->elems.push_back(std::move(y));
          parent.push_back(static_cast<Elem>(i));
          via.push_back(static_cast<std::uint32_t>(k));
        } else {
          id = it->second;
        }
        right[k].push_back(id);
      }
    }

    std::size_t const n = st->elems.size();
    auto              d = std::make_shared<detail::GroupData>();
    d->n                = n;
    if (n <= table_limit) {
      d->table.resize(n * n);
      for (Elem a = 0; a < n; ++a) {
        d->table[std::size_t(a) * n] = static_cast<std::uint16_t>(a);
      }
      for (Elem b = 1; b < n; ++b) {
        auto const& r = right[via[b]];
        for (Elem a = 0; a < n; ++a) {
          d->table[std::size_t(a) * n + b]
              = static_cast<std::uint16_t>(r[d->table[std::size_t(a) * n + parent[b]]]);
        }
      }
    } else {
      d->law = [st](Elem a, Elem b) {
        Permutation p = st->elems[a] * st->elems[b];
        std::u32string s(p.degree(), U'\0');
        for (std::size_t i = 0; i < p.degree(); ++i) {
          s[i] = static_cast<char32_t>(p[i]);
        }
        return st->index.at(s);
      };
    }
    d->perms = st->elems;
    return Group::finish(std::move(d));
  }

  inline std::uint32_t element_order(Group const& g, Elem x) {
    return g.element_order(x);
  }

  // Componentwise product; element (a, b) has id a * |W| + b.
  inline Group direct_product(Group const& g, Group const& w,
                              std::size_t cap = limits().max_elements) {
    std::size_t const m = w.order();
    if (g.order() > cap / m) {
      throw CapExceeded("direct product of orders " + std::to_string(g.order())
                            + " and " + std::to_string(m)
                            + " exceeds the element cap",
                        cap);
    }
    return Group::from_law(
        g.order() * m,
        [g, w, m](Elem x, Elem y) {
          return Elem(g.mul(Elem(x / m), Elem(y / m)) * m
                      + w.mul(Elem(x % m), Elem(y % m)));
        },
        cap);
  }

  inline Elem embed_left(Group const& w, Elem x) { return Elem(x * w.order()); }
  inline Elem embed_right(Elem y) { return y; }

}  // namespace grpcov
