#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "arith.hpp"
#include "group.hpp"
#include "subgroup.hpp"

namespace grpcov {

  // Invariant factors (prime-power cyclic orders, ascending) of an abelian
  // group, read off from how many elements have order dividing p^k.
  inline std::vector<std::uint64_t> abelian_invariants(Group const& a) {
    std::vector<std::uint64_t> out;
    for (auto [p, e] : arith::factorize(a.order())) {
      // ranks[k] = number of cyclic factors of order >= p^k
      std::vector<unsigned> logs(e + 1, 0);
      for (unsigned k = 1; k <= e; ++k) {
        std::uint64_t pk    = arith::ipow(p, k);
        std::uint64_t count = 0;
        for (auto x : a.elements()) {
          count += pk % a.element_order(x) == 0;
        }
        unsigned l = 0;
        while (count > 1) {
          count /= p;
          ++l;
        }
        logs[k] = l;
      }
      std::vector<unsigned> at_least(e + 2, 0);
      for (unsigned k = 1; k <= e; ++k) {
        at_least[k] = logs[k] - logs[k - 1];
      }
      for (unsigned k = 1; k <= e; ++k) {
        for (unsigned j = 0; j < at_least[k] - at_least[k + 1]; ++j) {
          out.push_back(arith::ipow(p, k));
        }
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  struct Fingerprint {
    std::size_t                              order;
    std::map<std::uint32_t, std::size_t>     order_histogram;
    std::size_t                              center_order;
    std::size_t                              derived_order;
    std::vector<std::uint64_t>               abelian_invariants;

    friend bool operator==(Fingerprint const&, Fingerprint const&) = default;
  };

  inline Fingerprint fingerprint(Group const& g) {
    Fingerprint f;
    f.order = g.order();
    for (auto x : g.elements()) {
      ++f.order_histogram[g.element_order(x)];
    }
    f.center_order  = center(g).order();
    auto derived    = derived_subgroup(g);
    f.derived_order = derived.order();
    f.abelian_invariants
        = abelian_invariants(quotient_group(g, derived));
    return f;
  }

  namespace detail {
    // Greedy generating sequence: each step adds the element whose join with
    // the current subgroup is largest.
    inline std::vector<Elem> greedy_generating_sequence(Group const& g) {
      std::vector<Elem> gens;
      Bitset            current(g.order());
      current.set(g.identity());
      while (current.count() < g.order()) {
        Elem        best      = 0;
        std::size_t best_size = 0;
        Bitset      best_set;
        for (auto x : g.elements()) {
          if (current.test(x)) {
            continue;
          }
          Elem one[] = {x};
          auto s     = generate_from(g, current, gens, one);
          auto c     = s.count();
          if (c > best_size
              || (c == best_size
                  && g.element_order(x) > g.element_order(best))) {
            best      = x;
            best_size = c;
            best_set  = std::move(s);
            if (c == g.order()) {
              break;
            }
          }
        }
        gens.push_back(best);
        current = std::move(best_set);
      }
      return gens;
    }

    // Extends gens[i] -> imgs[i] (i < m) along the Cayley graph of
    // <gens[0..m)>; fails on a conflict or a repeated image.
    inline bool extend_map(Group const&             g,
                           Group const&             h,
                           std::vector<Elem> const& gens,
                           std::vector<Elem> const& imgs,
                           std::size_t              m,
                           std::vector<Elem>&       phi,
                           std::vector<Elem>&       preimage) {
      Elem const unset = Elem(-1);
      std::fill(phi.begin(), phi.end(), unset);
      std::fill(preimage.begin(), preimage.end(), unset);
      std::vector<Elem> queue{g.identity()};
      phi[g.identity()]      = h.identity();
      preimage[h.identity()] = g.identity();
      for (std::size_t q = 0; q < queue.size(); ++q) {
        Elem x = queue[q];
        for (std::size_t i = 0; i < m; ++i) {
          Elem x2 = g.mul(x, gens[i]);
          Elem y2 = h.mul(phi[x], imgs[i]);
          if (phi[x2] == unset) {
            if (preimage[y2] != unset) {
              return false;
            }
            phi[x2]      = y2;
            preimage[y2] = x2;
            queue.push_back(x2);
          } else if (phi[x2] != y2) {
            return false;
          }
        }
      }
      return true;
    }
  }  // namespace detail

  // A product-preserving bijection G -> H as an image table, if one exists.
  inline std::optional<std::vector<Elem>> find_isomorphism(Group const& g,
                                                           Group const& h) {
    if (g.order() != h.order()) {
      return std::nullopt;
    }
    if (!(fingerprint(g) == fingerprint(h))) {
      return std::nullopt;
    }
    auto const n    = g.order();
    auto       gens = detail::greedy_generating_sequence(g);

    auto element_class = [](Group const& k, Elem x) {
      return std::make_pair(k.element_order(x), centralizer_order(k, x));
    };
    std::vector<std::vector<Elem>> candidates(gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i) {
      auto want = element_class(g, gens[i]);
      for (auto y : h.elements()) {
        if (h.element_order(y) == want.first && element_class(h, y) == want) {
          candidates[i].push_back(y);
        }
      }
    }

    std::vector<Elem> imgs(gens.size(), 0);
    std::vector<Elem> phi(n), preimage(n);
    std::optional<std::vector<Elem>> found;
    auto search = [&](auto&& self, std::size_t k) -> bool {
      if (k == gens.size()) {
        return true;
      }
      for (auto y : candidates[k]) {
        imgs[k] = y;
        if (detail::extend_map(g, h, gens, imgs, k + 1, phi, preimage)) {
          if (self(self, k + 1)) {
            return true;
          }
        }
      }
      return false;
    };
    if (gens.empty()) {
      return std::vector<Elem>{0};
    }
    if (search(search, 0)) {
      detail::extend_map(g, h, gens, imgs, gens.size(), phi, preimage);
      found = phi;
    }
    return found;
  }

  inline bool are_isomorphic(Group const& g, Group const& h) {
    return find_isomorphism(g, h).has_value();
  }

}  // namespace grpcov
