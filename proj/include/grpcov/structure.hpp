#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "arith.hpp"
#include "bitset.hpp"
#include "config.hpp"
#include "cyclic.hpp"
#include "group.hpp"
#include "subgroup.hpp"

namespace grpcov {

  struct StructureFlags {
    bool                    abelian          = false;
    bool                    nilpotent        = false;
    bool                    solvable         = false;
    bool                    supersolvable    = false;
    bool                    dedekind         = false;
    bool                    all_sylow_cyclic = false;
    std::set<std::uint64_t> primes;

    friend bool operator==(StructureFlags const&, StructureFlags const&)
        = default;
  };

  namespace detail {
    // Smallest subgroup of h that contains extra and is normalised by h.
    inline Subgroup normal_closure_in(Subgroup const& h, std::vector<Elem> extra) {
      auto const& g = h.parent();
      auto        k = subgroup_generated(g, std::move(extra));
      while (true) {
        std::vector<Elem> more;
        for (auto x : h.generators()) {
          for (auto y : k.generators()) {
            Elem c = g.conj(y, x);
            if (!k.contains(c)) {
              more.push_back(c);
              break;
            }
          }
          if (!more.empty()) {
            break;
          }
        }
        if (more.empty()) {
          return k;
        }
        auto members = generate_from(g, k.members(), k.generators(), more);
        std::vector<Elem> gens(k.generators().begin(), k.generators().end());
        gens.insert(gens.end(), more.begin(), more.end());
        k = Subgroup(g, std::move(members), std::move(gens));
      }
    }

    inline Subgroup commutator_subgroup(Subgroup const& h) {
      auto const&       g    = h.parent();
      auto              gens = h.generators();
      std::vector<Elem> comms;
      for (std::size_t i = 0; i < gens.size(); ++i) {
        for (std::size_t j = i + 1; j < gens.size(); ++j) {
          Elem c = g.commutator(gens[i], gens[j]);
          if (c != g.identity()) {
            comms.push_back(c);
          }
        }
      }
      return normal_closure_in(h, std::move(comms));
    }
  }  // namespace detail

  // G, G', G'', ... down to the first repeated term.
  inline std::vector<Subgroup> derived_series(Group const& g) {
    std::vector<Subgroup> out{whole_group(g)};
    while (true) {
      auto next = detail::commutator_subgroup(out.back());
      if (next.order() == out.back().order()) {
        return out;
      }
      out.push_back(std::move(next));
    }
  }

  inline bool is_solvable(Group const& g) {
    return derived_series(g).back().is_trivial();
  }

  inline bool is_nilpotent(Group const& g) {
    for (auto p : arith::prime_divisors(g.order())) {
      if (!is_normal(sylow_subgroup(g, p))) {
        return false;
      }
    }
    return true;
  }

  // Every subgroup is normal iff every cyclic subgroup is, since normal
  // subgroups are closed under joins.
  inline bool is_dedekind(Group const& g) {
    auto ix = cyclic_index(g);
    for (auto x : ix.generator) {
      for (auto s : g.generators()) {
        Elem y = g.conj(x, s);
        // <x> is normal iff each conjugate of x is again a power of x
        bool inside = false;
        Elem p      = x;
        for (std::uint32_t k = 0; k < g.element_order(x); ++k, p = g.mul(p, x)) {
          if (p == y) {
            inside = true;
            break;
          }
        }
        if (!inside) {
          return false;
        }
      }
    }
    return true;
  }

  // Huppert: supersolvable iff every maximal subgroup has prime index.
  inline bool supersolvable_by_maximal_index(
      Group const& g, std::size_t cap = limits().max_subgroups) {
    for (auto const& m : maximal_subgroups(enumerate_subgroups(g, cap))) {
      if (!arith::is_prime(m.index())) {
        return false;
      }
    }
    return true;
  }

  // Definition: a series of normal subgroups with cyclic factors. A minimal
  // normal subgroup of a supersolvable quotient has prime order, so it is
  // enough to climb greedily through normal steps of prime order.
  inline bool supersolvable_by_series(Group const& g) {
    Subgroup n = trivial_subgroup(g);
    while (!n.is_whole()) {
      bool stepped = false;
      for (auto x : g.elements()) {
        if (n.contains(x)) {
          continue;
        }
        // order of x modulo n
        Elem          y = x;
        std::uint64_t k = 1;
        while (!n.contains(y)) {
          y = g.mul(y, x);
          ++k;
        }
        if (!arith::is_prime(k)) {
          continue;
        }
        Elem one[] = {x};
        auto members = generate_from(g, n.members(), n.generators(), one);
        if (members.count() != n.order() * k) {
          continue;
        }
        std::vector<Elem> gens(n.generators().begin(), n.generators().end());
        gens.push_back(x);
        Subgroup m(g, std::move(members), std::move(gens));
        if (is_normal(m)) {
          n       = std::move(m);
          stepped = true;
          break;
        }
      }
      if (!stepped) {
        return false;
      }
    }
    return true;
  }

  inline StructureFlags structure_flags(Group const& g) {
    StructureFlags f;
    auto const     primes = arith::prime_divisors(g.order());
    f.primes.insert(primes.begin(), primes.end());
    f.abelian          = g.is_abelian();
    f.all_sylow_cyclic = true;
    f.nilpotent        = true;
    for (auto p : primes) {
      auto s = sylow_subgroup(g, p);
      f.all_sylow_cyclic = f.all_sylow_cyclic && s.is_cyclic();
      f.nilpotent        = f.nilpotent && is_normal(s);
    }
    f.solvable = f.nilpotent || is_solvable(g);
    if (f.nilpotent) {
      f.supersolvable = true;
    } else if (!f.solvable) {
      f.supersolvable = false;
    } else {
      try {
        f.supersolvable = supersolvable_by_maximal_index(g);
      } catch (CapExceeded const&) {
        f.supersolvable = supersolvable_by_series(g);
      }
    }
    f.dedekind = f.abelian || (f.nilpotent && is_dedekind(g));
    return f;
  }

  // Proper cyclic subgroups equal to their own normalizer.
  inline std::vector<Subgroup> self_normalizing_cyclic_scan(Group const& g) {
    std::vector<Subgroup> out;
    for (auto const& h : cyclic_subgroups(g)) {
      if (h.is_whole()) {
        continue;
      }
      if (normalizer(g, h).order() == h.order()) {
        out.push_back(h);
      }
    }
    return out;
  }

}  // namespace grpcov
