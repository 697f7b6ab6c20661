#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "arith.hpp"
#include "bitset.hpp"
#include "group.hpp"
#include "subgroup.hpp"

namespace grpcov {

  // Every element labelled by the cyclic subgroup it generates.
  struct CyclicIndex {
    std::vector<std::uint32_t> id_of;      // element -> cyclic subgroup id
    std::vector<Elem>          generator;  // id -> least generating element
    std::vector<bool>          maximal;    // id -> contained in no larger one
    std::size_t                maximal_count = 0;

    std::size_t size() const noexcept { return generator.size(); }
  };

  // Ids follow the least generator, so the trivial subgroup is id 0.
  // <y> is non-maximal exactly when <y> = <x^q> for some x and prime q.
  inline CyclicIndex cyclic_index(Group const& g) {
    CyclicIndex       ix;
    std::size_t const n    = g.order();
    std::uint32_t const none = std::uint32_t(-1);
    ix.id_of.assign(n, none);
    for (auto x : g.elements()) {
      if (ix.id_of[x] != none) {
        continue;
      }
      std::uint32_t const id = std::uint32_t(ix.generator.size());
      ix.generator.push_back(x);
      std::uint32_t const o = g.element_order(x);
      Elem                y = x;
      for (std::uint32_t k = 1; k <= o; ++k) {
        if (std::gcd(k, o) == 1) {
          ix.id_of[y] = id;
        }
        y = g.mul(y, x);
      }
    }
    ix.maximal.assign(ix.size(), true);
    for (auto x : ix.generator) {
      for (auto q : arith::prime_divisors(g.element_order(x))) {
        ix.maximal[ix.id_of[g.pow(x, std::int64_t(q))]] = false;
      }
    }
    ix.maximal_count = std::size_t(
        std::count(ix.maximal.begin(), ix.maximal.end(), true));
    return ix;
  }

  namespace detail {
    inline Subgroup cyclic_subgroup(Group const& g, Elem x) {
      std::vector<Elem> gens;
      if (x != g.identity()) {
        gens.push_back(x);
      }
      return subgroup_generated(g, std::move(gens));
    }
  }  // namespace detail

  // One entry per cyclic subgroup, trivial included, in canonical order.
  inline std::vector<Subgroup> cyclic_subgroups(Group const& g) {
    auto                  ix = cyclic_index(g);
    std::vector<Subgroup> out;
    out.reserve(ix.size());
    for (auto x : ix.generator) {
      out.push_back(detail::cyclic_subgroup(g, x));
    }
    sort_subgroups(out);
    return out;
  }

  inline std::size_t cyclic_count(Group const& g) {
    return cyclic_index(g).size();
  }

  inline std::size_t lambda(Group const& g) {
    return cyclic_index(g).maximal_count;
  }

  struct MaximalCyclicFamily {
    std::vector<Subgroup> members;  // |H_1| >= |H_2| >= ...
    Subgroup              kernel;   // intersection of the members
  };

  inline MaximalCyclicFamily maximal_cyclic_subgroups(Group const& g) {
    auto                  ix = cyclic_index(g);
    std::vector<Subgroup> members;
    members.reserve(ix.maximal_count);
    for (std::size_t id = 0; id < ix.size(); ++id) {
      if (ix.maximal[id]) {
        members.push_back(detail::cyclic_subgroup(g, ix.generator[id]));
      }
    }
    std::sort(members.begin(), members.end(),
              [](Subgroup const& a, Subgroup const& b) {
                if (a.order() != b.order()) {
                  return a.order() > b.order();
                }
                return a.members().lex_less(b.members());
              });
    Bitset meet(g.order());
    meet.set_all();
    for (auto const& h : members) {
      meet &= h.members();
    }
    auto kernel = subgroup_from_members(g, std::move(meet));
    return {std::move(members), std::move(kernel)};
  }

  struct KernelCertificate {
    Subgroup    kernel;
    bool        degenerate;  // cyclic input: kernel is G itself
    bool        central;
    bool        cyclic;
    bool        normal;
    std::size_t lambda;
    std::size_t quotient_lambda;  // lambda(G/N)

    bool holds() const noexcept {
      return central && cyclic && normal && lambda == quotient_lambda;
    }
  };

  inline KernelCertificate cover_kernel(Group const& g) {
    auto        fam = maximal_cyclic_subgroups(g);
    auto const& n   = fam.kernel;
    bool        central = true;
    n.members().for_each([&](std::size_t x) {
      for (auto s : g.generators()) {
        if (g.mul(Elem(x), s) != g.mul(s, Elem(x))) {
          central = false;
          return;
        }
      }
    });
    bool const  normal = is_normal(n);
    std::size_t qlam   = 0;
    if (normal) {
      qlam = lambda(quotient_group(g, n));
    }
    return KernelCertificate{n,
                             fam.members.size() == 1,
                             central,
                             n.is_cyclic(),
                             normal,
                             fam.members.size(),
                             qlam};
  }

}  // namespace grpcov
