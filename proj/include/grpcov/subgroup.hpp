#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "arith.hpp"
#include "bitset.hpp"
#include "config.hpp"
#include "group.hpp"
#include "permutation.hpp"

namespace grpcov {

  // A subgroup of a parent group: a membership set plus generators that
  // generate exactly that set.
  class Subgroup {
   public:
    Subgroup(Group parent, Bitset members, std::vector<Elem> gens)
        : _parent(std::move(parent)),
          _members(std::move(members)),
          _gens(std::move(gens)),
          _order(_members.count()) {}

    Group const&          parent() const noexcept { return _parent; }
    Bitset const&         members() const noexcept { return _members; }
    std::span<Elem const> generators() const noexcept { return _gens; }
    std::size_t           order() const noexcept { return _order; }
    std::size_t index() const noexcept { return _parent.order() / _order; }

    bool contains(Elem x) const { return _members.test(x); }
    bool is_trivial() const noexcept { return _order == 1; }
    bool is_whole() const noexcept { return _order == _parent.order(); }
    bool is_subgroup_of(Subgroup const& that) const {
      return _members.is_subset_of(that._members);
    }
    bool is_cyclic() const {
      bool found = false;
      _members.for_each([&](std::size_t x) {
        found = found || _parent.element_order(Elem(x)) == _order;
      });
      return found;
    }
    std::vector<Elem> elements() const { return _members.to_vector(); }

    friend bool operator==(Subgroup const& a, Subgroup const& b) {
      return a._parent.same_as(b._parent) && a._members == b._members;
    }

   private:
    Group             _parent;
    Bitset            _members;
    std::vector<Elem> _gens;
    std::size_t       _order;
  };

  // Canonical order on subgroups: by order, then lexicographically by the
  // sorted member list.
  inline bool subgroup_less(Subgroup const& a, Subgroup const& b) {
    if (a.order() != b.order()) {
      return a.order() < b.order();
    }
    return a.members().lex_less(b.members());
  }

  inline void sort_subgroups(std::vector<Subgroup>& list) {
    std::sort(list.begin(), list.end(), subgroup_less);
  }

  inline Subgroup subgroup_generated(Group const& g, std::vector<Elem> gens) {
    auto members = generate(g, gens);
    return Subgroup(g, std::move(members), std::move(gens));
  }

  inline Subgroup whole_group(Group const& g) {
    std::vector<Elem> gens(g.generators().begin(), g.generators().end());
    Bitset            all(g.order());
    all.set_all();
    return Subgroup(g, std::move(all), std::move(gens));
  }

  inline Subgroup trivial_subgroup(Group const& g) {
    Bitset one(g.order());
    one.set(g.identity());
    return Subgroup(g, std::move(one), {});
  }

  // Recovers a small generating set for a known subgroup membership set.
  inline Subgroup subgroup_from_members(Group const& g, Bitset members) {
    std::vector<Elem> elems = members.to_vector();
    std::stable_sort(elems.begin(), elems.end(), [&](Elem a, Elem b) {
      return g.element_order(a) > g.element_order(b);
    });
    Bitset            current(g.order());
    std::vector<Elem> gens;
    current.set(g.identity());
    std::size_t const target = members.count();
    std::size_t have = 1;
    for (auto x : elems) {
      if (have == target) {
        break;
      }
      if (!current.test(x)) {
        Elem one[] = {x};
        current    = generate_from(g, current, gens, one);
        have       = current.count();
        gens.push_back(x);
      }
    }
    if (!(current == members)) {
      throw InvalidArgument("member set is not closed under the product");
    }
    return Subgroup(g, std::move(members), std::move(gens));
  }

  inline Subgroup intersection(Subgroup const& a, Subgroup const& b) {
    return subgroup_from_members(a.parent(), a.members() & b.members());
  }

  inline Subgroup join(Subgroup const& a, Subgroup const& b) {
    if (b.is_subgroup_of(a)) {
      return a;
    }
    auto members
        = generate_from(a.parent(), a.members(), a.generators(), b.generators());
    std::vector<Elem> gens(a.generators().begin(), a.generators().end());
    gens.insert(gens.end(), b.generators().begin(), b.generators().end());
    return Subgroup(a.parent(), std::move(members), std::move(gens));
  }

  // A pair (g, h) with h in H and g^-1 h g outside H, if H is not normal.
  inline std::optional<std::pair<Elem, Elem>>
  normality_witness(Subgroup const& h) {
    auto const& g = h.parent();
    for (auto x : g.generators()) {
      for (auto y : h.generators()) {
        if (!h.contains(g.conj(y, x))) {
          return std::make_pair(x, y);
        }
      }
    }
    return std::nullopt;
  }

  inline bool is_normal(Subgroup const& h) {
    return !normality_witness(h).has_value();
  }

  inline Subgroup center(Group const& g) {
    Bitset members(g.order());
    for (auto x : g.elements()) {
      bool central = true;
      for (auto s : g.generators()) {
        if (g.mul(x, s) != g.mul(s, x)) {
          central = false;
          break;
        }
      }
      if (central) {
        members.set(x);
      }
    }
    return subgroup_from_members(g, std::move(members));
  }

  inline std::size_t centralizer_order(Group const& g, Elem x) {
    std::size_t c = 0;
    for (auto y : g.elements()) {
      c += g.mul(x, y) == g.mul(y, x);
    }
    return c;
  }

  // The largest subgroup of the parent in which h is normal.
  inline Subgroup normalizer(Group const& g, Subgroup const& h) {
    if (!h.parent().same_as(g)) {
      throw InvalidArgument("normalizer: H is not a subgroup of G");
    }
    Bitset members(g.order());
    for (auto x : g.elements()) {
      bool ok = true;
      for (auto y : h.generators()) {
        if (!h.contains(g.conj(y, x))) {
          ok = false;
          break;
        }
      }
      if (ok) {
        members.set(x);
      }
    }
    return subgroup_from_members(g, std::move(members));
  }

  // Smallest normal subgroup containing gens.
  inline Subgroup normal_closure(Group const& g, std::vector<Elem> gens) {
    auto h = subgroup_generated(g, std::move(gens));
    while (true) {
      std::vector<Elem> extra;
      for (auto x : g.generators()) {
        for (auto y : h.generators()) {
          Elem c = g.conj(y, x);
          if (!h.contains(c)) {
            extra.push_back(c);
            break;
          }
        }
        if (!extra.empty()) {
          break;
        }
      }
      if (extra.empty()) {
        return h;
      }
      auto members
          = generate_from(g, h.members(), h.generators(), extra);
      std::vector<Elem> ng(h.generators().begin(), h.generators().end());
      ng.insert(ng.end(), extra.begin(), extra.end());
      h = Subgroup(g, std::move(members), std::move(ng));
    }
  }

  inline Subgroup derived_subgroup(Group const& g) {
    std::vector<Elem> comms;
    auto              gens = g.generators();
    for (std::size_t i = 0; i < gens.size(); ++i) {
      for (std::size_t j = i + 1; j < gens.size(); ++j) {
        Elem c = g.commutator(gens[i], gens[j]);
        if (c != g.identity()) {
          comms.push_back(c);
        }
      }
    }
    return normal_closure(g, std::move(comms));
  }

  // A Sylow p-subgroup, grown one factor p at a time inside normalizers.
  inline Subgroup sylow_subgroup(Group const& g, std::uint64_t p) {
    if (!arith::is_prime(p)) {
      throw InvalidArgument("sylow_subgroup: " + std::to_string(p)
                            + " is not prime");
    }
    if (g.order() % p != 0) {
      throw InvalidArgument("sylow_subgroup: " + std::to_string(p)
                            + " does not divide the group order");
    }
    std::uint64_t const target = arith::p_part(g.order(), p);
    Subgroup            sub    = trivial_subgroup(g);
    while (sub.order() < target) {
      auto              norm = normalizer(g, sub);
      std::optional<Elem> step;
      norm.members().for_each([&](std::size_t xi) {
        if (step || sub.contains(Elem(xi))) {
          return;
        }
        Elem          x = Elem(xi);
        Elem          y = x;
        std::uint32_t j = 1;
        while (!sub.contains(y)) {
          y = g.mul(y, x);
          ++j;
        }
        if (j % p == 0) {
          step = g.pow(x, j / p);
        }
      });
      Elem one[] = {*step};
      auto members
          = generate_from(g, sub.members(), sub.generators(), one);
      std::vector<Elem> gens(sub.generators().begin(), sub.generators().end());
      gens.push_back(*step);
      sub = Subgroup(g, std::move(members), std::move(gens));
    }
    return sub;
  }

  // Every subgroup, sorted by (order, member list). Seeds with the cyclic
  // subgroups and closes under joins with them.
  inline std::vector<Subgroup>
  enumerate_subgroups(Group const& g,
                      std::size_t  cap = limits().max_subgroups) {
    std::vector<Subgroup>                      list;
    std::unordered_set<Bitset, BitsetHash>     seen;
    std::vector<std::size_t>                   cyclic;
    auto add = [&](Subgroup s) {
      if (seen.insert(s.members()).second) {
        if (list.size() >= cap) {
          throw CapExceeded("subgroup enumeration exceeds the subgroup cap",
                            cap);
        }
        list.push_back(std::move(s));
        return true;
      }
      return false;
    };
    for (auto x : g.elements()) {
      std::vector<Elem> gens;
      if (x != g.identity()) {
        gens.push_back(x);
      }
      auto s = subgroup_generated(g, std::move(gens));
      if (add(s) && !s.is_trivial()) {
        cyclic.push_back(list.size() - 1);
      }
    }
    std::vector<Subgroup> seeds;
    for (auto i : cyclic) {
      seeds.push_back(list[i]);
    }
    for (std::size_t i = 0; i < list.size(); ++i) {
      for (auto const& c : seeds) {
        if (c.is_subgroup_of(list[i])) {
          continue;
        }
        add(join(list[i], c));
      }
    }
    sort_subgroups(list);
    return list;
  }

  // Subgroups of the list that are proper and contained in no other proper
  // member of the list. The list must be a full subgroup enumeration.
  inline std::vector<Subgroup>
  maximal_subgroups(std::vector<Subgroup> const& all) {
    std::vector<Subgroup> out;
    for (auto const& s : all) {
      if (s.is_whole()) {
        continue;
      }
      bool maximal = true;
      for (auto const& t : all) {
        if (!t.is_whole() && t.order() > s.order() && s.is_subgroup_of(t)) {
          maximal = false;
          break;
        }
      }
      if (maximal) {
        out.push_back(s);
      }
    }
    return out;
  }

  inline Subgroup frattini_subgroup(Group const& g,
                                    std::size_t cap = limits().max_subgroups) {
    auto   maxes   = maximal_subgroups(enumerate_subgroups(g, cap));
    Bitset members(g.order());
    members.set_all();
    for (auto const& m : maxes) {
      members &= m.members();
    }
    return subgroup_from_members(g, std::move(members));
  }

  // The subgroup as a group in its own right; member ids are renumbered in
  // increasing order (so the identity stays 0).
  inline Group as_group(Subgroup const& h) {
    auto const& g       = h.parent();
    auto        members = h.elements();
    std::vector<Elem> pos(g.order(), 0);
    for (std::size_t i = 0; i < members.size(); ++i) {
      pos[members[i]] = Elem(i);
    }
    std::size_t const n = members.size();
    return Group::from_law(
        n, [g, members = std::move(members), pos = std::move(pos)](
                            Elem a, Elem b) {
          return pos[g.mul(members[a], members[b])];
        });
  }

  struct Quotient {
    Group             group;
    std::vector<Elem> coset_of;        // element of G -> coset id
    std::vector<Elem> representative;  // coset id -> element of G
  };

  // G/N for normal N; coset ids are assigned in order of least member, so
  // the coset of the identity is 0.
  inline Quotient quotient(Group const& g, Subgroup const& n) {
    if (auto w = normality_witness(n)) {
      throw NotNormal(w->first, w->second);
    }
    std::size_t const none = g.order();
    std::vector<Elem> coset_of(g.order(), Elem(none));
    std::vector<Elem> reps;
    auto const        nelems = n.elements();
    for (auto x : g.elements()) {
      if (coset_of[x] != none) {
        continue;
      }
      Elem id = Elem(reps.size());
      reps.push_back(x);
      for (auto y : nelems) {
        coset_of[g.mul(x, y)] = id;
      }
    }
    std::size_t const m = reps.size();
    // Coset products must not depend on the representatives chosen.
    for (auto x : g.elements()) {
      for (std::size_t c = 0; c < m; ++c) {
        if (coset_of[g.mul(x, reps[c])] != coset_of[g.mul(reps[coset_of[x]], reps[c])]
            || coset_of[g.mul(reps[c], x)] != coset_of[g.mul(reps[c], reps[coset_of[x]])]) {
          throw InvalidArgument("coset multiplication is not well defined");
        }
      }
    }
    auto grp = Group::from_law(m, [g, coset_of, reps](Elem a, Elem b) {
      return coset_of[g.mul(reps[a], reps[b])];
    });
    return Quotient{std::move(grp), std::move(coset_of), std::move(reps)};
  }

  inline Group quotient_group(Group const& g, Subgroup const& n) {
    return quotient(g, n).group;
  }

  struct CosetAction {
    Group                    image;
    bool                     faithful;
    std::size_t              degree;
    std::vector<Permutation> generator_images;
  };

  // Left multiplication of G on the left cosets of H.
  inline CosetAction coset_action(Group const& g, Subgroup const& h) {
    if (!h.parent().same_as(g)) {
      throw InvalidArgument("coset_action: H is not a subgroup of G");
    }
    std::size_t const none = g.order();
    std::vector<Elem> coset_of(g.order(), Elem(none));
    std::vector<Elem> reps;
    auto const        helems = h.elements();
    for (auto x : g.elements()) {
      if (coset_of[x] != none) {
        continue;
      }
      Elem id = Elem(reps.size());
      reps.push_back(x);
      for (auto y : helems) {
        coset_of[g.mul(x, y)] = id;
      }
    }
    std::size_t const        degree = reps.size();
    std::vector<Permutation> images;
    for (auto s : g.generators()) {
      std::vector<std::uint32_t> im(degree);
      for (std::size_t c = 0; c < degree; ++c) {
        im[c] = coset_of[g.mul(s, reps[c])];
      }
      images.emplace_back(std::move(im));
    }
    auto image = group_from_generators(images, degree);
    bool faithful = image.order() == g.order();
    return CosetAction{std::move(image), faithful, degree, std::move(images)};
  }

  // The largest normal subgroup of G inside H.
  inline Subgroup core(Group const& g, Subgroup const& h) {
    Bitset members = h.members();
    for (auto x : g.elements()) {
      Bitset conj(g.order());
      h.members().for_each(
          [&](std::size_t y) { conj.set(g.conj(Elem(y), x)); });
      members &= conj;
    }
    return subgroup_from_members(g, std::move(members));
  }

}  // namespace grpcov
