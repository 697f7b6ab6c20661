#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "arith.hpp"
#include "bitset.hpp"
#include "config.hpp"
#include "cyclic.hpp"
#include "group.hpp"
#include "subgroup.hpp"

namespace grpcov {

  struct IrredundancyCertificate {
    std::vector<Elem> witnesses;  // witnesses[i] lies in member i only
  };

  struct CoverCheck {
    bool is_cover       = false;
    bool is_irredundant = false;
    bool degenerate     = false;  // cyclic parent or an improper member
    std::optional<IrredundancyCertificate> certificate;
  };

  namespace detail {
    inline void require_common_parent(Group const&                 g,
                                      std::vector<Subgroup> const& members) {
      for (auto const& h : members) {
        if (!h.parent().same_as(g)) {
          throw InvalidArgument("cover member is not a subgroup of G");
        }
      }
    }
  }  // namespace detail

  inline CoverCheck check_cover(Group const&                 g,
                                std::vector<Subgroup> const& members) {
    if (members.size() < 2) {
      throw InvalidArgument("a covering needs at least 2 members, got "
                            + std::to_string(members.size()));
    }
    detail::require_common_parent(g, members);
    CoverCheck out;
    out.degenerate = lambda(g) == 1;
    std::vector<std::uint32_t> hits(g.order(), 0);
    for (auto const& h : members) {
      out.degenerate = out.degenerate || h.is_whole();
      h.members().for_each([&](std::size_t x) { ++hits[x]; });
    }
    out.is_cover = std::all_of(hits.begin(), hits.end(),
                               [](std::uint32_t c) { return c > 0; });
    if (!out.is_cover) {
      return out;
    }
    IrredundancyCertificate cert;
    for (auto const& h : members) {
      std::optional<Elem> w;
      h.members().for_each([&](std::size_t x) {
        if (!w && hits[x] == 1) {
          w = Elem(x);
        }
      });
      if (!w) {
        return out;
      }
      cert.witnesses.push_back(*w);
    }
    out.is_irredundant = true;
    out.certificate    = std::move(cert);
    return out;
  }

  namespace detail {
    // Covering problems over the non-trivial cyclic subgroups ("units"):
    // x lies in H iff <x> does, so a family covers G iff it covers every
    // unit, and a member is irredundant iff it owns a unit nobody else has.
    struct UnitSystem {
      std::size_t         units = 0;
      std::vector<Bitset> covers;  // candidate -> units inside it
    };

    inline UnitSystem unit_system(Group const&                 g,
                                  std::vector<Subgroup> const& candidates) {
      auto              ix = cyclic_index(g);
      UnitSystem        us;
      us.units = ix.size() - 1;
      for (auto const& h : candidates) {
        Bitset b(us.units);
        for (std::size_t id = 1; id < ix.size(); ++id) {
          if (h.contains(ix.generator[id])) {
            b.set(id - 1);
          }
        }
        us.covers.push_back(std::move(b));
      }
      return us;
    }

    // Include-first depth-first search over irredundant partial covers.
    // Candidates are visited in list order, so complete covers are reached
    // in lexicographic order of their index lists. visit() returns false to
    // stop; bound(chosen, uncovered, next) returns false to prune.
    class IrredundantSearch {
     public:
      using Visit = std::function<bool(std::vector<std::size_t> const&)>;
      using Bound = std::function<bool(std::size_t, std::size_t, std::size_t)>;

      IrredundantSearch(UnitSystem const& us, Visit visit, Bound bound)
          : _us(us),
            _visit(std::move(visit)),
            _bound(std::move(bound)),
            _count(us.units, 0),
            _owner(us.units, 0) {
        // suffix_union[i] = units covered by candidates i, i+1, ...
        std::size_t const k = us.covers.size();
        _suffix.assign(k + 1, Bitset(us.units));
        for (std::size_t i = k; i-- > 0;) {
          _suffix[i] = _suffix[i + 1];
          _suffix[i] |= us.covers[i];
        }
      }

      void run() {
        if (_us.units == 0) {
          return;
        }
        recurse(0, _us.units);
      }

     private:
      bool recurse(std::size_t next, std::size_t uncovered) {
        if (uncovered == 0) {
          return _visit(_chosen);
        }
        Bitset open(_us.units);
        for (std::size_t u = 0; u < _us.units; ++u) {
          if (_count[u] == 0) {
            open.set(u);
          }
        }
        for (std::size_t c = next; c < _us.covers.size(); ++c) {
          // Every uncovered unit needs a candidate at or after c.
          if (!open.is_subset_of(_suffix[c])
              || !_bound(_chosen.size(), uncovered, c)) {
            return true;
          }
          if (!try_add(c, uncovered)) {
            continue;
          }
          bool go = recurse(c + 1, _uncovered_after);
          undo(c);
          if (!go) {
            return false;
          }
        }
        return true;
      }

      // Adds candidate c if it brings a new unit and no chosen member loses
      // its last private unit.
      bool try_add(std::size_t c, std::size_t uncovered) {
        auto const& cov   = _us.covers[c];
        bool        fresh = false;
        std::vector<std::size_t> losses(_chosen.size(), 0);
        bool ok = true;
        cov.for_each([&](std::size_t u) {
          if (_count[u] == 0) {
            fresh = true;
          } else if (_count[u] == 1) {
            auto pos = std::size_t(
                std::find(_chosen.begin(), _chosen.end(), _owner[u])
                - _chosen.begin());
            ++losses[pos];
          }
        });
        if (!fresh) {
          return false;
        }
        for (std::size_t i = 0; i < _chosen.size(); ++i) {
          if (losses[i] > 0 && losses[i] >= _private[i]) {
            ok = false;
          }
        }
        if (!ok) {
          return false;
        }
        std::size_t gained = 0;
        cov.for_each([&](std::size_t u) {
          if (_count[u] == 0) {
            _owner[u] = c;
            ++gained;
          }
          ++_count[u];
        });
        for (std::size_t i = 0; i < _chosen.size(); ++i) {
          _private[i] -= losses[i];
        }
        _chosen.push_back(c);
        _private.push_back(gained);
        _losses.push_back(std::move(losses));
        _uncovered_after = uncovered - gained;
        return true;
      }

      void undo(std::size_t c) {
        auto losses = std::move(_losses.back());
        _losses.pop_back();
        _chosen.pop_back();
        _private.pop_back();
        for (std::size_t i = 0; i < _chosen.size(); ++i) {
          _private[i] += losses[i];
        }
        _us.covers[c].for_each([&](std::size_t u) {
          --_count[u];
          if (_count[u] == 1) {
            // the remaining holder owns it again
            for (auto m : _chosen) {
              if (_us.covers[m].test(u)) {
                _owner[u] = m;
                break;
              }
            }
          }
        });
      }

      UnitSystem const&                     _us;
      Visit                                 _visit;
      Bound                                 _bound;
      std::vector<std::uint32_t>            _count;
      std::vector<std::size_t>              _owner;
      std::vector<Bitset>                   _suffix;
      std::vector<std::size_t>              _chosen;
      std::vector<std::size_t>              _private;
      std::vector<std::vector<std::size_t>> _losses;
      std::size_t                           _uncovered_after = 0;
    };

    inline std::vector<Subgroup>
    proper_nontrivial(std::vector<Subgroup> const& all) {
      std::vector<Subgroup> out;
      for (auto const& s : all) {
        if (!s.is_trivial() && !s.is_whole()) {
          out.push_back(s);
        }
      }
      return out;
    }

    inline std::vector<Subgroup>
    pick(std::vector<Subgroup> const&    from,
         std::vector<std::size_t> const& idx) {
      std::vector<Subgroup> out;
      for (auto i : idx) {
        out.push_back(from[i]);
      }
      return out;
    }
  }  // namespace detail

  struct OracleResult {
    std::size_t           size = 0;
    std::vector<Subgroup> cover;
    bool                  degenerate = false;  // cyclic: the family {G}
    std::optional<IrredundancyCertificate> certificate;
  };

  // Largest irredundant covering by proper subgroups, by exhaustive search
  // over the subgroup lattice. Refuses groups with more than cap subgroups.
  inline OracleResult
  max_irredundant_oracle(Group const& g,
                         std::size_t  cap = limits().oracle_subgroups) {
    auto all = enumerate_subgroups(g, cap);
    if (lambda(g) == 1) {
      return OracleResult{1, {whole_group(g)}, true, std::nullopt};
    }
    auto cands = detail::proper_nontrivial(all);
    auto us    = detail::unit_system(g, cands);
    std::vector<std::size_t> best;
    detail::IrredundantSearch search(
        us,
        [&](std::vector<std::size_t> const& chosen) {
          if (chosen.size() > best.size()) {
            best = chosen;
          }
          return true;
        },
        [&](std::size_t chosen, std::size_t uncovered, std::size_t next) {
          std::size_t room = std::min(uncovered, cands.size() - next);
          return chosen + room > best.size();
        });
    search.run();
    OracleResult out;
    out.size        = best.size();
    out.cover       = detail::pick(cands, best);
    out.certificate = check_cover(g, out.cover).certificate;
    return out;
  }

  // Every irredundant covering by proper subgroups, each as a member list in
  // canonical subgroup order; the lists come out in lexicographic order.
  inline std::vector<std::vector<Subgroup>>
  irredundant_covers(Group const& g,
                     std::size_t  cap = limits().oracle_subgroups) {
    auto all   = enumerate_subgroups(g, cap);
    auto cands = detail::proper_nontrivial(all);
    std::vector<std::vector<Subgroup>> out;
    if (lambda(g) == 1) {
      return out;
    }
    auto us = detail::unit_system(g, cands);
    detail::IrredundantSearch search(
        us,
        [&](std::vector<std::size_t> const& chosen) {
          out.push_back(detail::pick(cands, chosen));
          return true;
        },
        [](std::size_t, std::size_t, std::size_t) { return true; });
    search.run();
    return out;
  }

  struct SigmaResult {
    std::size_t           sigma = 0;
    std::vector<Subgroup> cover;  // lexicographically least optimal cover
  };

  // Cohn's sigma: the fewest proper subgroups covering G. Members can be
  // enlarged to maximal subgroups, so only those are searched.
  inline SigmaResult sigma_cover(Group const& g,
                                 std::size_t  cap = limits().max_subgroups) {
    if (lambda(g) == 1) {
      throw InvalidArgument("sigma is undefined for cyclic groups");
    }
    auto maxes = maximal_subgroups(enumerate_subgroups(g, cap));
    auto us    = detail::unit_system(g, maxes);
    std::size_t largest = 0;
    for (auto const& c : us.covers) {
      largest = std::max(largest, c.count());
    }
    std::vector<std::size_t> best;
    std::size_t              best_size = maxes.size() + 1;
    detail::IrredundantSearch search(
        us,
        [&](std::vector<std::size_t> const& chosen) {
          if (chosen.size() < best_size) {
            best      = chosen;
            best_size = chosen.size();
          }
          return true;
        },
        [&](std::size_t chosen, std::size_t uncovered, std::size_t) {
          std::size_t lb = (uncovered + largest - 1) / largest;
          return chosen + lb < best_size;
        });
    search.run();
    return SigmaResult{best.size(), detail::pick(maxes, best)};
  }

  inline std::size_t sigma(Group const& g,
                           std::size_t  cap = limits().max_subgroups) {
    return sigma_cover(g, cap).sigma;
  }

  struct BfsViolation {
    Elem          x;
    std::uint64_t p;
    std::size_t   multiplicity;
  };

  // For an irredundant cover X_1..X_m with intersection D: every p-element x
  // lying in exactly n members has x in D or p <= m - n.
  inline std::vector<BfsViolation>
  check_bfs_lemma(Group const& g, std::vector<Subgroup> const& cover) {
    if (cover.size() < 2 || !check_cover(g, cover).is_irredundant) {
      throw InvalidArgument("check_bfs_lemma needs an irredundant cover");
    }
    std::size_t const m = cover.size();
    Bitset            meet(g.order());
    meet.set_all();
    for (auto const& h : cover) {
      meet &= h.members();
    }
    std::vector<BfsViolation> out;
    for (auto x : g.elements()) {
      auto [p, e] = arith::prime_power(g.element_order(x));
      if (p == 0 || meet.test(x)) {
        continue;
      }
      std::size_t n = 0;
      for (auto const& h : cover) {
        n += h.contains(x);
      }
      if (p > m - n) {
        out.push_back({x, p, n});
      }
    }
    return out;
  }

  inline std::optional<std::size_t> f_bound(std::size_t n) {
    static std::map<std::size_t, std::size_t> const f{
        {3, 4}, {4, 9}, {5, 16}, {6, 36}};
    auto it = f.find(n);
    if (it == f.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  struct BoundReport {
    bool                cohn_sum_ok = false;
    std::size_t         index_of_intersection = 0;
    std::optional<bool> f_bound_ok;
    std::string         details;
  };

  inline BoundReport check_cover_bounds(Group const&          g,
                                        std::vector<Subgroup> cover) {
    if (cover.size() < 2 || !check_cover(g, cover).is_irredundant) {
      throw InvalidArgument("check_cover_bounds needs an irredundant cover");
    }
    std::stable_sort(cover.begin(), cover.end(),
                     [](Subgroup const& a, Subgroup const& b) {
                       return a.order() > b.order();
                     });
    BoundReport r;
    std::size_t sum = 0;
    for (std::size_t i = 1; i < cover.size(); ++i) {
      sum += cover[i].order();
    }
    r.cohn_sum_ok = g.order() <= sum;
    Bitset meet(g.order());
    meet.set_all();
    for (auto const& h : cover) {
      meet &= h.members();
    }
    r.index_of_intersection = g.order() / meet.count();
    std::size_t const n     = cover.size();
    r.details = "n=" + std::to_string(n) + " |G|=" + std::to_string(g.order())
                + " sum_{i>=2}|X_i|=" + std::to_string(sum)
                + " [G:D]=" + std::to_string(r.index_of_intersection);
    if (auto f = f_bound(n)) {
      r.f_bound_ok = r.index_of_intersection <= *f;
      r.details += " f(n)=" + std::to_string(*f);
    }
    return r;
  }

  struct ScorzaResult {
    bool                    exists = false;
    std::optional<Subgroup> witness;  // normal N with G/N = C2 x C2
  };

  // G has an irredundant 3-cover iff it maps onto C2 x C2, i.e. iff the
  // quotient by the subgroup generated by squares has order at least 4.
  inline ScorzaResult scorza_3cover(Group const& g) {
    std::vector<Elem> squares;
    for (auto x : g.elements()) {
      Elem s = g.mul(x, x);
      if (s != g.identity()) {
        squares.push_back(s);
      }
    }
    auto sq = subgroup_generated(g, std::move(squares));
    if (sq.index() < 4) {
      return {};
    }
    auto q     = quotient(g, sq);
    auto basis = q.group.generators();  // an F2-basis of G/S
    std::vector<Elem> keep(sq.generators().begin(), sq.generators().end());
    for (std::size_t i = 2; i < basis.size(); ++i) {
      keep.push_back(q.representative[basis[i]]);
    }
    auto n = subgroup_generated(g, std::move(keep));
    if (n.index() != 4) {
      throw Error("scorza_3cover: failed to build a C2 x C2 quotient");
    }
    return {true, std::move(n)};
  }

}  // namespace grpcov
