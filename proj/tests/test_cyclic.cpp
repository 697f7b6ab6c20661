#include "catch_amalgamated.hpp"

#include <grpcov/catalog.hpp>
#include <grpcov/corpus.hpp>
#include <grpcov/cyclic.hpp>
#include <grpcov/isomorphism.hpp>
#include <grpcov/subgroup.hpp>

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <numeric>
#include <map>
#include <set>

using namespace grpcov;

namespace {
  std::vector<CorpusEntry> const& corpus() {
    static auto c = load_corpus(GRPCOV_DATA "/corpus36.jsonl");
    return c;
  }

  std::map<std::string, nlohmann::json> const& fixture() {
    static auto f = [] {
      std::map<std::string, nlohmann::json> out;
      std::ifstream in(GRPCOV_FIXTURES "/corpus36_gap.jsonl");
      std::string   line;
      while (std::getline(in, line)) {
        if (!line.empty()) {
          auto j = nlohmann::json::parse(line);
          out[j.at("id").get<std::string>()] = j;
        }
      }
      return out;
    }();
    return f;
  }

  // Independent count: build <x> as a member set for every x, dedupe, and
  // keep the sets not strictly inside another.
  std::pair<std::size_t, std::size_t> lambda_by_containment(Group const& g) {
    std::set<std::vector<Elem>> subs;
    for (auto x : g.elements()) {
      std::vector<Elem> m{g.identity()};
      for (Elem y = x; y != g.identity(); y = g.mul(y, x)) {
        m.push_back(y);
      }
      std::sort(m.begin(), m.end());
      subs.insert(m);
    }
    std::size_t maximal = 0;
    for (auto const& a : subs) {
      bool inside = false;
      for (auto const& b : subs) {
        if (b.size() > a.size()
            && std::includes(b.begin(), b.end(), a.begin(), a.end())) {
          inside = true;
          break;
        }
      }
      maximal += !inside;
    }
    return {maximal, subs.size()};
  }

  std::vector<CorpusEntry const*> slice(std::size_t max_order) {
    std::vector<CorpusEntry const*> out;
    for (auto const& e : corpus()) {
      if (e.group.order() <= max_order) {
        out.push_back(&e);
      }
    }
    return out;
  }
}  // namespace

TEST_CASE("examples") {
  CHECK(cyclic_count(build_group("C:6")) == 4);
  CHECK(cyclic_count(build_group("A:5")) == 32);
  CHECK(cyclic_count(build_group("Q:3")) == 5);
  CHECK(cyclic_count(build_group("C:7")) == 2);
  CHECK(cyclic_count(build_group("Ab:2,2")) == 4);

  CHECK(maximal_cyclic_subgroups(build_group("C:20")).members.size() == 1);
  auto v = maximal_cyclic_subgroups(build_group("Ab:2,2"));
  CHECK(v.members.size() == 3);
  for (auto const& h : v.members) {
    CHECK(h.order() == 2);
  }
  CHECK(maximal_cyclic_subgroups(build_group("D:4")).members.size() == 5);

  CHECK(lambda(build_group("A:4")) == 7);
  CHECK(lambda(build_group("D:15")) == 16);
  CHECK(lambda(build_group("PSL3:2")) == 57);
  CHECK(lambda(build_group("Ab:3,9")) == 6);
  CHECK(lambda(Group()) == 1);
}

TEST_CASE("cover kernel") {
  auto v = cover_kernel(build_group("Ab:2,2"));
  CHECK(v.kernel.is_trivial());
  CHECK(v.holds());
  CHECK(!v.degenerate);

  auto d = cover_kernel(build_group("Prod:[D:5],[C:3]"));
  CHECK(d.kernel.order() == 3);
  CHECK(d.kernel.is_cyclic());
  CHECK(d.holds());
  CHECK(d.quotient_lambda == 6);

  auto a = cover_kernel(build_group("Prod:[A:4],[C:7]"));
  CHECK(a.kernel.order() == 7);
  CHECK(a.holds());

  auto c = cover_kernel(build_group("C:12"));
  CHECK(c.degenerate);
  CHECK(c.kernel.is_whole());
}

TEST_CASE("family invariants") {
  for (auto spec : {"D:6", "Q:4", "A:4", "S:4", "SL23", "U36", "Prod:[D:5],[C:3]", "A:5"}) {
    INFO(spec);
    auto g   = build_group(spec);
    auto fam = maximal_cyclic_subgroups(g);
    Bitset meet(g.order());
    meet.set_all();
    std::vector<std::uint32_t> hits(g.order(), 0);
    for (std::size_t i = 0; i < fam.members.size(); ++i) {
      auto const& h = fam.members[i];
      CHECK(h.is_cyclic());
      if (i > 0) {
        CHECK(fam.members[i - 1].order() >= h.order());
      }
      meet &= h.members();
      h.members().for_each([&](std::size_t x) { ++hits[x]; });
    }
    CHECK(meet == fam.kernel.members());
    CHECK(std::all_of(hits.begin(), hits.end(), [](auto k) { return k > 0; }));
    // irredundant: every member owns a generator nobody else contains
    for (auto const& h : fam.members) {
      bool own = false;
      h.members().for_each([&](std::size_t x) {
        own = own || (hits[x] == 1 && g.element_order(Elem(x)) == h.order());
      });
      CHECK(own);
    }
  }
}

TEST_CASE("corpus agrees with the reference census") {
  auto const& fx = fixture();
  REQUIRE(fx.size() == corpus().size());
  for (auto const& e : corpus()) {
    INFO(e.id << " " << e.name);
    auto const& f  = fx.at(e.id);
    auto        ix = cyclic_index(e.group);
    CHECK(e.group.order() == f.at("order").get<std::size_t>());
    CHECK(ix.maximal_count == f.at("lambda").get<std::size_t>());
    CHECK(ix.size() == f.at("c").get<std::size_t>());
    CHECK(maximal_cyclic_subgroups(e.group).kernel.order()
          == f.at("kernel_order").get<std::size_t>());
    CHECK(enumerate_subgroups(e.group).size() == f.at("subgroups").get<std::size_t>());
    CHECK(center(e.group).order() == f.at("center_order").get<std::size_t>());
    CHECK(frattini_subgroup(e.group).order() == f.at("frattini_order").get<std::size_t>());
  }
}

TEST_CASE("power-map maximality agrees with pairwise containment") {
  for (auto const& e : corpus()) {
    INFO(e.id);
    auto [lam, c] = lambda_by_containment(e.group);
    CHECK(lambda(e.group) == lam);
    CHECK(cyclic_count(e.group) == c);
  }
  for (auto spec : {"A:5", "S:5", "PSL3:2", "Meta:7,6,3", "Prod:[Q:3],[C:3]"}) {
    INFO(spec);
    auto g        = build_group(spec);
    auto [lam, c] = lambda_by_containment(g);
    CHECK(lambda(g) == lam);
    CHECK(cyclic_count(g) == c);
  }
}

TEST_CASE("cyclic subgroups come out once each, in canonical order") {
  auto g    = build_group("S:4");
  auto list = cyclic_subgroups(g);
  CHECK(list.size() == 17);
  CHECK(list.front().is_trivial());
  for (std::size_t i = 1; i < list.size(); ++i) {
    CHECK(subgroup_less(list[i - 1], list[i]));
  }
}

TEST_CASE("monotonicity under subgroups and quotients") {
  for (auto const* e : slice(24)) {
    auto const& g   = e->group;
    auto        lam = lambda(g);
    INFO(e->id);
    for (auto const& h : enumerate_subgroups(g)) {
      CHECK(lambda(as_group(h)) <= lam);
      if (is_normal(h)) {
        CHECK(lambda(quotient_group(g, h)) <= lam);
      }
    }
    auto k = cover_kernel(g);
    if (!k.degenerate) {
      CHECK(k.holds());
    }
  }
}

TEST_CASE("direct products") {
  auto s = slice(24);
  for (auto const* a : s) {
    for (auto const* b : s) {
      if (a->group.order() * b->group.order() > 300 || a->id > b->id) {
        continue;
      }
      auto la = lambda(a->group), lb = lambda(b->group);
      auto lp = lambda(direct_product(a->group, b->group));
      INFO(a->id << " x " << b->id);
      if (std::gcd(a->group.order(), b->group.order()) == 1) {
        CHECK(lp == la * lb);
      } else {
        CHECK(lp >= la * lb);
      }
    }
  }
}

TEST_CASE("Frattini quotient when maximal cyclic subgroups are maximal") {
  std::size_t applicable = 0;
  for (auto const* e : slice(24)) {
    auto const& g      = e->group;
    auto        maxes  = maximal_subgroups(enumerate_subgroups(g));
    auto        fam    = maximal_cyclic_subgroups(g);
    bool        all_in = fam.members.size() > 1;
    for (auto const& h : fam.members) {
      all_in = all_in && std::any_of(maxes.begin(), maxes.end(), [&](Subgroup const& m) {
                 return m.members() == h.members();
               });
    }
    if (!all_in) {
      continue;
    }
    ++applicable;
    INFO(e->id);
    CHECK(lambda(quotient_group(g, frattini_subgroup(g))) == lambda(g));
  }
  CHECK(applicable > 5);
}

TEST_CASE("index bound and c > lambda") {
  for (auto const& e : corpus()) {
    auto fam = maximal_cyclic_subgroups(e.group);
    if (fam.members.size() == 1) {
      continue;
    }
    INFO(e.id);
    auto smallest_index = e.group.order() / fam.members.front().order();
    CHECK(smallest_index <= fam.members.size() - 1);
    CHECK(cyclic_count(e.group) > fam.members.size());
  }
}

TEST_CASE("family formulas on small parameters") {
  for (int n = 3; n <= 20; ++n) {
    CHECK(lambda(build_group("D:" + std::to_string(n))) == std::size_t(n + 1));
  }
  for (int n = 3; n <= 7; ++n) {
    CHECK(lambda(build_group("Q:" + std::to_string(n))) == (std::size_t(1) << (n - 2)) + 1);
  }
  for (int n = 4; n <= 7; ++n) {
    CHECK(lambda(build_group("W:" + std::to_string(n)))
          == (std::size_t(1) << (n - 3)) + (std::size_t(1) << (n - 2)) + 1);
    CHECK(lambda(build_group("T:" + std::to_string(n))) == std::size_t(n + 1));
  }
  for (int n = 3; n <= 5; ++n) {
    CHECK(lambda(build_group("R:" + std::to_string(n))) == std::size_t(2 * n));
  }
}
