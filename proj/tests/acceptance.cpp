// One PASS/FAIL line per acceptance criterion. Exit status is nonzero when
// any criterion fails.

#include <grpcov/grpcov.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <set>
#include <sstream>

using namespace grpcov;

namespace {
  using Clock = std::chrono::steady_clock;

  double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
  }

  std::vector<CorpusEntry> const& corpus() {
    static auto c = load_corpus(GRPCOV_DATA "/corpus36.jsonl");
    return c;
  }

  // Collects failures and info lines for a single criterion.
  struct Outcome {
    std::vector<std::string> failures;
    std::vector<std::string> info;
    std::string              summary;

    void expect(bool ok, std::string const& what) {
      if (!ok) {
        failures.push_back(what);
      }
    }
  };

  std::uint64_t ipow(std::uint64_t b, unsigned e) {
    std::uint64_t r = 1;
    while (e--) {
      r *= b;
    }
    return r;
  }

  std::string ab(std::initializer_list<std::uint64_t> parts) {
    std::string s = "Ab:";
    bool first = true;
    for (auto x : parts) {
      s += (first ? "" : ",") + std::to_string(x);
      first = false;
    }
    return s;
  }

  Outcome named_values_suite() {
    Outcome o;
    std::size_t n = 0;
    for (auto const& v : named_values()) {
      auto r = check_named_value(v);
      ++n;
      std::string inv = v.invariant == NamedValue::Lambda ? "lambda" : "c";
      o.expect(r.ok, inv + "(" + v.name + ") = " + std::to_string(r.computed)
                         + ", expected " + (v.at_least ? ">= " : "")
                         + std::to_string(v.expected));
    }
    o.summary = std::to_string(n) + " named values, exact";
    return o;
  }

  Outcome formula_sweeps() {
    Outcome o;
    for (std::uint64_t n = 3; n <= 64; ++n) {
      auto l = lambda(build_group("D:" + std::to_string(n)));
      o.expect(l == n + 1, "lambda(D_" + std::to_string(n) + ") = " + std::to_string(l));
    }
    for (unsigned n = 3; n <= 8; ++n) {
      auto l = lambda(build_group("Q:" + std::to_string(n)));
      o.expect(l == ipow(2, n - 2) + 1, "lambda(Q_2^" + std::to_string(n) + ") = "
                                            + std::to_string(l));
    }
    for (unsigned n = 4; n <= 8; ++n) {
      auto l = lambda(build_group("W:" + std::to_string(n)));
      o.expect(l == ipow(2, n - 3) + ipow(2, n - 2) + 1,
               "lambda(W_" + std::to_string(n) + ") = " + std::to_string(l));
    }
    for (std::uint64_t n = 3; n <= 5; ++n) {
      auto l = lambda(build_group("R:" + std::to_string(n)));
      o.expect(l == 2 * n, "lambda(R_" + std::to_string(n) + ") = " + std::to_string(l));
    }

    // T_n: n + 1 from the proposition, alpha + 2 as used in the p-group case
    std::size_t plus1 = 0, plus2 = 0, tn = 0;
    for (std::uint64_t n = 4; n <= 8; ++n) {
      auto l = lambda(build_group("T:" + std::to_string(n)));
      ++tn;
      plus1 += l == n + 1;
      plus2 += l == n + 2;
    }
    auto t5 = lambda(build_group("T:5"));
    o.expect(t5 == 6, "lambda(T_5) = " + std::to_string(t5));
    o.info.push_back("lambda(T_n), n = 4..8: n+1 matches " + std::to_string(plus1) + "/"
                     + std::to_string(tn) + ", n+2 matches " + std::to_string(plus2) + "/"
                     + std::to_string(tn));

    // the four abelian formulas; the largest group has 5^8 elements
    ScopedLimits big({400'000, limits().max_subgroups, limits().oracle_subgroups});
    std::size_t corrected = 0, fourth = 0;
    for (std::int64_t p : {2, 3, 5}) {
      for (std::int64_t k = 1; k <= 4; ++k) {
        auto P  = std::uint64_t(p);
        auto pk = ipow(P, unsigned(k));
        auto tag = [&](char const* what, std::uint64_t got, std::int64_t want) {
          std::ostringstream s;
          s << what << " p=" << p << " k=" << k << ": lambda " << got << ", formula "
            << want;
          o.expect(std::int64_t(got) == want, s.str());
        };
        tag("C_p x C_p^k", lambda(build_group(ab({P, pk}))), k * p - k + 2);
        tag("C_p x C_p x C_p^k", lambda(build_group(ab({P, P, pk}))),
            k * p * p + p - k + 2);
        tag("C_p^2 x C_p^k", lambda(build_group(ab({P * P, pk}))),
            (k - 1) * p * p - (k - 3) * p);
        std::int64_t f4 = (k - 1) * p * p * p + 2 * p * p - (k - 2) * p;
        tag("C_p x C_p^3 x C_p^k", lambda(build_group(ab({P, P * P * P, pk}))), f4);
        ++fourth;
        corrected += std::int64_t(lambda(build_group(ab({P, P * P, pk})))) == f4;
      }
    }
    o.info.push_back("C_p x C_p^3 x C_p^k formula read with C_p^2 in the middle: matches "
                     + std::to_string(corrected) + "/" + std::to_string(fourth));
    o.summary = "dihedral, quaternion, W, R, T, abelian sweeps";
    return o;
  }

  Outcome census() {
    Outcome o;
    auto specs = lambda6_census_specs();
    std::vector<Group> builds;
    for (auto const& s : specs) {
      builds.push_back(build_group(s));
    }
    std::vector<std::size_t> hits(specs.size(), 0);
    std::size_t six = 0;
    for (auto const& e : corpus()) {
      if (lambda(e.group) != 6) {
        continue;
      }
      ++six;
      std::size_t matched = 0;
      for (std::size_t i = 0; i < builds.size(); ++i) {
        if (builds[i].order() == e.group.order() && are_isomorphic(builds[i], e.group)) {
          ++hits[i];
          ++matched;
        }
      }
      o.expect(matched == 1, e.id + " matches " + std::to_string(matched) + " listed classes");
    }
    o.expect(six == specs.size(), std::to_string(six) + " corpus groups with lambda = 6");
    for (std::size_t i = 0; i < specs.size(); ++i) {
      o.expect(hits[i] == 1, specs[i] + " found " + std::to_string(hits[i]) + " times");
    }
    auto a = verify_theorem_a(corpus());
    for (auto const& c : a.counterexamples) {
      o.failures.push_back("supersolvability: " + c);
    }
    o.summary = std::to_string(six) + " classes with lambda = 6, " + std::to_string(a.examined)
                + " groups checked for supersolvability";
    return o;
  }

  Outcome simple_groups(double& psl33_seconds) {
    Outcome o;
    std::vector<std::pair<std::string, std::uint64_t>> const want{
        {"A:5", 31}, {"PSL3:2", 57}, {"PSL2:8", 127}, {"PSL2:13", 183}, {"PSL3:3", 1275}};
    for (auto const& [s, v] : want) {
      auto t0 = Clock::now();
      auto l  = lambda(build_group(s));
      if (s == "PSL3:3") {
        psl33_seconds = seconds_since(t0);
      }
      o.expect(l == v, "lambda(" + s + ") = " + std::to_string(l));
    }
    o.expect(psl33_seconds < 120, "PSL3:3 took too long");
    o.summary = "5 simple groups";
    return o;
  }

  Outcome oracle_equivalence() {
    Outcome o;
    std::size_t checked = 0, skipped = 0;
    double      slowest = 0;
    for (auto const& e : corpus()) {
      if (e.group.order() > 16) {
        continue;
      }
      try {
        auto t0 = Clock::now();
        auto r  = max_irredundant_oracle(e.group);
        auto dt = seconds_since(t0);
        slowest = std::max(slowest, dt);
        ++checked;
        o.expect(r.size == lambda(e.group), e.id + ": oracle " + std::to_string(r.size)
                                                + ", lambda "
                                                + std::to_string(lambda(e.group)));
        o.expect(dt < 60, e.id + " took " + std::to_string(dt) + " s");
      } catch (CapExceeded const&) {
        ++skipped;
      }
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, ", slowest %.3f s", slowest);
    o.summary = std::to_string(checked) + " groups, " + std::to_string(skipped)
                + " above the subgroup cap" + buf;
    return o;
  }

  Outcome bound_lemmas() {
    Outcome o;
    std::size_t covers = 0;
    for (auto const& e : corpus()) {
      if (e.group.order() > 16 || lambda(e.group) == 1) {
        continue;
      }
      std::vector<std::vector<Subgroup>> all;
      try {
        all = irredundant_covers(e.group);
      } catch (CapExceeded const&) {
        continue;
      }
      for (auto const& cov : all) {
        ++covers;
        auto b = check_cover_bounds(e.group, cov);
        o.expect(b.cohn_sum_ok, e.id + ": Cohn sum fails, " + b.details);
        if (b.f_bound_ok) {
          o.expect(*b.f_bound_ok, e.id + ": index bound fails, " + b.details);
        }
      }
    }
    std::size_t families = 0;
    for (auto const& e : corpus()) {
      auto fam = maximal_cyclic_subgroups(e.group).members;
      if (fam.size() < 2) {
        continue;
      }
      ++families;
      auto v = check_bfs_lemma(e.group, fam);
      o.expect(v.empty(), e.id + ": " + std::to_string(v.size()) + " p-element violations");
    }
    o.summary = std::to_string(covers) + " irredundant covers, " + std::to_string(families)
                + " maximal cyclic families";
    return o;
  }

  Outcome algebraic_properties() {
    Outcome o;
    std::vector<CorpusEntry const*> slice;
    for (auto const& e : corpus()) {
      if (e.group.order() <= 24) {
        slice.push_back(&e);
      }
    }
    std::size_t checks = 0;
    for (auto const* e : slice) {
      auto const& g   = e->group;
      auto        lam = lambda(g);
      auto        subs = enumerate_subgroups(g);
      for (auto const& h : subs) {
        ++checks;
        o.expect(lambda(as_group(h)) <= lam, e->id + ": subgroup with larger lambda");
        if (is_normal(h)) {
          o.expect(lambda(quotient_group(g, h)) <= lam, e->id + ": quotient with larger lambda");
        }
      }
      auto k = cover_kernel(g);
      if (!k.degenerate) {
        ++checks;
        o.expect(k.holds(), e->id + ": cover kernel not central cyclic or lambda changes");
      }
      auto fam   = maximal_cyclic_subgroups(g).members;
      auto maxes = maximal_subgroups(subs);
      bool all_in = fam.size() > 1;
      for (auto const& h : fam) {
        all_in = all_in && std::any_of(maxes.begin(), maxes.end(), [&](Subgroup const& m) {
                   return m.members() == h.members();
                 });
      }
      if (all_in) {
        ++checks;
        o.expect(lambda(quotient_group(g, frattini_subgroup(g))) == lam,
                 e->id + ": Frattini quotient changes lambda");
      }
    }
    for (auto const* a : slice) {
      for (auto const* b : slice) {
        auto na = a->group.order(), nb = b->group.order();
        if (a->id > b->id || std::gcd(na, nb) != 1 || na * nb == 1) {
          continue;
        }
        ++checks;
        auto lp = lambda(direct_product(a->group, b->group));
        o.expect(lp == lambda(a->group) * lambda(b->group),
                 a->id + " x " + b->id + ": lambda not multiplicative");
      }
    }
    o.summary = std::to_string(slice.size()) + " groups, " + std::to_string(checks) + " checks";
    return o;
  }

  void take(Outcome& o, TheoremReport const& r) {
    for (auto const& c : r.counterexamples) {
      o.failures.push_back(r.theorem + ": " + c);
    }
  }

  Outcome theorem_d() {
    Outcome o;
    auto d = verify_theorem_d(corpus());
    auto c = verify_cor31(corpus());
    take(o, d);
    take(o, c);
    for (auto const& s : simple_catalog_specs()) {
      o.expect(self_normalizing_cyclic_scan(build_group(s)).empty(),
               s + ": self-normalizing cyclic subgroup found");
    }
    auto a5 = build_group("A:5");
    o.expect(lambda(a5) == 31 && cyclic_count(a5) == 32 && !is_solvable(a5),
             "A5 boundary values");
    o.summary = std::to_string(d.examined) + " groups for lambda <= 30, "
                + std::to_string(c.examined) + " for c <= 31; desk-scale substitute only";
    return o;
  }

  Outcome classifier_round_trip() {
    Outcome o;
    auto b = verify_theorem_bc('B', corpus());
    auto c = verify_theorem_bc('C', corpus());
    take(o, b);
    take(o, c);
    o.summary = std::to_string(theorem_b_sweep().size()) + " B instances, "
                + std::to_string(theorem_c_sweep().size()) + " C instances";
    return o;
  }

  Outcome scorza() {
    Outcome o;
    auto r = verify_scorza(corpus());
    take(o, r);
    o.summary = std::to_string(r.examined) + " groups";
    for (auto const& n : r.notes) {
      o.info.push_back(n);
    }
    return o;
  }
}  // namespace

int main() {
  struct Criterion {
    int                    id;
    std::string            name;
    double                 budget;  // seconds; 0 means none
    std::function<Outcome()> run;
  };
  double psl33 = 0;
  std::vector<Criterion> const criteria{
      {1, "named values", 30, named_values_suite},
      {2, "formula sweeps", 0, formula_sweeps},
      {3, "lambda = 6 census and supersolvability", 60, census},
      {4, "simple groups", 0, [&] { return simple_groups(psl33); }},
      {5, "oracle equals lambda (order <= 16)", 0, oracle_equivalence},
      {6, "bound lemmas", 0, bound_lemmas},
      {7, "algebraic properties (order <= 24)", 0, algebraic_properties},
      {8, "solvability below the simple boundary", 0, theorem_d},
      {9, "classifier round trip", 0, classifier_round_trip},
      {10, "3-cover criterion vs oracle", 0, scorza},
  };

  corpus();  // load once, outside the timings
  int failed = 0;
  for (auto const& c : criteria) {
    auto    t0 = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (std::exception const& e) {
      o.failures.push_back(std::string("exception: ") + e.what());
    }
    double dt = seconds_since(t0);
    if (c.budget > 0 && dt >= c.budget) {
      o.failures.push_back("took " + std::to_string(dt) + " s, budget "
                           + std::to_string(int(c.budget)) + " s");
    }
    bool ok = o.failures.empty();
    failed += !ok;
    char head[160];
    std::snprintf(head, sizeof head, "%s criterion %d (%s): %.1f s", ok ? "PASS" : "FAIL",
                  c.id, c.name.c_str(), dt);
    std::cout << head;
    if (c.budget > 0) {
      std::cout << " (budget " << c.budget << " s)";
    }
    std::cout << "; " << o.summary;
    if (!ok) {
      std::cout << "; " << o.failures.size() << " failure(s)";
    }
    std::cout << "\n";
    std::size_t shown = 0;
    for (auto const& f : o.failures) {
      if (++shown > 12) {
        std::cout << "    ... " << o.failures.size() - 12 << " more\n";
        break;
      }
      std::cout << "    failed: " << f << "\n";
    }
    for (auto const& i : o.info) {
      std::cout << "    info: " << i << "\n";
    }
    if (c.id == 4) {
      std::printf("    info: PSL3:3 took %.1f s (limit 120 s)\n", psl33);
    }
    std::cout.flush();
  }
  std::cout << (criteria.size() - std::size_t(failed)) << "/" << criteria.size()
            << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
