#pragma once

#include <algorithm>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "catalog.hpp"
#include "classify.hpp"
#include "config.hpp"
#include "corpus.hpp"
#include "covering.hpp"
#include "parallel.hpp"
#include "report.hpp"

#ifndef GRPCOV_DEFAULT_CORPUS
#define GRPCOV_DEFAULT_CORPUS "data/corpus36.jsonl"
#endif

namespace grpcov {

  enum ExitCode : int { Success = 0, Counterexample = 1, Usage = 2, Cap = 3 };

  namespace detail {
    struct CliState {
      std::string spec;
      std::string corpus = GRPCOV_DEFAULT_CORPUS;
      std::string where;
      std::string theorem;
      bool        json      = false;
      bool        csv       = false;
      bool        sigma     = false;
      bool        classify  = false;
      bool        no_timing = false;
      unsigned    threads   = 1;
    };

    inline Format format_of(CliState const& s) {
      return s.json ? Format::Json : s.csv ? Format::Csv : Format::Text;
    }

    inline void print_reports(std::vector<InvariantReport> const& rs, Format f,
                              std::ostream& out) {
      if (f == Format::Csv) {
        out << csv_header();
        for (auto const& r : rs) {
          out << to_csv_row(r);
        }
        return;
      }
      for (std::size_t i = 0; i < rs.size(); ++i) {
        if (f == Format::Text && i > 0) {
          out << "\n";
        }
        out << serialize_report(rs[i], f);
      }
    }

    inline int cmd_compute(CliState const& s, std::ostream& out) {
      ReportOptions opt{s.sigma, s.classify, !s.no_timing};
      print_reports({compute_report(s.spec, opt)}, format_of(s), out);
      return Success;
    }

    inline int cmd_scan(CliState const& s, std::ostream& out, std::ostream& err) {
      auto filter = Filter::parse(s.where);
      auto corpus = load_corpus(s.corpus, err);
      ReportOptions opt{s.sigma, s.classify, !s.no_timing};
      auto reports = parallel_map<InvariantReport>(
          corpus.size(), s.threads,
          [&](std::size_t i) { return make_report(corpus[i].id, corpus[i].group, opt); });
      std::vector<InvariantReport> keep;
      std::copy_if(reports.begin(), reports.end(), std::back_inserter(keep), filter);
      print_reports(keep, format_of(s), out);
      return Success;
    }

    inline std::string describe(Subgroup const& h) {
      std::string gens;
      for (auto x : h.generators()) {
        gens += (gens.empty() ? "" : ", ") + std::to_string(x);
      }
      return "order " + std::to_string(h.order()) + ", generated by {" + gens + "}";
    }

    inline int cmd_oracle(CliState const& s, std::ostream& out) {
      auto parsed = parse_spec(s.spec);
      auto g      = build_group(parsed);
      auto res    = max_irredundant_oracle(g);
      auto lam    = lambda(g);
      if (s.json) {
        nlohmann::ordered_json j;
        j["spec"]       = to_string(parsed);
        j["order"]      = g.order();
        j["size"]       = res.size;
        j["lambda"]     = lam;
        j["degenerate"] = res.degenerate;
        auto members    = nlohmann::ordered_json::array();
        for (std::size_t i = 0; i < res.cover.size(); ++i) {
          auto const&            h = res.cover[i];
          nlohmann::ordered_json m;
          m["order"] = h.order();
          m["generators"] = std::vector<Elem>(h.generators().begin(), h.generators().end());
          if (res.certificate) {
            m["witness"] = res.certificate->witnesses[i];
          }
          members.push_back(m);
        }
        j["cover"] = members;
        out << j.dump() << "\n";
        return Success;
      }
      out << to_string(parsed) << ": order " << g.order() << ", lambda " << lam
          << "\n";
      if (res.degenerate) {
        out << "cyclic group: the only irredundant family is {G}\n";
        return Success;
      }
      out << "largest irredundant cover: " << res.size << " members\n";
      for (std::size_t i = 0; i < res.cover.size(); ++i) {
        out << "  X" << i + 1 << ": " << describe(res.cover[i]);
        if (res.certificate) {
          out << "; witness " << res.certificate->witnesses[i];
        }
        out << "\n";
      }
      out << (res.certificate ? "certified: cover, each member has a private element\n"
                              : "certificate missing\n");
      return Success;
    }

    inline bool needs_corpus(std::string const& id) { return id != "paper-values"; }

    inline int cmd_verify(CliState const& s, std::ostream& out, std::ostream& err) {
      auto ids = theorem_ids();
      if (std::find(ids.begin(), ids.end(), s.theorem) == ids.end()) {
        throw InvalidArgument("unknown theorem id '" + s.theorem + "'");
      }
      std::vector<CorpusEntry> corpus;
      if (needs_corpus(s.theorem)) {
        corpus = load_corpus(s.corpus, err);
      }
      auto r = verify_theorem(s.theorem, corpus, s.threads);
      if (s.json) {
        out << to_json(r).dump() << "\n";
      } else {
        out << "theorem " << r.theorem << ": examined " << r.examined << ", "
            << r.counterexamples.size() << " counterexample(s)\n";
        for (auto const& c : r.counterexamples) {
          out << "  counterexample: " << c << "\n";
        }
        for (auto const& n : r.notes) {
          out << "  note: " << n << "\n";
        }
        out << (r.passed() ? "PASSED\n" : "FAILED\n");
      }
      return r.passed() ? Success : Counterexample;
    }
  }  // namespace detail

  // args excludes the program name.
  inline int run_cli(std::vector<std::string> args, std::ostream& out = std::cout,
                     std::ostream& err = std::cerr) {
    detail::CliState s;
    CLI::App app{"Irredundant coverings and maximal cyclic subgroups of finite groups",
                 "grpcov"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Show help for all subcommands");

    auto formats = [&](CLI::App* sub) {
      auto j = sub->add_flag("--json", s.json, "JSON output");
      auto c = sub->add_flag("--csv", s.csv, "CSV output with a header row");
      j->excludes(c);
    };
    auto threads = [&](CLI::App* sub) {
      sub->add_option("--threads", s.threads, "worker threads")
          ->check(CLI::Range(1u, 256u));
    };

    auto compute = app.add_subcommand("compute", "invariants of one catalog group");
    compute->add_option("spec", s.spec, "group spec, e.g. Dih:5 or Prod:[C:3],[A:4]")
        ->required();
    compute->add_flag("--sigma", s.sigma, "also compute sigma (minimum cover size)");
    compute->add_flag("--classify", s.classify, "label lambda = 6 groups by family");
    compute->add_flag("--no-timing", s.no_timing, "report timing_ms as 0");
    formats(compute);

    auto scan = app.add_subcommand("scan", "invariants of every corpus group");
    scan->add_option("--corpus", s.corpus, "corpus file (JSON lines)");
    scan->add_option("--where", s.where,
                     "filter, e.g. \"lambda=6, nilpotent=false\" or \"c<=31 && !solvable\"");
    scan->add_flag("--sigma", s.sigma, "also compute sigma");
    scan->add_flag("--classify", s.classify, "label lambda = 6 groups by family");
    scan->add_flag("--no-timing", s.no_timing, "report timing_ms as 0");
    formats(scan);
    threads(scan);

    auto oracle = app.add_subcommand("oracle", "largest irredundant cover by exhaustive search");
    oracle->add_option("spec", s.spec, "group spec")->required();
    oracle->add_flag("--json", s.json, "JSON output");

    auto verify = app.add_subcommand("verify", "check a theorem over corpus and catalog");
    verify->add_option("theorem", s.theorem, "A, B, C, D, cor31, scorza or paper-values")
        ->required();
    verify->add_option("--corpus", s.corpus, "corpus file (JSON lines)");
    verify->add_flag("--json", s.json, "JSON output");
    threads(verify);

    std::reverse(args.begin(), args.end());
    try {
      app.parse(std::move(args));
    } catch (CLI::Error const& e) {
      // help requests come through here too, with exit code 0
      return app.exit(e, out, err) == 0 ? Success : Usage;
    }

    try {
      if (compute->parsed()) {
        return detail::cmd_compute(s, out);
      }
      if (scan->parsed()) {
        return detail::cmd_scan(s, out, err);
      }
      if (oracle->parsed()) {
        return detail::cmd_oracle(s, out);
      }
      return detail::cmd_verify(s, out, err);
    } catch (CapExceeded const& e) {
      err << "error: " << e.what() << "\n";
      return Cap;
    } catch (Lambda6Unmatched const& e) {
      err << "counterexample: " << e.what() << "\n";
      return Counterexample;
    } catch (InvalidArgument const& e) {
      err << "error: " << e.what() << "\n";
      return Usage;
    }
  }

}  // namespace grpcov
