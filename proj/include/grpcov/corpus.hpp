#pragma once

#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "config.hpp"
#include "group.hpp"
#include "permutation.hpp"

namespace grpcov {

  struct CorpusEntry {
    std::string id;
    std::string name;
    Group       group;
  };

  class MalformedCorpus : public InvalidArgument {
   public:
    MalformedCorpus(std::string const& where, std::string const& what)
        : InvalidArgument(where + ": " + what) {}
  };

  // Line-delimited JSON: one {"meta": {...}} header, then one record per
  // group. Per-order counts must match the header.
  inline std::vector<CorpusEntry> load_corpus(std::istream&      in,
                                              std::string const& source,
                                              std::ostream& warn = std::cerr) {
    using nlohmann::json;
    std::vector<CorpusEntry>             out;
    std::set<std::string>                ids;
    std::map<std::uint64_t, std::size_t> declared, seen;
    std::uint64_t                        max_order = 0;
    bool                                 have_meta = false;

    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (line.find_first_not_of(" \t\r") == std::string::npos) {
        continue;
      }
      std::string const where = source + ":" + std::to_string(lineno);
      json              j;
      try {
        j = json::parse(line);
      } catch (json::parse_error const& e) {
        throw MalformedCorpus(where, e.what());
      }
      if (!j.is_object()) {
        throw MalformedCorpus(where, "record is not an object");
      }
      if (j.contains("meta")) {
        if (have_meta || !out.empty()) {
          throw MalformedCorpus(where, "metadata header must come first");
        }
        try {
          auto const& m = j.at("meta");
          max_order     = m.at("max_order").get<std::uint64_t>();
          for (auto const& [k, v] : m.at("counts").items()) {
            declared[std::stoull(k)] = v.get<std::size_t>();
          }
        } catch (std::exception const& e) {
          throw MalformedCorpus(where, std::string("bad header: ") + e.what());
        }
        have_meta = true;
        continue;
      }
      if (!have_meta) {
        throw MalformedCorpus(where, "record before the metadata header");
      }
      CorpusEntry   e;
      std::uint64_t order  = 0;
      std::size_t   degree = 0;
      std::vector<Permutation> gens;
      try {
        e.id   = j.at("id").get<std::string>();
        e.name = j.value("name", e.id);
        order  = j.at("order").get<std::uint64_t>();
        degree = j.at("degree").get<std::size_t>();
        if (degree == 0) {
          throw MalformedCorpus(where, "degree must be positive");
        }
        for (auto const& g : j.at("gens")) {
          gens.push_back(Permutation::from_cycles(
              degree, g.get<std::vector<std::vector<std::uint32_t>>>()));
        }
      } catch (MalformedCorpus const&) {
        throw;
      } catch (std::exception const& ex) {
        throw MalformedCorpus(where, ex.what());
      }
      if (!ids.insert(e.id).second) {
        throw MalformedCorpus(where, "duplicate id '" + e.id + "'");
      }
      if (max_order != 0 && order > max_order) {
        throw MalformedCorpus(where, "order " + std::to_string(order)
                                         + " above max_order");
      }
      e.group = group_from_generators(gens, degree);
      if (e.group.order() != order) {
        throw MalformedCorpus(where, "generators give order "
                                         + std::to_string(e.group.order())
                                         + ", record says "
                                         + std::to_string(order));
      }
      ++seen[order];
      out.push_back(std::move(e));
    }

    if (!have_meta && out.empty()) {
      warn << "warning: " << source << " holds no groups\n";
      return out;
    }
    for (auto const& [order, count] : seen) {
      if (declared.count(order) == 0) {
        throw MalformedCorpus(source, "order " + std::to_string(order)
                                          + " not declared in the header");
      }
    }
    for (auto const& [order, count] : declared) {
      auto got = seen.count(order) ? seen[order] : 0;
      if (got != count) {
        throw MalformedCorpus(source, "order " + std::to_string(order)
                                          + ": header declares "
                                          + std::to_string(count)
                                          + " groups, file has "
                                          + std::to_string(got));
      }
    }
    if (out.empty()) {
      warn << "warning: " << source << " holds no groups\n";
    }
    return out;
  }

  inline std::vector<CorpusEntry> load_corpus(std::string const& path,
                                              std::ostream& warn = std::cerr) {
    std::ifstream in(path);
    if (!in) {
      throw InvalidArgument("cannot open corpus file '" + path + "'");
    }
    return load_corpus(in, path, warn);
  }

}  // namespace grpcov
