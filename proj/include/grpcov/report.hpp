#pragma once

#include <cctype>
#include <charconv>
#include <chrono>
#include <cstdint>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "catalog.hpp"
#include "classify.hpp"
#include "config.hpp"
#include "covering.hpp"
#include "cyclic.hpp"
#include "group.hpp"
#include "structure.hpp"

namespace grpcov {

  struct Rational {
    std::uint64_t num = 0;
    std::uint64_t den = 1;

    static Rational of(std::uint64_t p, std::uint64_t q) {
      if (q == 0) {
        throw InvalidArgument("zero denominator");
      }
      auto g = std::gcd(p, q);
      return {p / g, q / g};
    }
    friend bool operator==(Rational const&, Rational const&) = default;
    friend bool operator<(Rational const& a, Rational const& b) {
      return static_cast<unsigned __int128>(a.num) * b.den
             < static_cast<unsigned __int128>(b.num) * a.den;
    }
  };

  inline std::string to_string(Rational const& r) {
    return std::to_string(r.num) + "/" + std::to_string(r.den);
  }

  inline Rational parse_rational(std::string const& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) {
      throw InvalidArgument("rational '" + s + "' is not of the form p/q");
    }
    try {
      std::size_t used = 0;
      auto        p    = std::stoull(s.substr(0, slash), &used);
      if (used != slash) {
        throw InvalidArgument("bad numerator");
      }
      auto rest = s.substr(slash + 1);
      auto q    = std::stoull(rest, &used);
      if (used != rest.size()) {
        throw InvalidArgument("bad denominator");
      }
      return Rational::of(p, q);
    } catch (std::logic_error const&) {
      throw InvalidArgument("rational '" + s + "' is not of the form p/q");
    }
  }

  struct InvariantReport {
    std::string               spec;
    std::uint64_t             order  = 1;
    std::uint64_t             lambda = 1;
    std::uint64_t             c      = 1;
    std::optional<std::uint64_t> sigma;
    StructureFlags            flags;
    std::uint64_t             kernel_order   = 1;
    std::uint64_t             quotient_order = 1;
    std::optional<ClassLabel> class_label;
    Rational                  alpha{1, 1};
    Rational                  beta{1, 1};
    std::uint64_t             timing_ms = 0;

    friend bool operator==(InvariantReport const&, InvariantReport const&) = default;
  };

  struct ReportOptions {
    bool sigma    = false;
    bool classify = false;
    bool timing   = true;
  };

  inline InvariantReport make_report(std::string spec, Group const& g,
                                     ReportOptions const& opt = {}) {
    auto            t0 = std::chrono::steady_clock::now();
    InvariantReport r;
    r.spec  = std::move(spec);
    r.order = g.order();
    auto ix = cyclic_index(g);
    r.lambda = ix.maximal_count;
    r.c      = ix.size();
    auto fam = maximal_cyclic_subgroups(g);
    r.kernel_order   = fam.kernel.order();
    r.quotient_order = r.order / r.kernel_order;
    r.flags          = structure_flags(g);
    if (opt.sigma && r.lambda > 1) {
      r.sigma = sigma(g);
    }
    if (opt.classify) {
      r.class_label = classify_lambda6(g);
    }
    r.alpha = Rational::of(r.c, r.order);
    r.beta  = Rational::of(r.lambda, r.order);
    if (opt.timing) {
      r.timing_ms = std::uint64_t(std::chrono::duration_cast<std::chrono::milliseconds>(
                                      std::chrono::steady_clock::now() - t0)
                                      .count());
    }
    return r;
  }

  inline InvariantReport compute_report(std::string const&   spec,
                                        ReportOptions const& opt = {}) {
    auto parsed = parse_spec(spec);
    return make_report(to_string(parsed), build_group(parsed), opt);
  }

  ////////////////////////////////////////////////////////////////////////
  // JSON
  ////////////////////////////////////////////////////////////////////////

  inline nlohmann::ordered_json to_json(StructureFlags const& f) {
    nlohmann::ordered_json j;
    j["abelian"]          = f.abelian;
    j["nilpotent"]        = f.nilpotent;
    j["solvable"]         = f.solvable;
    j["supersolvable"]    = f.supersolvable;
    j["dedekind"]         = f.dedekind;
    j["all_sylow_cyclic"] = f.all_sylow_cyclic;
    j["primes"]           = std::vector<std::uint64_t>(f.primes.begin(), f.primes.end());
    return j;
  }

  inline nlohmann::ordered_json to_json(ClassLabel const& l) {
    nlohmann::ordered_json j;
    j["tag"] = to_string(l.tag);
    j["n"]   = l.n;
    std::vector<std::string> al;
    for (auto a : l.aliases) {
      al.push_back(to_string(a));
    }
    j["aliases"] = al;
    j["notes"]   = l.notes;
    return j;
  }

  inline nlohmann::ordered_json to_json(InvariantReport const& r) {
    nlohmann::ordered_json j;
    j["spec"]   = r.spec;
    j["order"]  = r.order;
    j["lambda"] = r.lambda;
    j["c"]      = r.c;
    j["sigma"]  = r.sigma ? nlohmann::ordered_json(*r.sigma) : nlohmann::ordered_json();
    j["flags"]  = to_json(r.flags);
    j["kernel_order"]   = r.kernel_order;
    j["quotient_order"] = r.quotient_order;
    j["class_label"] = r.class_label ? to_json(*r.class_label) : nlohmann::ordered_json();
    j["alpha"]     = to_string(r.alpha);
    j["beta"]      = to_string(r.beta);
    j["timing_ms"] = r.timing_ms;
    return j;
  }

  inline nlohmann::ordered_json to_json(TheoremReport const& r) {
    nlohmann::ordered_json j;
    j["theorem"]         = r.theorem;
    j["examined"]        = r.examined;
    j["passed"]          = r.passed();
    j["counterexamples"] = r.counterexamples;
    j["notes"]           = r.notes;
    return j;
  }

  namespace detail {
    template <typename J>
    J const& field(J const& j, char const* key) {
      if (!j.is_object() || !j.contains(key)) {
        throw InvalidArgument(std::string("report is missing '") + key + "'");
      }
      return j.at(key);
    }

    template <typename T, typename J>
    T get(J const& j, char const* key) {
      try {
        return field(j, key).template get<T>();
      } catch (nlohmann::json::exception const&) {
        throw InvalidArgument(std::string("report field '") + key
                              + "' has the wrong type");
      }
    }

    inline LabelTag tag_of(std::string const& s) {
      auto t = label_from_string(s);
      if (!t) {
        throw InvalidArgument("unknown class label '" + s + "'");
      }
      return *t;
    }
  }  // namespace detail

  inline InvariantReport report_from_json(nlohmann::json const& j) {
    using detail::get;
    InvariantReport r;
    r.spec   = get<std::string>(j, "spec");
    r.order  = get<std::uint64_t>(j, "order");
    r.lambda = get<std::uint64_t>(j, "lambda");
    r.c      = get<std::uint64_t>(j, "c");
    if (auto const& s = detail::field(j, "sigma"); !s.is_null()) {
      r.sigma = get<std::uint64_t>(j, "sigma");
    }
    auto const& f = detail::field(j, "flags");
    r.flags.abelian          = get<bool>(f, "abelian");
    r.flags.nilpotent        = get<bool>(f, "nilpotent");
    r.flags.solvable         = get<bool>(f, "solvable");
    r.flags.supersolvable    = get<bool>(f, "supersolvable");
    r.flags.dedekind         = get<bool>(f, "dedekind");
    r.flags.all_sylow_cyclic = get<bool>(f, "all_sylow_cyclic");
    for (auto p : get<std::vector<std::uint64_t>>(f, "primes")) {
      r.flags.primes.insert(p);
    }
    r.kernel_order   = get<std::uint64_t>(j, "kernel_order");
    r.quotient_order = get<std::uint64_t>(j, "quotient_order");
    if (auto const& l = detail::field(j, "class_label"); !l.is_null()) {
      ClassLabel label;
      label.tag   = detail::tag_of(get<std::string>(l, "tag"));
      label.n     = get<std::uint64_t>(l, "n");
      label.notes = get<std::string>(l, "notes");
      for (auto const& a : get<std::vector<std::string>>(l, "aliases")) {
        label.aliases.push_back(detail::tag_of(a));
      }
      r.class_label = std::move(label);
    }
    r.alpha     = parse_rational(get<std::string>(j, "alpha"));
    r.beta      = parse_rational(get<std::string>(j, "beta"));
    r.timing_ms = get<std::uint64_t>(j, "timing_ms");
    return r;
  }

  inline InvariantReport report_from_json(std::string_view text) {
    try {
      return report_from_json(nlohmann::json::parse(text));
    } catch (nlohmann::json::parse_error const& e) {
      throw InvalidArgument(std::string("report is not JSON: ") + e.what());
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // CSV
  ////////////////////////////////////////////////////////////////////////

  inline std::vector<std::string> const& csv_columns() {
    static std::vector<std::string> const cols{
        "spec",          "order",     "lambda",         "c",
        "sigma",         "abelian",   "nilpotent",      "solvable",
        "supersolvable", "dedekind",  "all_sylow_cyclic", "primes",
        "kernel_order",  "quotient_order", "class_label", "alpha",
        "beta",          "timing_ms"};
    return cols;
  }

  namespace detail {
    inline std::string csv_quote(std::string const& s) {
      if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
      }
      std::string out = "\"";
      for (char ch : s) {
        if (ch == '"') {
          out += '"';
        }
        out += ch;
      }
      return out + "\"";
    }

    inline std::string join(std::vector<std::string> const& v, char sep) {
      std::string out;
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) {
          out += sep;
        }
        out += v[i];
      }
      return out;
    }
  }  // namespace detail

  inline std::string csv_header() { return detail::join(csv_columns(), ',') + "\n"; }

  inline std::string to_csv_row(InvariantReport const& r) {
    auto b = [](bool x) { return std::string(x ? "true" : "false"); };
    std::vector<std::string> primes;
    for (auto p : r.flags.primes) {
      primes.push_back(std::to_string(p));
    }
    std::vector<std::string> cells{
        detail::csv_quote(r.spec),
        std::to_string(r.order),
        std::to_string(r.lambda),
        std::to_string(r.c),
        r.sigma ? std::to_string(*r.sigma) : "",
        b(r.flags.abelian),
        b(r.flags.nilpotent),
        b(r.flags.solvable),
        b(r.flags.supersolvable),
        b(r.flags.dedekind),
        b(r.flags.all_sylow_cyclic),
        detail::join(primes, ' '),
        std::to_string(r.kernel_order),
        std::to_string(r.quotient_order),
        r.class_label ? detail::csv_quote(to_string(*r.class_label)) : "",
        to_string(r.alpha),
        to_string(r.beta),
        std::to_string(r.timing_ms)};
    return detail::join(cells, ',') + "\n";
  }

  enum class Format { Text, Json, Csv };

  inline std::string to_text(InvariantReport const& r) {
    std::ostringstream os;
    os << "spec           " << r.spec << "\n"
       << "order          " << r.order << "\n"
       << "lambda         " << r.lambda << "\n"
       << "c              " << r.c << "\n";
    if (r.sigma) {
      os << "sigma          " << *r.sigma << "\n";
    }
    os << "kernel_order   " << r.kernel_order << "\n"
       << "quotient_order " << r.quotient_order << "\n"
       << "flags         ";
    std::pair<char const*, bool> const fl[] = {
        {"abelian", r.flags.abelian},        {"nilpotent", r.flags.nilpotent},
        {"solvable", r.flags.solvable},      {"supersolvable", r.flags.supersolvable},
        {"dedekind", r.flags.dedekind},      {"all_sylow_cyclic", r.flags.all_sylow_cyclic}};
    for (auto [name, on] : fl) {
      os << ' ' << (on ? "" : "!") << name;
    }
    os << "\n";
    if (r.class_label) {
      os << "class_label    " << to_string(*r.class_label) << "\n";
      if (!r.class_label->notes.empty()) {
        os << "               " << r.class_label->notes << "\n";
      }
    }
    os << "alpha          " << to_string(r.alpha) << "\n"
       << "beta           " << to_string(r.beta) << "\n"
       << "timing_ms      " << r.timing_ms << "\n";
    return os.str();
  }

  inline std::string serialize_report(InvariantReport const& r, Format f) {
    switch (f) {
      case Format::Json:
        return to_json(r).dump() + "\n";
      case Format::Csv:
        return csv_header() + to_csv_row(r);
      default:
        return to_text(r);
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // Scan filters: conjunctions of comparisons, e.g.
  //   lambda=6, nilpotent=false
  //   c<=31 && !solvable
  ////////////////////////////////////////////////////////////////////////

  class Filter {
   public:
    bool operator()(InvariantReport const& r) const {
      for (auto const& a : _atoms) {
        if (!a.test(r)) {
          return false;
        }
      }
      return true;
    }
    bool empty() const noexcept { return _atoms.empty(); }

    static Filter parse(std::string_view text);

   private:
    struct Atom {
      std::string   field;
      std::string   op;
      std::uint64_t value = 0;

      static std::optional<bool> flag(InvariantReport const& r, std::string const& f) {
        if (f == "abelian") return r.flags.abelian;
        if (f == "nilpotent") return r.flags.nilpotent;
        if (f == "solvable") return r.flags.solvable;
        if (f == "supersolvable") return r.flags.supersolvable;
        if (f == "dedekind") return r.flags.dedekind;
        if (f == "all_sylow_cyclic") return r.flags.all_sylow_cyclic;
        if (f == "cyclic") return r.lambda == 1;
        return std::nullopt;
      }
      static std::optional<std::uint64_t> number(InvariantReport const& r,
                                                 std::string const&     f) {
        if (f == "lambda") return r.lambda;
        if (f == "c") return r.c;
        if (f == "order") return r.order;
        if (f == "kernel_order") return r.kernel_order;
        if (f == "quotient_order") return r.quotient_order;
        return std::nullopt;
      }

      bool test(InvariantReport const& r) const {
        std::uint64_t x = 0;
        if (auto b = flag(r, field)) {
          x = *b;
        } else {
          x = *number(r, field);
        }
        if (op == "=") return x == value;
        if (op == "!=") return x != value;
        if (op == "<") return x < value;
        if (op == "<=") return x <= value;
        if (op == ">") return x > value;
        return x >= value;
      }
    };

    std::vector<Atom> _atoms;
  };

  inline Filter Filter::parse(std::string_view text) {
    auto trim = [](std::string_view s) {
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
      }
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
      }
      return s;
    };
    // split on "," and "&&"
    std::vector<std::string_view> parts;
    std::size_t                   start = 0;
    for (std::size_t i = 0; i <= text.size(); ++i) {
      if (i == text.size() || text[i] == ',') {
        parts.push_back(text.substr(start, i - start));
        start = i + 1;
      } else if (text.substr(i, 2) == "&&") {
        parts.push_back(text.substr(start, i - start));
        start = i + 2;
        ++i;
      }
    }
    InvariantReport probe;
    Filter          out;
    for (auto raw : parts) {
      auto part = trim(raw);
      if (part.empty()) {
        if (trim(text).empty()) {
          continue;
        }
        throw InvalidArgument("empty filter term in '" + std::string(text) + "'");
      }
      Atom a;
      auto opos = part.find_first_of("=!<>");
      if (opos == 0 && part[0] == '!') {
        a.field = std::string(trim(part.substr(1)));
        a.op    = "=";
        a.value = 0;
      } else if (opos == std::string_view::npos) {
        a.field = std::string(part);
        a.op    = "=";
        a.value = 1;
      } else {
        a.field  = std::string(trim(part.substr(0, opos)));
        auto rest = part.substr(opos);
        for (std::string_view op : {"<=", ">=", "!=", "==", "=", "<", ">"}) {
          if (rest.substr(0, op.size()) == op) {
            a.op = op == "==" ? "=" : std::string(op);
            rest.remove_prefix(op.size());
            break;
          }
        }
        if (a.op.empty()) {
          throw InvalidArgument("bad comparison in filter term '" + std::string(part) + "'");
        }
        auto v = std::string(trim(rest));
        if (Atom::flag(probe, a.field)) {
          if (v != "true" && v != "false") {
            throw InvalidArgument("flag '" + a.field + "' compares to true or false");
          }
          if (a.op != "=" && a.op != "!=") {
            throw InvalidArgument("flag '" + a.field + "' supports only = and !=");
          }
          a.value = v == "true";
        } else {
          std::uint64_t x   = 0;
          auto          res = std::from_chars(v.data(), v.data() + v.size(), x);
          if (v.empty() || res.ec != std::errc() || res.ptr != v.data() + v.size()) {
            throw InvalidArgument("filter value '" + v + "' is not a non-negative integer");
          }
          a.value = x;
        }
      }
      bool is_flag = Atom::flag(probe, a.field).has_value();
      if (!is_flag && !Atom::number(probe, a.field)) {
        throw InvalidArgument("unknown filter field '" + a.field + "'");
      }
      if (!is_flag && (opos == std::string_view::npos || part[0] == '!')) {
        throw InvalidArgument("numeric field '" + a.field + "' needs a comparison");
      }
      out._atoms.push_back(std::move(a));
    }
    return out;
  }

}  // namespace grpcov
