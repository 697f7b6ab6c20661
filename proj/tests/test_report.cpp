#include "catch_amalgamated.hpp"

#include <grpcov/cli.hpp>
#include <grpcov/report.hpp>

#include <sstream>

using namespace grpcov;

namespace {
  struct Run {
    int         code;
    std::string out, err;
  };

  Run cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int                code = run_cli(std::move(args), out, err);
    return {code, out.str(), err.str()};
  }

  std::string const corpus_path = GRPCOV_DATA "/corpus36.jsonl";

  std::size_t count_lines(std::string const& s) {
    return std::size_t(std::count(s.begin(), s.end(), '\n'));
  }
}  // namespace

TEST_CASE("rationals") {
  CHECK(Rational::of(6, 10) == Rational{3, 5});
  CHECK(to_string(Rational::of(7, 10)) == "7/10");
  CHECK(parse_rational("14/20") == Rational{7, 10});
  CHECK(Rational{1, 3} < Rational{1, 2});
  CHECK_THROWS_AS(parse_rational("3"), InvalidArgument);
  CHECK_THROWS_AS(parse_rational("3/x"), InvalidArgument);
  CHECK_THROWS_AS(parse_rational("3/0"), InvalidArgument);
}

TEST_CASE("report contents") {
  auto d = compute_report("D:5", {false, false, false});
  CHECK(d.order == 10);
  CHECK(d.lambda == 6);
  CHECK(d.c == 7);
  CHECK(d.alpha == Rational{7, 10});
  CHECK(d.beta == Rational{3, 5});
  CHECK(d.kernel_order == 1);
  CHECK(d.quotient_order == 10);
  CHECK(!d.sigma);
  CHECK(!d.class_label);
  CHECK(d.timing_ms == 0);

  auto one = compute_report("C:1", {true, true, false});
  CHECK(one.lambda == 1);
  CHECK(one.alpha == Rational{1, 1});
  CHECK(!one.sigma);  // undefined for cyclic groups
  REQUIRE(one.class_label);
  CHECK(one.class_label->tag == LabelTag::NotLambda6);

  auto a5 = compute_report("A:5");
  CHECK(a5.c == 32);
  CHECK(a5.lambda == 31);
  CHECK(!a5.flags.solvable);

  auto full = compute_report("D:5", {true, true, false});
  CHECK(full.sigma == 6u);
  CHECK(full.class_label->tag == LabelTag::Ca);
}

TEST_CASE("JSON round trip") {
  for (auto spec : {"C:1", "D:5", "Prod:[D:5],[C:3]", "Q:3", "A:4"}) {
    INFO(spec);
    auto r    = compute_report(spec, {true, true, false});
    auto text = to_json(r).dump();
    CHECK(report_from_json(std::string_view(text)) == r);
  }
  auto j = to_json(compute_report("A:4", {false, false, false}));
  CHECK(j["sigma"].is_null());
  CHECK(j["class_label"].is_null());
  CHECK(j["alpha"] == "2/3");
  CHECK(j["flags"]["primes"] == nlohmann::json::array({2, 3}));
  CHECK_THROWS(report_from_json(std::string_view("{\"spec\": 3}")));
}

TEST_CASE("CSV") {
  CHECK(csv_columns().size() == 18);
  CHECK(csv_header().starts_with("spec,order,lambda,c,sigma,"));
  auto r   = compute_report("Prod:[D:5],[C:3]", {false, false, false});
  auto row = to_csv_row(r);
  // the spec contains commas and must be quoted
  CHECK(row.starts_with("\"Prod:[Dih:5],[Cyc:3]\",30,6,14,,"));
  CHECK(row.find(",2 3 5,") != std::string::npos);
  auto csv = serialize_report(r, Format::Csv);
  CHECK(count_lines(csv) == 2);
}

TEST_CASE("filters") {
  auto d5 = compute_report("D:5", {false, false, false});
  auto c4 = compute_report("C:4", {false, false, false});
  CHECK(Filter::parse("lambda=6")(d5));
  CHECK(!Filter::parse("lambda=6")(c4));
  CHECK(Filter::parse("lambda==6, !nilpotent")(d5));
  CHECK(Filter::parse("cyclic && order<=4")(c4));
  CHECK(!Filter::parse("cyclic && order<4")(c4));
  CHECK(Filter::parse("c>=3 && kernel_order!=2")(d5));
  CHECK(Filter::parse("nilpotent=false")(d5));
  CHECK(Filter::parse("")(d5));
  CHECK_THROWS_AS(Filter::parse("colour=6"), InvalidArgument);
  CHECK_THROWS_AS(Filter::parse("lambda=six"), InvalidArgument);
  CHECK_THROWS_AS(Filter::parse("lambda~6"), InvalidArgument);
}

TEST_CASE("report identities over the corpus") {
  auto r = cli({"scan", "--corpus", corpus_path, "--json", "--no-timing"});
  REQUIRE(r.code == 0);
  std::istringstream in(r.out);
  std::string        line;
  std::size_t        n = 0;
  while (std::getline(in, line)) {
    auto rep = report_from_json(std::string_view(line));
    ++n;
    INFO(rep.spec);
    CHECK(rep.quotient_order * rep.kernel_order == rep.order);
    CHECK(!(rep.alpha < rep.beta));
    CHECK(!(Rational{1, 1} < rep.alpha));
    if (rep.order > 1) {
      CHECK(rep.beta < rep.alpha);
    }
  }
  CHECK(n == 162);
}

TEST_CASE("command line") {
  auto c = cli({"compute", "D:5", "--json", "--no-timing"});
  CHECK(c.code == Success);
  CHECK(c.out.find("\"lambda\":6") != std::string::npos);

  CHECK(cli({"compute", "Foo:3"}).code == Usage);
  CHECK(cli({"compute", "S:9"}).code == Cap);
  CHECK(cli({}).code == Usage);
  CHECK(cli({"compute"}).code == Usage);
  CHECK(cli({"--help"}).code == Success);
  CHECK(cli({"scan", "--corpus", "/nonexistent.jsonl"}).code == Usage);
  CHECK(cli({"scan", "--where", "bogus>1", "--corpus", corpus_path}).code == Usage);
  CHECK(cli({"verify", "Z"}).code == Usage);

  auto s = cli({"scan", "--corpus", corpus_path, "--where", "lambda=6", "--csv", "--no-timing"});
  CHECK(s.code == Success);
  CHECK(count_lines(s.out) == 13);

  auto o = cli({"oracle", "Ab:2,2"});
  CHECK(o.code == Success);
  CHECK(o.out.find("3 members") != std::string::npos);
  CHECK(cli({"oracle", "A:5"}).code == Cap);

  auto v = cli({"verify", "A", "--corpus", corpus_path});
  CHECK(v.code == Success);
  CHECK(v.out.find("PASSED") != std::string::npos);

  auto p = cli({"verify", "paper-values", "--json"});
  CHECK(p.code == Counterexample);
  CHECK(p.out.find("C4 x S3") != std::string::npos);
}

TEST_CASE("scan output does not depend on the thread count") {
  auto base = cli({"scan", "--corpus", corpus_path, "--json", "--no-timing", "--sigma"});
  REQUIRE(base.code == 0);
  for (std::string t : {"2", "4"}) {
    auto r = cli({"scan", "--corpus", corpus_path, "--json", "--no-timing", "--sigma",
                  "--threads", t});
    CHECK(r.out == base.out);
  }
}
