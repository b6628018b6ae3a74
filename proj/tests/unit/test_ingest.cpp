#include <doctest.h>

#include <random>
#include <sstream>

#include "hypergrowth/errors.hpp"
#include "hypergrowth/fitting.hpp"
#include "hypergrowth/ingest.hpp"

using namespace hypergrowth;

namespace {
TimeSeries parse(const std::string& text, const CsvSchema& schema = {}) {
  std::istringstream in(text);
  return parse_csv(in, schema);
}

template <typename E>
E capture(const std::string& text, const CsvSchema& schema = {}) {
  try {
    parse(text, schema);
  } catch (const E& e) {
    return e;
  }
  FAIL("expected an exception");
  throw;
}
}  // namespace

TEST_SUITE("ingest") {

TEST_CASE("parse_csv basics") {
  const TimeSeries s = parse("year,gdp\n1,0.1027\n1000,0.1167\n", {"year", "gdp"});
  REQUIRE(s.size() == 2);
  CHECK(s.points()[0] == Observation{1.0, 0.1027});
  CHECK(s.points()[1] == Observation{1000.0, 0.1167});
}

TEST_CASE("parse_csv accepts unordered rows, extra columns, quotes, BOM, CRLF") {
  const TimeSeries s = parse(
      "\xEF\xBB\xBF" "region,\"year\",value\r\n"
      "\"World, total\",1500,0.25\r\n"
      "World,1,0.1\r\n"
      "\r\n"
      "World,1999.5, 3.5 \r\n");
  REQUIRE(s.size() == 3);
  CHECK(s.years() == std::vector<double>{1.0, 1500.0, 1999.5});
  CHECK(s.values() == std::vector<double>{0.1, 0.25, 3.5});
}

TEST_CASE("parse_csv errors") {
  const auto negative = capture<ValidationError>("year,value\n1,0.5\n1000,-1\n");
  CHECK(negative.line() == std::optional<std::size_t>(3));

  const auto dup = capture<ValidationError>("year,value\n1500,1\n1,2\n1500,3\n");
  CHECK(std::string(dup.what()).find("1500") != std::string::npos);
  CHECK(dup.line() == std::optional<std::size_t>(4));

  const auto bad = capture<ParseError>("year,value\n1,0.5\n2,abc\n");
  CHECK(bad.line() == std::optional<std::size_t>(3));

  const auto short_row = capture<ParseError>("year,value\n1\n");
  CHECK(short_row.line() == std::optional<std::size_t>(2));

  const auto missing = capture<ParseError>("yr,value\n1,2\n");
  CHECK(missing.line() == std::optional<std::size_t>(1));

  CHECK_THROWS_AS(parse(""), ParseError);
  CHECK_THROWS_AS(parse("year,value\n1,0\n"), ValidationError);
  CHECK_THROWS_AS(parse_csv_file("/nonexistent/file.csv"), ParseError);
}

TEST_CASE("write then parse round-trips to 12 significant digits") {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> lv(-8.0, 8.0), step(0.01, 300.0);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Observation> pts;
    double year = -500.0;
    for (int i = 0; i < 40; ++i) {
      year += step(rng);
      pts.push_back({year, std::pow(10.0, lv(rng))});
    }
    const TimeSeries s(pts);
    std::ostringstream out;
    write_csv(out, s);
    const TimeSeries back = parse(out.str());
    REQUIRE(back.size() == s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
      CHECK(back.points()[i].year == doctest::Approx(pts[i].year).epsilon(1e-11));
      CHECK(back.points()[i].value == doctest::Approx(pts[i].value).epsilon(1e-11));
    }
    // Formatting is idempotent after one pass.
    std::ostringstream again;
    write_csv(again, back);
    CHECK(again.str() == out.str());
  }
  CHECK(format_number(10.0) == "10");
  CHECK(format_number(0.1) == "0.1");
  CHECK(format_number(2045.4545454545454) == "2045.45454545");
}

TEST_CASE("derive_per_capita") {
  const TimeSeries one = derive_per_capita(TimeSeries({{2000, 6.0}}),
                                           TimeSeries({{2000, 6.0}}));
  CHECK(one.points() == std::vector<Observation>{{2000, 1.0}});

  const TimeSeries half = derive_per_capita(TimeSeries({{1000, 0.2}}),
                                            TimeSeries({{1000, 0.4}}));
  CHECK(half.points()[0].value == doctest::Approx(0.5));

  CHECK_THROWS_AS(derive_per_capita(TimeSeries({{1, 1.0}}), TimeSeries({{2, 1.0}})),
                  NoCommonYearsError);

  const TimeSeries gdp({{1, 0.1}, {1000, 0.12}, {1500, 0.25}, {1820, 0.7}},
                       "gdp", "billions of 1990 GK$");
  const TimeSeries pop({{1, 0.23}, {1500, 0.44}, {1820, 1.04}, {1900, 1.6}},
                       "pop", "billions");
  const Dataset d = make_dataset(gdp, pop, "test");
  CHECK(d.gdp_per_capita.years() == std::vector<double>{1, 1500, 1820});
  CHECK(d.gdp_per_capita.unit_label() == "(billions of 1990 GK$) / (billions)");
  for (const auto& p : d.gdp_per_capita.points()) {
    CHECK(p.value * *pop.value_at(p.year) ==
          doctest::Approx(*gdp.value_at(p.year)).epsilon(1e-12));
  }
}

TEST_CASE("synthesize") {
  const HyperbolicParams f(4.5, 2.2e-3);
  const auto grid = stepped_grid(0, 2000, 1);
  const TimeSeries exact = synthesize(f, grid);
  CHECK(exact.size() == 2001);
  const HyperbolicFit fit = fit_hyperbolic(exact);
  CHECK(fit.params.intercept() == doctest::Approx(4.5).epsilon(1e-10));
  CHECK(fit.params.slope() == doctest::Approx(2.2e-3).epsilon(1e-10));

  const TimeSeries a = synthesize(f, grid, {0.01}, 42);
  const TimeSeries b = synthesize(f, grid, {0.01}, 42);
  const TimeSeries c = synthesize(f, grid, {0.01}, 43);
  CHECK(a.points() == b.points());
  CHECK_FALSE(a.points() == c.points());
  CHECK(synthesize(f, grid, {}, 1).points() == synthesize(f, grid, {}, 2).points());

  CHECK_THROWS_AS(synthesize(f, std::vector<double>{2050.0}), DomainError);
  CHECK_THROWS_AS(synthesize(f, grid, {-0.1}), ValidationError);
}

TEST_CASE("time series invariants and helpers") {
  CHECK_THROWS_AS(TimeSeries({{1, 1.0}, {1, 2.0}}), ValidationError);
  CHECK_THROWS_AS(TimeSeries({{2, 1.0}, {1, 2.0}}), ValidationError);
  CHECK_THROWS_AS(TimeSeries({{1, 0.0}}), ValidationError);

  const TimeSeries s({{1, 1.0}, {1000, 2.0}, {1800, 3.0}, {2000, 4.0}, {2001, 5.0}});
  CHECK(s.window(1000, 2000).size() == 3);
  const std::vector<double> wanted{2000, 1};
  CHECK(s.subset(wanted).years() == std::vector<double>{1, 2000});
  const std::vector<double> absent{1, 1500, 1600};
  try {
    s.subset(absent);
    FAIL("expected MissingYearError");
  } catch (const MissingYearError& e) {
    const std::string msg = e.what();
    CHECK(msg.find("1500") != std::string::npos);
    CHECK(msg.find("1600") != std::string::npos);
  }

  CHECK(stepped_grid(0, 2000, 100).size() == 21);
  CHECK(stepped_grid(0, 2000, 100).back() == 2000.0);
  const auto even = evenly_spaced(5.0, 9.0, 5);
  CHECK(even == std::vector<double>{5, 6, 7, 8, 9});
}

}  // TEST_SUITE
