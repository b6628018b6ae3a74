#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "hypergrowth/errors.hpp"
#include "hypergrowth/fitting.hpp"
#include "hypergrowth/ingest.hpp"
#include "hypergrowth/least_squares.hpp"
#include "hypergrowth/random.hpp"
#include "support/oracles.hpp"

using namespace hypergrowth;
using hypergrowth::testing::normal_equations_line;

namespace {
const HyperbolicParams kF{4.5, 2.2e-3};
const HyperbolicParams kG{7.0, 3.35e-3};
const std::vector<double> kYears{0, 500, 1000, 1500, 1900, 2000};
}  // namespace

TEST_SUITE("fitting") {

TEST_CASE("fit_line agrees with extended-precision normal equations") {
  std::mt19937_64 rng(3);
  std::normal_distribution<double> noise(0.0, 0.05);
  std::uniform_real_distribution<double> wdist(0.1, 10.0);
  std::vector<double> t, z, w;
  for (int i = 0; i < 40; ++i) {
    t.push_back(25.0 * i);
    z.push_back(3.0 - 1e-3 * t.back() + noise(rng));
    w.push_back(wdist(rng));
  }
  for (bool weighted : {false, true}) {
    const std::span<const double> ws = weighted ? std::span<const double>(w)
                                                : std::span<const double>();
    const LineFit fit = fit_line(t, z, ws);
    const auto oracle = normal_equations_line(t, z, ws);
    CHECK(fit.intercept == doctest::Approx(double(oracle.intercept)).epsilon(1e-12));
    CHECK(fit.slope == doctest::Approx(double(oracle.slope)).epsilon(1e-11));
    CHECK(fit.sse == doctest::Approx(double(hypergrowth::testing::line_sse(t, z, ws)))
                         .epsilon(1e-9));
  }
  CHECK_THROWS_AS(fit_line(std::vector<double>{1.0}, std::vector<double>{1.0}),
                  InsufficientDataError);
  CHECK_THROWS_AS(fit_line(std::vector<double>{1.0, 1.0},
                           std::vector<double>{1.0, 2.0}),
                  ValidationError);
}

TEST_CASE("exact recovery from noiseless samples") {
  const TimeSeries s = synthesize(kF, kYears);
  for (Weighting w : {Weighting::unweighted, Weighting::size_squared}) {
    CAPTURE(to_string(w));
    const HyperbolicFit fit = fit_hyperbolic(s, w);
    CHECK(fit.params.intercept() == doctest::Approx(4.5).epsilon(1e-10));
    CHECK(fit.params.slope() == doctest::Approx(2.2e-3).epsilon(1e-10));
    CHECK(fit.singularity_time == fit.params.intercept() / fit.params.slope());
    CHECK(fit.rmse_reciprocal < 1e-14);
    CHECK(fit.r_squared_reciprocal == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(fit.n_points == 6);
    CHECK(fit.weighting == w);
  }
}

TEST_CASE("unweighted residuals sum to zero") {
  std::mt19937_64 rng(11);
  std::normal_distribution<double> eps(0.0, 0.03);
  std::vector<Observation> pts;
  for (double t = 0; t <= 1900; t += 100) {
    pts.push_back({t, eval_hyperbolic(kF, t) * std::exp(eps(rng))});
  }
  const TimeSeries s(pts);
  const HyperbolicFit fit = fit_hyperbolic(s);
  double sum = 0.0, max_z = 0.0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    sum += fit.residuals[i];
    max_z = std::max(max_z, 1.0 / pts[i].value);
  }
  CHECK(std::abs(sum) <= 1e-9 * max_z);
  CHECK(fit.r_squared_reciprocal > 0.9);
  CHECK(fit.r_squared_reciprocal <= 1.0);
}

TEST_CASE("weighted fit matches the extended-precision oracle on noisy data") {
  std::mt19937_64 rng(5);
  std::normal_distribution<double> eps(0.0, 0.02);
  std::vector<Observation> pts;
  std::vector<double> t, z, w;
  for (double year = 0; year <= 2000; year += 80) {
    const double y = eval_hyperbolic(kF, year) * std::exp(eps(rng));
    pts.push_back({year, y});
    t.push_back(year);
    z.push_back(1.0 / y);
    w.push_back(y * y);
  }
  const HyperbolicFit fit = fit_hyperbolic(TimeSeries(pts), Weighting::size_squared);
  const auto oracle = normal_equations_line(t, z, w);
  CHECK(fit.params.intercept() == doctest::Approx(double(oracle.intercept)).epsilon(1e-10));
  CHECK(fit.params.slope() == doctest::Approx(double(-oracle.slope)).epsilon(1e-10));
}

TEST_CASE("fit errors") {
  CHECK_THROWS_AS(fit_hyperbolic(TimeSeries({{0, 1.0}, {1, 2.0}})),
                  InsufficientDataError);
  // Decreasing values: reciprocal slope positive.
  CHECK_THROWS_AS(fit_hyperbolic(TimeSeries({{0, 3.0}, {1, 2.0}, {2, 1.0}})),
                  FitRejectedError);
  // Exponential-type growth whose reciprocal line has a negative intercept at
  // t = 0 once the series starts far from the origin.
  CHECK_THROWS_AS(
      fit_hyperbolic(TimeSeries({{-3000, 1.0}, {-2000, 2.0}, {-1000, 4.0}})),
      FitRejectedError);
}

TEST_CASE("predict") {
  const HyperbolicFit fit = fit_hyperbolic(synthesize(kF, kYears));
  const std::vector<double> grid{2000.0};
  const TimeSeries p = predict(fit, grid);
  REQUIRE(p.size() == 1);
  CHECK(p.points()[0].value == doctest::Approx(10.0).epsilon(1e-8));
  CHECK(predict(fit, std::vector<double>{}).empty());
  CHECK_THROWS_AS(predict(fit, std::vector<double>{2000.0, 2046.0}), DomainError);
}

TEST_CASE("fit_ratio") {
  const auto grid = stepped_grid(0, 2000, 100);
  const TimeSeries f = synthesize(kF, grid, {}, 0, "f");
  const TimeSeries g = synthesize(kG, grid, {}, 0, "g");

  const RatioFit r = fit_ratio(f, g);
  CHECK(r.model.modulation_constant() == doctest::Approx(3.25e-4).epsilon(1e-8));
  CHECK(r.model.shape() == RatioShape::escalating);
  CHECK(r.per_capita.size() == grid.size());
  for (const auto& row : r.per_capita) {
    CHECK(std::abs(row.residual) <= 1e-9 * row.observed);
  }

  CHECK(fit_ratio(f, f).model.shape() == RatioShape::constant);

  const TimeSeries few({{0, eval_hyperbolic(kG, 0)}, {100, eval_hyperbolic(kG, 100)},
                        {150, eval_hyperbolic(kG, 150)}, {250, eval_hyperbolic(kG, 250)}});
  CHECK_THROWS_AS(fit_ratio(f, few), YearMismatchError);
}

TEST_CASE("fit_ratio lists common years past the fitted guard") {
  // GDP-like numerator with an early singularity, data running past it.
  const HyperbolicParams gdp(1.716e-2, 8.671e-6);
  const HyperbolicParams pop(8.724, 4.267e-3);
  auto grid = stepped_grid(1000, 1970, 10);
  TimeSeries num = synthesize(gdp, grid);
  TimeSeries den = synthesize(pop, grid);
  std::vector<Observation> num_pts = num.points(), den_pts = den.points();
  num_pts.push_back({1990, 1e5});
  den_pts.push_back({1990, 5.3});
  // A tiny reciprocal at 1990 barely moves the fit.
  const RatioFit r = fit_ratio(TimeSeries(num_pts), TimeSeries(den_pts));
  CHECK(r.model.shape() == RatioShape::escalating);
  CHECK(r.out_of_domain_years == std::vector<double>{1990.0});
  CHECK(r.numerator.singularity_time == doctest::Approx(1979.0).epsilon(1e-3));
}

TEST_CASE("noise consistency of the singularity estimate") {
  // 1000 trials, 20 points on [0, 2000], 1% multiplicative noise.
  const auto grid = evenly_spaced(0.0, 2000.0, 20);
  const double truth = kF.singularity_time();
  for (Weighting w : {Weighting::unweighted, Weighting::size_squared}) {
    int within = 0;
    for (std::uint64_t trial = 0; trial < 1000; ++trial) {
      const TimeSeries s = synthesize(kF, grid, {0.01}, derive_seed(99, trial));
      const double ts = fit_hyperbolic(s, w).singularity_time;
      if (std::abs(ts - truth) <= 0.02 * truth) ++within;
    }
    CAPTURE(to_string(w));
    CHECK(within >= 950);
  }
}

TEST_CASE("weighting names") {
  CHECK(weighting_from_string("size_squared") == Weighting::size_squared);
  CHECK(weighting_from_string(to_string(Weighting::unweighted)) ==
        Weighting::unweighted);
  CHECK_THROWS_AS(weighting_from_string("log"), ValidationError);
}

}  // TEST_SUITE
