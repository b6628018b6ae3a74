#include <doctest.h>

#include <random>

#include "hypergrowth/errors.hpp"
#include "hypergrowth/ratio.hpp"
#include "support/oracles.hpp"

using namespace hypergrowth;
using hypergrowth::testing::central_difference;
using hypergrowth::testing::fd_step;

namespace {
const HyperbolicParams kF{4.5, 2.2e-3};
const HyperbolicParams kG{7.0, 3.35e-3};
const RatioModel kModel = make_ratio(kF, kG);
const RatioModel kSwapped = make_ratio(kG, kF);
const RatioModel kSame = make_ratio(kF, kF);

constexpr RatioPathway kPathways[] = {RatioPathway::direct,
                                      RatioPathway::hyperbolic_times_linear,
                                      RatioPathway::linear_over_linear};
}  // namespace

TEST_SUITE("ratio") {

TEST_CASE("modulation constant") {
  CHECK(kModel.modulation_constant() == doctest::Approx(3.25e-4).epsilon(1e-12));
  CHECK(kSame.modulation_constant() == 0.0);
  CHECK(kSwapped.modulation_constant() ==
        doctest::Approx(-3.25e-4).epsilon(1e-12));
}

TEST_CASE("sign of C follows the order of the singularities") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> a(0.1, 10.0), ts(1000.0, 3000.0);
  for (int i = 0; i < 1000; ++i) {
    const double af = a(rng), ag = a(rng);
    const HyperbolicParams f(af, af / ts(rng)), g(ag, ag / ts(rng));
    const RatioModel m(f, g);
    const double gap = g.singularity_time() - f.singularity_time();
    if (std::abs(gap) < 1e-6) continue;
    CHECK((m.modulation_constant() > 0.0) == (gap > 0.0));
  }
}

TEST_CASE("eval_ratio examples") {
  for (auto pathway : kPathways) {
    CAPTURE(to_string(pathway));
    CHECK(eval_ratio(kModel, 0.0, pathway) ==
          doctest::Approx(7.0 / 4.5).epsilon(1e-14));
    CHECK(eval_ratio(kSame, 1234.5, pathway) ==
          doctest::Approx(1.0).epsilon(1e-14));
    CHECK(eval_ratio(kModel, 1904.7619047619048, pathway) ==
          doctest::Approx(2.0).epsilon(1e-12));
    CHECK_THROWS_AS(eval_ratio(kModel, 2046.0, pathway), DomainError);
  }
}

TEST_CASE("ratio gradient and growth rate") {
  CHECK(ratio_gradient(kModel, 0.0) ==
        doctest::Approx(1.6049382716049383e-5).epsilon(1e-12));
  CHECK(ratio_gradient(kSame, 500.0) == 0.0);
  CHECK(ratio_gradient(kModel, 1900.0) > ratio_gradient(kModel, 1000.0));
  CHECK(ratio_growth_rate(kModel, 0.0) ==
        doctest::Approx(1.0317460317460317e-5).epsilon(1e-10));
  CHECK(ratio_growth_rate(kSame, 1500.0) == 0.0);
  CHECK_THROWS_AS(ratio_gradient(kModel, 2045.5), DomainError);
  CHECK_THROWS_AS(ratio_growth_rate(kModel, 2045.5), DomainError);
}

TEST_CASE("time_at_ratio") {
  CHECK(time_at_ratio(kModel, 2.0) ==
        doctest::Approx(1904.7619047619048).epsilon(1e-13));
  CHECK(std::abs(time_at_ratio(kModel, 7.0 / 4.5)) < 1e-9);
  // Root at ~2173.9, past t_s(f).
  CHECK_THROWS_AS(time_at_ratio(kModel, 1.0), NoSolutionError);
  // Asymptotic level k_g / k_f.
  CHECK_THROWS_AS(time_at_ratio(kModel, 3.35e-3 / 2.2e-3), NoSolutionError);
  CHECK_THROWS_AS(time_at_ratio(kSame, 1.0), NoSolutionError);
  CHECK_THROWS_AS(time_at_ratio(kModel, 0.0), NoSolutionError);
  CHECK_THROWS_AS(time_at_ratio(kModel, -2.0), NoSolutionError);
}

TEST_CASE("classify_shape") {
  CHECK(classify_shape(kModel) == RatioShape::escalating);
  CHECK(classify_shape(kSwapped) == RatioShape::diminishing);
  CHECK(classify_shape(kSame) == RatioShape::constant);
  CHECK(kModel.domain_end() == doctest::Approx(2045.4545454545454));
  CHECK(kSwapped.domain_end() == doctest::Approx(2045.4545454545454));
}

TEST_CASE("diminishing ratio decreases toward zero") {
  const double ts = kF.singularity_time();
  double prev = eval_ratio(kSwapped, -1000.0);
  for (double t = -990.0; t < ts - 0.05; t += 10.0) {
    const double v = eval_ratio(kSwapped, t);
    CHECK(v < prev);
    prev = v;
  }
  // Direct evaluation (mpmath): R(t_s - 1) / R(0) = 0.0226521313...
  CHECK(eval_ratio(kSwapped, ts - 1.0) / eval_ratio(kSwapped, 0.0) ==
        doctest::Approx(0.022652131326199383).epsilon(1e-9));
  CHECK(eval_ratio(kSwapped, ts - 0.1) < 0.01 * eval_ratio(kSwapped, 0.0));
  CHECK(eval_ratio(kSwapped, kSwapped.guard_time()) < 1e-7);
}

TEST_CASE("properties over random models") {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> a(0.05, 20.0), ts(1500.0, 2500.0),
      unit(0.0, 1.0);
  for (int trial = 0; trial < 2000; ++trial) {
    const double af = a(rng), ag = a(rng);
    const HyperbolicParams f(af, af / ts(rng)), g(ag, ag / ts(rng));
    const RatioModel m(f, g), inverse(g, f);
    const double end = m.domain_end();
    const double t = end - 1.0 - 2500.0 * unit(rng);
    CAPTURE(trial);

    const double direct = eval_ratio(m, t, RatioPathway::direct);
    for (auto pathway : kPathways) {
      CHECK(eval_ratio(m, t, pathway) == doctest::Approx(direct).epsilon(1e-12));
    }
    CHECK(eval_ratio(m, t) * eval_ratio(inverse, t) ==
          doctest::Approx(1.0).epsilon(1e-12));
    CHECK(ratio_growth_rate(m, t) * eval_ratio(m, t) ==
          doctest::Approx(ratio_gradient(m, t)).epsilon(1e-10));

    const double gap = std::abs(g.singularity_time() - f.singularity_time());
    if (gap > 10.0) {
      const double h = fd_step(end, t);
      const double fd = central_difference(
          [&](double x) { return eval_ratio(m, x); }, t, h);
      CHECK(ratio_gradient(m, t) == doctest::Approx(fd).epsilon(1e-6));
    }
    // Level round trip, away from the flat asymptote.
    if (gap > 10.0 && end - t < 1500.0) {
      CHECK(std::abs(time_at_ratio(m, eval_ratio(m, t)) - t) <= 1e-6);
    }
  }
}

TEST_CASE("escalating models increase monotonically on any grid") {
  const RatioModel m = kModel;
  double prev_v = eval_ratio(m, -3000.0), prev_g = ratio_gradient(m, -3000.0),
         prev_r = ratio_growth_rate(m, -3000.0);
  for (double t = -2999.0; t < 2045.0; t += 1.0) {
    const double v = eval_ratio(m, t), gr = ratio_gradient(m, t),
                 r = ratio_growth_rate(m, t);
    REQUIRE(v > prev_v);
    REQUIRE(gr > prev_g);
    REQUIRE(r > prev_r);
    prev_v = v;
    prev_g = gr;
    prev_r = r;
  }
}

}  // TEST_SUITE
