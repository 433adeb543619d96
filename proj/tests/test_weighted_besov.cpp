#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <random>

#include "vbesov/errors.hpp"
#include "vbesov/weighted_besov.hpp"

using namespace vbesov;

namespace {

double gk_interval(double b, double lo, double hi) {
  auto f = [b](double x) { return std::exp(b * std::abs(x)); };
  // integrand has a kink at 0; split there
  if (lo < 0.0 && hi > 0.0)
    return boost::math::quadrature::gauss_kronrod<double, 31>::integrate(f, lo, 0.0, 6, 1e-13) +
           boost::math::quadrature::gauss_kronrod<double, 31>::integrate(f, 0.0, hi, 6, 1e-13);
  return boost::math::quadrature::gauss_kronrod<double, 31>::integrate(f, lo, hi, 6, 1e-13);
}

double gk_box(double b, const LevelIndex& j, const TranslationIndex& m) {
  double prod = 1.0;
  for (std::size_t i = 0; i < j.dim(); ++i) {
    const double h = std::ldexp(1.0, -j[i]);
    prod *= gk_interval(b, m[i] * h, (m[i] + 1) * h);
  }
  return prod;
}

// term-by-term evaluation of the sequence quasinorm with quadrature weights
double direct_quasinorm(const CoefficientField& c, double p, double q, const IndexNorm& delta, double b) {
  double outer = 0.0;
  for (const auto& [j, row] : c.levels()) {
    double inner = 0.0;
    for (const auto& [m, lambda] : row)
      inner += std::pow(std::abs(lambda), p) * std::pow(2.0, p * j.l1() / 2.0) * gk_box(b, j, m);
    outer += std::pow(2.0, q * delta(j)) * std::pow(inner, q / p);
  }
  return std::pow(outer, 1.0 / q);
}

CoefficientField random_field(std::mt19937& rng, std::size_t dim, int n) {
  std::uniform_int_distribution<int> lv(0, 3), sh(-6, 6);
  std::uniform_real_distribution<double> val(-2.0, 2.0);
  CoefficientField c(dim);
  for (int k = 0; k < n; ++k) {
    std::vector<int> j(dim), m(dim);
    for (std::size_t i = 0; i < dim; ++i) {
      j[i] = lv(rng);
      m[i] = sh(rng);
    }
    c.set(LevelIndex(j), TranslationIndex(m), val(rng));
  }
  return c;
}

BesovParams params(double p, double q, IndexNorm delta, double b) {
  BesovParams out;
  out.p = p;
  out.q = q;
  out.delta = std::move(delta);
  out.weight = ExponentialWeight(b);
  out.L = 2;
  return out;
}

}  // namespace

TEST_CASE("dyadic boxes") {
  const DyadicBox box({1, 3}, {-3, 5});
  CHECK(box.lower(0) == -1.5);
  CHECK(box.upper(0) == -1.0);
  CHECK(box.lower(1) == 0.625);
  CHECK(box.upper(1) == 0.75);
  CHECK(box.volume() == 1.0 / 16.0);
  CHECK_THROWS_AS(DyadicBox({1, 2}, {0}), DimensionError);
}

TEST_CASE("exponential weight") {
  const ExponentialWeight w(0.5);
  const std::vector<double> x = {1.0, -3.0};
  CHECK(w(x) == doctest::Approx(std::exp(2.0)).epsilon(1e-15));
  CHECK(w.growth_constant() == 0.5);
  CHECK_THROWS_AS(ExponentialWeight(-1.0), std::invalid_argument);
}

TEST_CASE("weight_measure examples") {
  const ExponentialWeight flat(0.0);
  CHECK(weight_measure(flat, DyadicBox({2, 1, 0}, {5, -3, 7})) == std::ldexp(1.0, -3));
  const ExponentialWeight unit(1.0);
  CHECK(weight_measure(unit, DyadicBox({0}, {0})) == doctest::Approx(std::exp(1.0) - 1.0).epsilon(1e-15));
  CHECK(weight_measure(unit, DyadicBox({0}, {-1})) == doctest::Approx(std::exp(1.0) - 1.0).epsilon(1e-15));
  CHECK(std::abs(weight_measure(unit, DyadicBox({0}, {-1})) - gk_interval(1.0, -1.0, 0.0)) < 1e-10);
  // straddling interval handled directly as well
  CHECK(interval_weight(1.0, -1.0, 1.0) == doctest::Approx(2.0 * (std::exp(1.0) - 1.0)).epsilon(1e-15));
}

TEST_CASE("weight_measure matches adaptive quadrature") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> lv(0, 4), sh(-8, 8);
  for (double b : {0.0, 0.5, 1.0, 2.0, 4.0}) {
    for (std::size_t d = 1; d <= 3; ++d) {
      for (int trial = 0; trial < 20; ++trial) {
        std::vector<int> j(d), m(d);
        for (std::size_t i = 0; i < d; ++i) {
          j[i] = lv(rng);
          m[i] = sh(rng);
        }
        const double exact = weight_measure(ExponentialWeight(b), DyadicBox(LevelIndex(j), TranslationIndex(m)));
        const double numeric = gk_box(b, LevelIndex(j), TranslationIndex(m));
        CAPTURE(b);
        CHECK(std::abs(exact - numeric) <= 1e-10 * numeric);
      }
    }
  }
}

TEST_CASE("quasinorm examples") {
  CHECK(sequence_quasinorm(CoefficientField(2), params(2, 2, IndexNorm::l1(2), 0.0)) == 0.0);

  CoefficientField single(2);
  single.set({0, 0}, {0, 0}, 1.0);
  for (const auto& delta : {IndexNorm::l1(2), IndexNorm::scaled_linf(1.5), IndexNorm::weighted_l1({0.3, 0.7})})
    CHECK(sequence_quasinorm(single, params(2, 2, delta, 0.0)) == doctest::Approx(1.0).epsilon(1e-15));

  CoefficientField two(2);
  two.set({0, 0}, {0, 0}, 1.0);
  two.set({1, 0}, {0, 0}, 1.0);
  CHECK(std::abs(sequence_quasinorm(two, params(1, 1, IndexNorm::l1(2), 0.0)) - (1.0 + std::sqrt(2.0))) < 1e-12);
}

TEST_CASE("quasinorm agrees with a term-by-term evaluation") {
  std::mt19937 rng(19);
  for (std::size_t d = 1; d <= 3; ++d) {
    const auto c = random_field(rng, d, 40);
    const auto delta = IndexNorm::mix(0.5, IndexNorm::l1(d), IndexNorm::scaled_linf(1.0));
    for (double p : {1.0, 2.0, 3.5})
      for (double q : {1.0, 2.0, 5.0})
        for (double b : {0.0, 1.0}) {
          const double ours = sequence_quasinorm(c, params(p, q, delta, b));
          CHECK(ours == doctest::Approx(direct_quasinorm(c, p, q, delta, b)).epsilon(1e-9));
        }
  }
}

TEST_CASE("infinite exponents") {
  CoefficientField c(1);
  c.set({0}, {0}, 3.0);
  c.set({2}, {1}, -1.0);
  c.set({2}, {-4}, 0.5);
  // p = inf: per level sup |lambda| 2^{k/2}, weight drops out
  const double l0 = 3.0, l2 = 1.0 * 2.0;
  const auto zero = IndexNorm::zero(1);
  CHECK(sequence_quasinorm(c, params(kInfinity, 1, zero, 3.0)) == doctest::Approx(l0 + l2));
  CHECK(sequence_quasinorm(c, params(kInfinity, kInfinity, zero, 0.0)) == doctest::Approx(3.0));
  CHECK(sequence_quasinorm(c, params(kInfinity, kInfinity, IndexNorm::l1(1), 0.0)) ==
        doctest::Approx(std::max(l0, 4.0 * l2)));
  // q = inf: sup over levels of 2^{delta} S^{1/p}
  const double s2 = std::sqrt((1.0 + 0.25) * 4.0 * 0.25);
  CHECK(sequence_quasinorm(c, params(2, kInfinity, IndexNorm::l1(1), 0.0)) ==
        doctest::Approx(std::max(3.0, 4.0 * s2)));
}

TEST_CASE("invalid exponents") {
  CoefficientField c(1);
  c.set({0}, {0}, 1.0);
  CHECK_THROWS_AS(sequence_quasinorm(c, params(0.5, 1, IndexNorm::l1(1), 0.0)), std::invalid_argument);
  CHECK_THROWS_AS(sequence_quasinorm(c, params(1, 0.9, IndexNorm::l1(1), 0.0)), std::invalid_argument);
  CHECK_THROWS_AS(validate(params(1, 1, IndexNorm::weighted_l1({3.0}), 0.0), 1), std::invalid_argument);
  auto bad_l = params(1, 1, IndexNorm::l1(1), 0.0);
  bad_l.L = 0;
  CHECK_THROWS_AS(validate(bad_l, 1), std::invalid_argument);
  CHECK(validate(params(2, 2, IndexNorm::l1(2), 1.0), 2).empty());
  CHECK_FALSE(validate(params(2, 2, IndexNorm::l1(2), 1.0), 2, 0.5).empty());
}

TEST_CASE("quasinorm laws on random fields") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t d = 1 + trial % 3;
    const auto c = random_field(rng, d, 25);
    const double p = 1.0 + (trial % 4), q = 1.0 + (trial % 3) * 1.5;
    const double b = 0.5 * (trial % 5);
    const auto small = IndexNorm::scaled_linf(1.0);
    const auto large = IndexNorm::l1(d);
    const double base = sequence_quasinorm(c, params(p, q, large, b));

    // homogeneity
    for (double s : {0.0, 0.25, 3.0}) {
      CoefficientField scaled(d);
      c.for_each([&](const LevelIndex& j, const TranslationIndex& m, double l) { scaled.set(j, m, s * l); });
      CHECK(std::abs(sequence_quasinorm(scaled, params(p, q, large, b)) - s * base) <= 1e-13 * s * base);
    }
    // removing an entry
    CoefficientField fewer = c;
    const auto& [j0, row] = *c.levels().begin();
    fewer.erase(j0, row.begin()->first);
    CHECK(sequence_quasinorm(fewer, params(p, q, large, b)) <= base);
    // monotone in delta (l_inf <= l1) and in the weight rate
    CHECK(sequence_quasinorm(c, params(p, q, small, b)) <= base);
    CHECK(sequence_quasinorm(c, params(p, q, large, b + 0.5)) >= base);
  }
}

TEST_CASE("lpw_error examples") {
  Function zero = [](std::span<const double>) { return 0.0; };
  Function one = [](std::span<const double>) { return 1.0; };
  Function bump = [](std::span<const double> x) { return std::exp(-std::abs(x[0])); };
  Function smooth = [](std::span<const double> x) { return std::sin(x[0]) * std::cos(x[1]); };
  CHECK(lpw_error(smooth, smooth, 2, 2.0, ExponentialWeight(1.0), 2.0, 33) == 0.0);
  CHECK(lpw_error(one, zero, 1, 1.0, ExponentialWeight(0.0), 1.0, 65) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(lpw_error(bump, zero, 1, 1.0, ExponentialWeight(1.0), 8.0, 257) == doctest::Approx(16.0).epsilon(1e-12));
  CHECK(lpw_error(bump, zero, 1, kInfinity, ExponentialWeight(1.0), 8.0, 257) == doctest::Approx(1.0));
  // p = 2, d = 2: ||1||_{L^2_w}^2 over [-1,1]^2 with b = 1 is (2(e - 1))^2
  const double exact = 2.0 * (std::exp(1.0) - 1.0);
  CHECK(lpw_error(one, zero, 2, 2.0, ExponentialWeight(1.0), 1.0, 801) == doctest::Approx(exact).epsilon(1e-5));
  CHECK_THROWS_AS(lpw_error(one, zero, 1, 1.0, ExponentialWeight(0.0), 1.0, 4), std::invalid_argument);
}
