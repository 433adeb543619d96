#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "oracles.hpp"
#include "vbesov/errors.hpp"
#include "vbesov/index_calculus.hpp"

using namespace vbesov;

namespace {

std::vector<IndexNorm> sample_norms(std::size_t d) {
  std::vector<double> ramp(d);
  for (std::size_t i = 0; i < d; ++i) ramp[i] = 0.5 + 0.75 * i;
  return {IndexNorm::l1(d),
          IndexNorm::weighted_l1(ramp),
          IndexNorm::scaled_linf(1.0),
          IndexNorm::scaled_linf(2.5),
          IndexNorm::mix(0.25, IndexNorm::l1(d), IndexNorm::scaled_linf(1.0)),
          IndexNorm::mix(0.75, IndexNorm::l1(d), IndexNorm::scaled_linf(1.0)),
          IndexNorm::mix(0.5, IndexNorm::weighted_l1(ramp),
                         IndexNorm::mix(0.3, IndexNorm::l1(d), IndexNorm::scaled_linf(3.0)))};
}

LevelIndex add(const LevelIndex& a, const LevelIndex& b) {
  std::vector<int> s(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) s[i] = a[i] + b[i];
  return LevelIndex(s);
}

}  // namespace

TEST_CASE("delta_eval examples") {
  const auto l1 = IndexNorm::l1(2);
  CHECK(delta_eval(l1, {0, 0}) == 0.0);
  CHECK(delta_eval(l1, {2, 3}) == 5.0);

  // both operands by hand: |(2,3)|_1 = 5, max = 3
  const auto mixed = IndexNorm::mix(0.75, IndexNorm::l1(2), IndexNorm::scaled_linf(1.0));
  CHECK(delta_eval(mixed, {2, 3}) == doctest::Approx(0.25 * 5 + 0.75 * 3).epsilon(1e-15));
  CHECK(delta_eval(mixed, {2, 3}) == doctest::Approx(3.5));
}

TEST_CASE("delta_eval rejects dimension mismatch") {
  CHECK_THROWS_AS(delta_eval(IndexNorm::l1(2), {1, 2, 3}), DimensionError);
  CHECK_THROWS_AS(delta_eval(IndexNorm::mix(0.5, IndexNorm::l1(3), IndexNorm::scaled_linf(1)),
                             {1, 2}),
                  DimensionError);
  CHECK_THROWS_AS(IndexNorm::mix(0.5, IndexNorm::l1(2), IndexNorm::l1(3)), DimensionError);
}

TEST_CASE("constructors validate their parameters") {
  CHECK_THROWS_AS(IndexNorm::weighted_l1({1.0, -0.5}), std::invalid_argument);
  CHECK_THROWS_AS(IndexNorm::scaled_linf(-1.0), std::invalid_argument);
  CHECK_THROWS_AS(IndexNorm::mix(0.0, IndexNorm::l1(1), IndexNorm::l1(1)), std::invalid_argument);
  CHECK_THROWS_AS(IndexNorm::mix(1.0, IndexNorm::l1(1), IndexNorm::l1(1)), std::invalid_argument);
  CHECK_THROWS_AS(LevelIndex({1, -1}), std::invalid_argument);
}

TEST_CASE("check_smoothness_bound") {
  CHECK(check_smoothness_bound(IndexNorm::l1(2), 2, 4, 2));
  CHECK_FALSE(check_smoothness_bound(IndexNorm::weighted_l1({3, 3}), 2, 4, 2));
  // equality delta(e_i) = L |e_i|_1 at the unit vectors violates strictness
  CHECK_FALSE(check_smoothness_bound(IndexNorm::scaled_linf(1.0), 1, 4, 2));
  CHECK(check_smoothness_bound(IndexNorm::scaled_linf(1.0), 2, 4, 2));
  CHECK_THROWS_AS(check_smoothness_bound(IndexNorm::l1(2), 2, 0, 2), std::invalid_argument);
}

TEST_CASE("check_smoothness_bound agrees with enumeration on the simplex") {
  // the supremum of delta(j)/|j|_1 is attained at unit vectors (radius 1)
  for (std::size_t d = 1; d <= 3; ++d) {
    for (const auto& norm : sample_norms(d)) {
      for (int L = 1; L <= 4; ++L) {
        bool expected = true;
        for (const auto& j : levels_in_box(d, 6)) {
          if (j.l1() > 0 && !(norm(j) < L * j.l1())) expected = false;
        }
        CHECK(check_smoothness_bound(norm, L, 1, d) == expected);
        CHECK(check_smoothness_bound(norm, L, 4, d) == expected);
      }
    }
  }
}

TEST_CASE("norm axioms on |j|_inf <= 4, d <= 3") {
  for (std::size_t d = 1; d <= 3; ++d) {
    const auto box = levels_in_box(d, 4);
    for (const auto& norm : sample_norms(d)) {
      CHECK(norm(LevelIndex::zero(d)) == 0.0);
      for (const auto& j : box) {
        CHECK(norm(j) >= 0.0);
        for (int c = 0; c <= 3; ++c) {
          std::vector<int> scaled(d);
          for (std::size_t i = 0; i < d; ++i) scaled[i] = c * j[i];
          CHECK(norm(LevelIndex(scaled)) == doctest::Approx(c * norm(j)).epsilon(1e-12));
        }
        for (const auto& k : box) {
          CHECK(norm(add(j, k)) <= norm(j) + norm(k) + 1e-12);
          bool le = true;
          for (std::size_t i = 0; i < d; ++i) le = le && j[i] <= k[i];
          if (le) CHECK(norm(j) <= norm(k) + 1e-12);
        }
      }
    }
  }
}

TEST_CASE("positive definiteness for strictly positive parameters") {
  for (std::size_t d = 1; d <= 3; ++d) {
    for (const auto& norm : {IndexNorm::l1(d), IndexNorm::scaled_linf(0.5)}) {
      for (const auto& j : levels_in_box(d, 3)) CHECK((norm(j) == 0.0) == (j.l1() == 0));
    }
  }
}

TEST_CASE("mix is the convex combination of its operands") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> theta(0.01, 0.99);
  for (int trial = 0; trial < 20; ++trial) {
    const double t = theta(rng);
    const auto a = IndexNorm::weighted_l1({1.0, 2.0, 0.5});
    const auto b = IndexNorm::scaled_linf(1.5);
    const auto m = IndexNorm::mix(t, a, b);
    for (const auto& j : levels_in_box(3, 3))
      CHECK(m(j) == doctest::Approx((1 - t) * a(j) + t * b(j)).epsilon(1e-14));
  }
}

TEST_CASE("integer extension keeps the triangle inequality on Z^d") {
  for (const auto& norm : sample_norms(2)) {
    for (int a = -3; a <= 3; ++a)
      for (int b = -3; b <= 3; ++b)
        for (int c = -3; c <= 3; ++c)
          for (int e = -3; e <= 3; ++e) {
            const double lhs = oracle::delta_on_integers(norm, {a + c, b + e});
            CHECK(lhs <= oracle::delta_on_integers(norm, {a, b}) +
                             oracle::delta_on_integers(norm, {c, e}) + 1e-12);
          }
  }
}

TEST_CASE("level enumeration") {
  CHECK(levels_in_box(2, 2).size() == 9);
  CHECK(levels_in_box(3, 1).size() == 8);
  const auto shell = levels_in_shell(3, 2, 2);
  CHECK(shell.size() == 6);
  for (const auto& j : shell) CHECK(j.l1() == 2);
  CHECK(levels_in_shell(2, 3, 1).empty());
  CHECK(levels_in_shell(2, 3, 2).size() == 2);
  CHECK(std::is_sorted(shell.begin(), shell.end()));
}

TEST_CASE("json encoding") {
  const auto norm = IndexNorm::mix(0.75, IndexNorm::weighted_l1({1, 1}), IndexNorm::scaled_linf(1));
  const auto j = to_json(norm);
  CHECK(j.at("type") == "mix");
  CHECK(j.at("first").at("type") == "weighted_l1");
  CHECK(j.at("second").at("s") == 1.0);
  const auto back = index_norm_from_json(j);
  CHECK(to_json(back) == j);
  for (const auto& lvl : levels_in_box(2, 3)) CHECK(back(lvl) == norm(lvl));

  CHECK_THROWS_AS(index_norm_from_json(nlohmann::json::parse(R"({"type":"l7"})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(index_norm_from_json(nlohmann::json::parse(R"({"type":"scaled_linf"})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(index_norm_from_json(nlohmann::json::parse("[1,2]")), std::invalid_argument);
}
