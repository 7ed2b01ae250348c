#include <doctest.h>

#include "generators.hpp"
#include "lpalie/linalg.hpp"
#include "oracles.hpp"

using namespace lpalie;

namespace {

std::vector<IntVector> random_vectors(testing::Rng& rng, std::size_t k, std::size_t n, long lo, long hi) {
  const IntMatrix m = testing::random_matrix(rng, k, n, lo, hi);
  std::vector<IntVector> out;
  for (std::size_t i = 0; i < k; ++i) out.push_back(m.row(i));
  return out;
}

ScalarVector combine(const std::vector<IntVector>& vs, const ScalarVector& c, const FieldSpec& f, std::size_t n) {
  ScalarVector out(n, Scalar::zero(f));
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = 0; j < n; ++j) out[j] += c[i] * Scalar(f, vs[i][j]);
  }
  return out;
}

}  // namespace

TEST_CASE("span membership small cases") {
  const auto q = FieldSpec::rationals();
  const std::vector<IntVector> b{{2}};
  auto c = span_membership(std::span<const IntVector>(b), IntVector{1}, q);
  REQUIRE(c);
  CHECK((*c)[0] == Scalar::from_rational(q, Rational(1, 2)));
  CHECK_FALSE(span_membership(std::span<const IntVector>(b), IntVector{1}, FieldSpec::prime(2)));

  const std::vector<IntVector> none;
  CHECK(span_membership(std::span<const IntVector>(none), IntVector{0, 0}, q));
  CHECK_FALSE(span_membership(std::span<const IntVector>(none), IntVector{0, 1}, q));

  const std::vector<IntVector> bad{{1, 2}};
  CHECK_THROWS_AS(span_membership(std::span<const IntVector>(bad), IntVector{1}, q), std::invalid_argument);
}

TEST_CASE("span membership agrees with enumeration over GF(p)") {
  testing::Rng rng(21);
  for (std::uint64_t p : {2, 3, 5}) {
    const auto f = FieldSpec::prime(p);
    for (int trial = 0; trial < 150; ++trial) {
      const std::size_t k = 1 + trial % 5;
      const std::size_t n = 1 + (trial / 5) % 5;
      const auto vs = random_vectors(rng, k, n, -4, 4);
      const IntVector target = testing::random_matrix(rng, 1, n, -4, 4).row(0);
      const auto c = span_membership(std::span<const IntVector>(vs), target, f);
      CHECK(c.has_value() == testing::oracle::gf_span_contains(vs, target, p));
      if (c) CHECK(combine(vs, *c, f, n) == to_field(target, f));
      std::vector<IntVector> aug = vs;
      aug.push_back(target);
      const std::size_t r = span_rank(std::span<const IntVector>(vs), n, f);
      CHECK((span_rank(std::span<const IntVector>(aug), n, f) == r) == c.has_value());
    }
  }
}

TEST_CASE("span membership agrees with the rank oracle over Q") {
  testing::Rng rng(22);
  const auto q = FieldSpec::rationals();
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t k = 1 + trial % 6;
    const std::size_t n = 1 + (trial / 6) % 6;
    const auto vs = random_vectors(rng, k, n, -3, 3);
    const IntVector target = testing::random_matrix(rng, 1, n, -3, 3).row(0);
    const auto c = span_membership(std::span<const IntVector>(vs), target, q);
    CHECK(c.has_value() == testing::oracle::rational_span_contains(vs, target));
    if (c) CHECK(combine(vs, *c, q, n) == to_field(target, q));
    CHECK(span_rank(std::span<const IntVector>(vs), n, q) == testing::oracle::rational_rank(vs));
  }
}

TEST_CASE("exclusion functional certifies non-membership") {
  testing::Rng rng(23);
  for (std::uint64_t c : {0, 2, 3, 7}) {
    const auto f = FieldSpec::of_characteristic(c);
    for (int trial = 0; trial < 100; ++trial) {
      const std::size_t n = 2 + trial % 4;
      const auto vs = random_vectors(rng, n - 1, n, -3, 3);
      std::vector<ScalarVector> sv;
      for (const auto& v : vs) sv.push_back(to_field(v, f));
      const ScalarVector target = to_field(testing::random_matrix(rng, 1, n, -3, 3).row(0), f);
      const auto member = span_membership(std::span<const ScalarVector>(sv), target, f);
      const auto y = exclusion_functional(std::span<const ScalarVector>(sv), target, f);
      CHECK(member.has_value() != y.has_value());
      if (y) {
        for (const auto& v : sv) CHECK(dot(*y, v, f).is_zero());
        CHECK(dot(*y, target, f).is_one());
      }
    }
  }
}
