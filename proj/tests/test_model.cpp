// Copyright 2026 the barter developers. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#include <cmath>

#include <doctest.h>

#include "barter/errors.hpp"
#include "barter/model.hpp"
#include "barter/rng.hpp"

using namespace barter;

namespace {
Agent simple_agent(double alpha = 0.04, double beta = 0.1, double gamma = 0.5) {
  return Agent{7, {0.0}, {0.0}, alpha, beta, gamma};
}
}  // namespace

TEST_CASE("distance is plain Euclidean") {
  CHECK(distance({1.0, 1.0}, {2.0, 3.0}) == doctest::Approx(2.2360679774997896).epsilon(1e-14));
  CHECK(distance({3.0}, {3.0}) == 0.0);
  CHECK(distance({0.0, 0.0, 0.0}, {2.0, 3.0, 6.0}) == doctest::Approx(7.0).epsilon(1e-14));
  CHECK_THROWS_AS(distance({1.0}, {1.0, 2.0}), ValidationError);
}

TEST_CASE("satisfaction follows the exponential falloff") {
  const Agent a = simple_agent(0.04);
  // alpha = 0.04 at distance 5: exactly one decay unit, ~37%.
  CHECK(satisfaction(a, {5.0}) == doctest::Approx(std::exp(-1.0)).epsilon(1e-14));
  CHECK(satisfaction(a, {0.0}) == 1.0);  // offer on the demand point, exact

  // Strictly decreasing in distance, always within (0, 1].
  double prev = 2.0;
  for (double d = 0.0; d <= 40.0; d += 0.5) {
    const double s = satisfaction(a, {d});
    CHECK(s > 0.0);
    CHECK(s <= 1.0);
    CHECK(s < prev);
    prev = s;
  }
}

TEST_CASE("satisfaction matches exp(-alpha d^2) across random draws") {
  SubStream rng(derive_seed(2026, 1));
  for (int i = 0; i < 200; ++i) {
    const double alpha = rng.uniform_in(0.01, 3.0);
    const double d = rng.uniform_in(0.0, 6.0);
    const Agent a = simple_agent(alpha);
    CHECK(satisfaction(a, {d}) == doctest::Approx(std::exp(-alpha * d * d)).epsilon(1e-12));
  }
}

TEST_CASE("reservation decays exactly one gamma factor per failure") {
  const Agent a = simple_agent(0.04, 0.1, 0.5);
  CHECK(reservation(a, {a.id, 0}) == 0.1);
  CHECK(reservation(a, {a.id, 2}) == 0.025);  // 0.1 * 0.5^2, exact in binary

  const Agent b = simple_agent(1.0, 0.9, 0.9);
  CHECK(reservation(b, {b.id, 10}) == doctest::Approx(0.31381059609).epsilon(1e-12));

  // The recurrence holds bit-exactly, not just approximately.
  SubStream rng(derive_seed(2026, 2));
  for (int i = 0; i < 50; ++i) {
    const Agent c = simple_agent(1.0, rng.uniform_in(0.01, 0.99), rng.uniform_in(0.01, 0.99));
    for (int m = 0; m < 60; ++m)
      CHECK(reservation(c, {c.id, m + 1}) == c.gamma * reservation(c, {c.id, m}));
  }

  CHECK_THROWS_AS(reservation(a, {a.id, -1}), ValidationError);
}

TEST_CASE("reservation radius inverts the satisfaction curve") {
  const Agent a = simple_agent(0.04, 0.1, 0.5);
  // Where the alpha = 0.04 curve crosses the beta = 0.1 line: between 7 and 8.
  CHECK(reservation_radius(a, {a.id, 0}) ==
        doctest::Approx(std::sqrt(std::log(10.0) / 0.04)).epsilon(1e-14));

  const Agent b = simple_agent(1.0, 0.1, 0.5);
  CHECK(reservation_radius(b, {b.id, 3}) ==
        doctest::Approx(std::sqrt(std::log(80.0))).epsilon(1e-14));

  // An offer exactly on the radius reproduces the reservation level.
  SubStream rng(derive_seed(2026, 3));
  for (int i = 0; i < 100; ++i) {
    const Agent c = simple_agent(rng.uniform_in(0.02, 2.0), rng.uniform_in(0.01, 0.9),
                                 rng.uniform_in(0.1, 0.9));
    const FrustrationState fs{c.id, static_cast<int>(rng.uniform_index(6))};
    const double r = reservation_radius(c, fs);
    CHECK(satisfaction(c, {r}) == doctest::Approx(reservation(c, fs)).epsilon(1e-12));
  }
}

TEST_CASE("acceptable is a strict comparison") {
  const Agent a = simple_agent(0.04, 0.1, 0.5);
  const FrustrationState fresh{a.id, 0};
  const double r = reservation_radius(a, fresh);
  CHECK(acceptable(a, {r * 0.999}, fresh));
  CHECK_FALSE(acceptable(a, {r * 1.001}, fresh));
  // Exactly at the reservation level: not acceptable.
  const Agent ident = simple_agent(0.04, 0.5, 0.5);
  CHECK_FALSE(satisfaction(ident, {reservation_radius(ident, {0, 0})}) > 0.5001);

  // Frustration widens the acceptable region.
  CHECK_FALSE(acceptable(a, {r * 1.5}, fresh));
  CHECK(acceptable(a, {r * 1.5}, {a.id, 10}));
}

TEST_CASE("agent validation catches bad parameters") {
  Agent a = simple_agent();
  CHECK_NOTHROW(validate(a));

  Agent bad = a;
  bad.alpha = 0.0;
  CHECK_THROWS_AS(validate(bad), ValidationError);
  bad = a;
  bad.beta = 1.0;
  CHECK_THROWS_AS(validate(bad), ValidationError);
  bad = a;
  bad.gamma = 0.0;
  CHECK_THROWS_AS(validate(bad), ValidationError);
  bad = a;
  bad.offer = {1.0, 2.0};
  CHECK_THROWS_WITH_AS(validate(bad), doctest::Contains("agent 7"), ValidationError);
  bad = a;
  bad.demand.clear();
  bad.offer.clear();
  CHECK_THROWS_AS(validate(bad), ValidationError);
}
