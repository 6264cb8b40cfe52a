// Copyright 2026 the barter developers. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <string>
#include <vector>

namespace barter {

// A point in the shared d-dimensional trait space. Demands and offers live in
// the same space so that "how well does j's offer fit i's demand" is a plain
// Euclidean distance.
using Point = std::vector<double>;

// One market participant. The identity fields never change during a run;
// everything that evolves (accumulated frustration) lives in FrustrationState.
//
//   alpha : sensitivity, > 0. Larger alpha means satisfaction falls off
//           faster with demand/offer mismatch.
//   beta  : default satisfaction in (0,1), what the agent holds on to by
//           not trading at all.
//   gamma : frustration factor in (0,1). Each fruitless allure multiplies the
//           agent's fallback level by gamma.
struct Agent {
  int id = 0;
  Point demand;
  Point offer;
  double alpha = 1.0;
  double beta = 0.5;
  double gamma = 0.5;

  friend bool operator==(const Agent&, const Agent&) = default;
};

// Evolving per-agent state: m counts allures that led nowhere (plus accepts
// that were defected). It only ever grows.
struct FrustrationState {
  int agent_id = 0;
  int m = 0;
};

// Throws ValidationError if the agent's parameters are out of range or its
// demand and offer dimensions disagree.
void validate(const Agent& agent);

// Euclidean distance. Throws ValidationError on dimension mismatch.
double distance(const Point& a, const Point& b);

// exp(-alpha * distance(demand, offered)^2), always in (0, 1]. Equals 1
// exactly when the offer sits on the demand point.
double satisfaction(const Agent& agent, const Point& offered);

// beta * gamma^m, the satisfaction the agent falls back to after m fruitless
// allures. Computed as an iterated product so that
// reservation(m+1) == gamma * reservation(m) holds exactly in floating point.
double reservation(const Agent& agent, const FrustrationState& frustration);

// The distance at which an offer's satisfaction equals the current
// reservation: sqrt(-ln(beta * gamma^m) / alpha). Offers strictly inside this
// radius around the demand are acceptable.
double reservation_radius(const Agent& agent, const FrustrationState& frustration);

// Strict comparison: satisfaction(agent, offered) > reservation. An offer
// exactly on the reservation level is not worth moving for.
bool acceptable(const Agent& agent, const Point& offered,
                const FrustrationState& frustration);

}  // namespace barter
