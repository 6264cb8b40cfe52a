// Copyright 2026 the barter developers. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#include "barter/model.hpp"

#include <cmath>

#include "barter/errors.hpp"

namespace barter {

void validate(const Agent& agent) {
  const std::string who = "agent " + std::to_string(agent.id);
  if (agent.demand.empty())
    throw ValidationError(who + ": demand must have at least one coordinate");
  if (agent.demand.size() != agent.offer.size())
    throw ValidationError(who + ": demand dimension " + std::to_string(agent.demand.size()) +
                          " != offer dimension " + std::to_string(agent.offer.size()));
  if (!(agent.alpha > 0.0) || !std::isfinite(agent.alpha))
    throw ValidationError(who + ": alpha must be finite and > 0");
  if (!(agent.beta > 0.0 && agent.beta < 1.0))
    throw ValidationError(who + ": beta must lie strictly between 0 and 1");
  if (!(agent.gamma > 0.0 && agent.gamma < 1.0))
    throw ValidationError(who + ": gamma must lie strictly between 0 and 1");
  for (double x : agent.demand)
    if (!std::isfinite(x)) throw ValidationError(who + ": demand has a non-finite coordinate");
  for (double x : agent.offer)
    if (!std::isfinite(x)) throw ValidationError(who + ": offer has a non-finite coordinate");
}

double distance(const Point& a, const Point& b) {
  if (a.size() != b.size())
    throw ValidationError("distance: dimension mismatch (" + std::to_string(a.size()) +
                          " vs " + std::to_string(b.size()) + ")");
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    sum += d * d;
  }
  return std::sqrt(sum);
}

double satisfaction(const Agent& agent, const Point& offered) {
  const double d = distance(agent.demand, offered);
  return std::exp(-agent.alpha * d * d);
}

double reservation(const Agent& agent, const FrustrationState& frustration) {
  if (frustration.m < 0)
    throw ValidationError("reservation: frustration count must be >= 0");
  double r = agent.beta;
  for (int i = 0; i < frustration.m; ++i) r *= agent.gamma;
  return r;
}

double reservation_radius(const Agent& agent, const FrustrationState& frustration) {
  // reservation < 1 always (beta < 1, gamma < 1), so the log is negative and
  // the radius real and positive.
  const double level = reservation(agent, frustration);
  return std::sqrt(-std::log(level) / agent.alpha);
}

bool acceptable(const Agent& agent, const Point& offered,
                const FrustrationState& frustration) {
  return satisfaction(agent, offered) > reservation(agent, frustration);
}

}  // namespace barter
