// Copyright 2026 the barter developers. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <vector>

#include "barter/model.hpp"

namespace barter {

enum class Action { Allure, Ignore };

// One side of a bilateral encounter, reduced to the three numbers that decide
// it: what cooperating would pay, what walking away pays now, and the penalty
// factor for alluring someone who ignores you.
//
// When frustration from earlier rounds is in play, fold it into `fallback`
// (beta * gamma^m) before building the matrix; the matrix's own gamma factor
// then covers one further failed allure.
struct BilateralView {
  double coop_satisfaction = 0.0;  // satisfaction from the counterparty's offer
  double fallback = 0.5;           // current no-trade level, in (0,1)
  double gamma = 0.5;              // frustration factor, in (0,1)
};

struct PairPayoff {
  double row = 0.0;
  double col = 0.0;
};

// Payoffs of the one-shot allure/ignore game between a row and a column
// player. Alluring an ignoring counterparty costs one gamma factor; mutual
// allure trades; anything else leaves the fallback untouched.
struct SatisfactionMatrix2x2 {
  PairPayoff allure_allure;
  PairPayoff allure_ignore;
  PairPayoff ignore_allure;
  PairPayoff ignore_ignore;

  const PairPayoff& cell(Action row, Action col) const {
    if (row == Action::Allure)
      return col == Action::Allure ? allure_allure : allure_ignore;
    return col == Action::Allure ? ignore_allure : ignore_ignore;
  }
};

struct EquilibriumProfile {
  Action row = Action::Ignore;
  Action col = Action::Ignore;
  friend bool operator==(const EquilibriumProfile&, const EquilibriumProfile&) = default;
};

// View of `self` facing `other`, with accumulated frustration folded into the
// fallback level.
BilateralView make_view(const Agent& self, const Agent& other,
                        const FrustrationState& frustration);

SatisfactionMatrix2x2 build_matrix(const BilateralView& row, const BilateralView& col);

// Pure-strategy Nash equilibria under weak best responses (a profile survives
// when no player gains STRICTLY by deviating alone). Because gamma < 1, the
// mixed cells can never be equilibria: the result is a subset of
// {(Allure,Allure), (Ignore,Ignore)}, and (Ignore,Ignore) is always present.
std::vector<EquilibriumProfile> pure_equilibria(const SatisfactionMatrix2x2& m);

// True when mutual allure is an equilibrium of the pair's game, i.e. both
// sides weakly prefer the trade to their current fallback.
bool cooperation_viable(const Agent& a, const Agent& b,
                        const FrustrationState& frustration_a,
                        const FrustrationState& frustration_b);

}  // namespace barter
