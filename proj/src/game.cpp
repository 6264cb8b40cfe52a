// Copyright 2026 the barter developers. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#include "barter/game.hpp"

#include "barter/errors.hpp"

namespace barter {

BilateralView make_view(const Agent& self, const Agent& other,
                        const FrustrationState& frustration) {
  return BilateralView{satisfaction(self, other.offer),
                       reservation(self, frustration), self.gamma};
}

static void check_view(const BilateralView& v, const char* side) {
  if (!(v.coop_satisfaction > 0.0 && v.coop_satisfaction <= 1.0))
    throw ValidationError(std::string("build_matrix: ") + side +
                          " cooperation satisfaction must lie in (0,1]");
  if (!(v.fallback > 0.0 && v.fallback < 1.0))
    throw ValidationError(std::string("build_matrix: ") + side +
                          " fallback must lie strictly between 0 and 1");
  if (!(v.gamma > 0.0 && v.gamma < 1.0))
    throw ValidationError(std::string("build_matrix: ") + side +
                          " gamma must lie strictly between 0 and 1");
}

SatisfactionMatrix2x2 build_matrix(const BilateralView& row, const BilateralView& col) {
  check_view(row, "row");
  check_view(col, "col");
  SatisfactionMatrix2x2 m;
  m.allure_allure = {row.coop_satisfaction, col.coop_satisfaction};
  m.allure_ignore = {row.fallback * row.gamma, col.fallback};
  m.ignore_allure = {row.fallback, col.fallback * col.gamma};
  m.ignore_ignore = {row.fallback, col.fallback};
  return m;
}

std::vector<EquilibriumProfile> pure_equilibria(const SatisfactionMatrix2x2& m) {
  constexpr Action acts[2] = {Action::Allure, Action::Ignore};
  std::vector<EquilibriumProfile> out;
  for (Action r : acts) {
    for (Action c : acts) {
      const Action r_alt = (r == Action::Allure) ? Action::Ignore : Action::Allure;
      const Action c_alt = (c == Action::Allure) ? Action::Ignore : Action::Allure;
      const bool row_deviates = m.cell(r_alt, c).row > m.cell(r, c).row;
      const bool col_deviates = m.cell(r, c_alt).col > m.cell(r, c).col;
      if (!row_deviates && !col_deviates) out.push_back({r, c});
    }
  }
  return out;
}

bool cooperation_viable(const Agent& a, const Agent& b,
                        const FrustrationState& frustration_a,
                        const FrustrationState& frustration_b) {
  const auto m = build_matrix(make_view(a, b, frustration_a),
                              make_view(b, a, frustration_b));
  const EquilibriumProfile mutual{Action::Allure, Action::Allure};
  for (const auto& eq : pure_equilibria(m))
    if (eq == mutual) return true;
  return false;
}

}  // namespace barter
