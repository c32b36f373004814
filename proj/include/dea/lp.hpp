// Copyright 2026 The dea-facets Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dea/rational.hpp"

/**
 * Dense two-phase primal simplex over exact rationals.
 *
 * Every pivot uses Bland's smallest-index rule for both the entering and the
 * leaving variable, so the method terminates on degenerate problems and the
 * sequence of pivots (hence the reported optimal vertex) is a pure function of
 * the problem as written. Infeasibility is reported only when the phase-one
 * optimum, an exact rational, is strictly positive.
 *
 * Sizes here are desk-scale (tens of rows and columns); no attempt is made at
 * sparsity or at reusing factorizations between solves.
 */
namespace dea {

enum class Sense { Min, Max };
enum class Relation { LessEqual, Equal, GreaterEqual };
enum class Bound { NonNegative, Free };
enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpConstraint {
  RationalVector coefficients;
  Relation relation = Relation::LessEqual;
  Rational rhs = 0;
};

struct LpProblem {
  Sense sense = Sense::Min;
  RationalVector objective;
  std::vector<LpConstraint> constraints;
  std::vector<Bound> bounds;  // empty means every variable is nonnegative

  explicit LpProblem(std::size_t variables = 0, Sense s = Sense::Min)
      : sense(s), objective(variables), bounds(variables, Bound::NonNegative) {}

  std::size_t variable_count() const { return objective.size(); }

  void add(RationalVector coefficients, Relation relation, Rational rhs) {
    constraints.push_back({std::move(coefficients), relation, std::move(rhs)});
  }
};

struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  Rational objective = 0;  // meaningful only when Optimal
  RationalVector values;   // meaningful only when Optimal

  bool optimal() const { return status == LpStatus::Optimal; }
};

inline std::string to_string(LpStatus status) {
  switch (status) {
    case LpStatus::Optimal: return "optimal";
    case LpStatus::Infeasible: return "infeasible";
    case LpStatus::Unbounded: return "unbounded";
  }
  return "?";
}

namespace detail {

class Tableau {
 public:
  static constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

  std::vector<RationalVector> rows;  // last entry of each row is the rhs
  RationalVector cost;               // reduced costs; last entry is -objective
  std::vector<std::size_t> basis;    // basic column per row
  std::size_t columns = 0;           // excluding rhs

  void pivot(std::size_t r, std::size_t c) {
    RationalVector& prow = rows[r];
    const Rational p = prow[c];
    for (auto& v : prow) {
      if (v != 0) v /= p;
    }
    auto eliminate = [&](RationalVector& row) {
      if (row[c] == 0) return;
      const Rational f = row[c];
      for (std::size_t j = 0; j <= columns; ++j) {
        if (prow[j] != 0) row[j] -= f * prow[j];
      }
    };
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i != r) eliminate(rows[i]);
    }
    eliminate(cost);
    basis[r] = c;
  }

  // Bland's rule over columns [0, limit). Returns false on unboundedness.
  bool optimize(std::size_t limit) {
    while (true) {
      std::size_t enter = kNone;
      for (std::size_t j = 0; j < limit; ++j) {
        if (cost[j] < 0) {
          enter = j;
          break;
        }
      }
      if (enter == kNone) return true;
      std::size_t leave = kNone;
      Rational best;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i][enter] <= 0) continue;
        Rational ratio = rows[i][columns] / rows[i][enter];
        if (leave == kNone || ratio < best || (ratio == best && basis[i] < basis[leave])) {
          leave = i;
          best = std::move(ratio);
        }
      }
      if (leave == kNone) return false;
      pivot(leave, enter);
    }
  }
};

}  // namespace detail

inline LpSolution solve(const LpProblem& p) {
  const std::size_t n = p.variable_count();
  if (!p.bounds.empty() && p.bounds.size() != n) {
    throw std::invalid_argument("LP dimension mismatch: bounds");
  }
  for (const auto& con : p.constraints) {
    if (con.coefficients.size() != n) throw std::invalid_argument("LP dimension mismatch: constraint");
  }

  // Column layout: one column per variable, a second (negated) column per
  // free variable, then slack/surplus columns, then artificials.
  std::vector<std::size_t> negative_part(n, detail::Tableau::kNone);
  std::size_t structural = n;
  for (std::size_t j = 0; j < n; ++j) {
    if (!p.bounds.empty() && p.bounds[j] == Bound::Free) negative_part[j] = structural++;
  }

  struct Row {
    RationalVector coefficients;
    Relation relation;
    Rational rhs;
  };
  std::vector<Row> rows;
  rows.reserve(p.constraints.size());
  std::size_t slack_count = 0, artificial_count = 0;
  for (const auto& con : p.constraints) {
    Row row{con.coefficients, con.relation, con.rhs};
    if (row.rhs < 0) {
      for (auto& a : row.coefficients) a = -a;
      row.rhs = -row.rhs;
      if (row.relation == Relation::LessEqual) row.relation = Relation::GreaterEqual;
      else if (row.relation == Relation::GreaterEqual) row.relation = Relation::LessEqual;
    }
    if (row.relation != Relation::Equal) ++slack_count;
    if (row.relation != Relation::LessEqual) ++artificial_count;
    rows.push_back(std::move(row));
  }

  detail::Tableau t;
  const std::size_t first_slack = structural;
  const std::size_t first_artificial = first_slack + slack_count;
  t.columns = first_artificial + artificial_count;
  t.rows.assign(rows.size(), RationalVector(t.columns + 1));
  t.basis.assign(rows.size(), detail::Tableau::kNone);
  t.cost.assign(t.columns + 1, Rational(0));

  std::size_t next_slack = first_slack, next_artificial = first_artificial;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    RationalVector& tr = t.rows[i];
    for (std::size_t j = 0; j < n; ++j) {
      tr[j] = rows[i].coefficients[j];
      if (negative_part[j] != detail::Tableau::kNone) tr[negative_part[j]] = -rows[i].coefficients[j];
    }
    tr[t.columns] = rows[i].rhs;
    switch (rows[i].relation) {
      case Relation::LessEqual:
        tr[next_slack] = 1;
        t.basis[i] = next_slack++;
        break;
      case Relation::GreaterEqual:
        tr[next_slack++] = -1;
        [[fallthrough]];
      case Relation::Equal:
        tr[next_artificial] = 1;
        t.basis[i] = next_artificial++;
        break;
    }
  }

  // Phase one: minimize the sum of artificials.
  if (artificial_count > 0) {
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (t.basis[i] < first_artificial) continue;
      for (std::size_t j = 0; j <= t.columns; ++j) {
        if (j < first_artificial || j == t.columns) t.cost[j] -= t.rows[i][j];
      }
    }
    t.optimize(t.columns);
    if (t.cost[t.columns] != 0) return {LpStatus::Infeasible, 0, {}};

    // Drive zero-level artificials out of the basis; drop redundant rows.
    for (std::size_t i = 0; i < t.rows.size();) {
      if (t.basis[i] < first_artificial) {
        ++i;
        continue;
      }
      std::size_t c = 0;
      while (c < first_artificial && t.rows[i][c] == 0) ++c;
      if (c < first_artificial) {
        t.pivot(i, c);
        ++i;
      } else {
        t.rows.erase(t.rows.begin() + static_cast<std::ptrdiff_t>(i));
        t.basis.erase(t.basis.begin() + static_cast<std::ptrdiff_t>(i));
      }
    }
  }

  // Phase two on the original objective, in minimization form.
  RationalVector c(t.columns + 1, Rational(0));
  for (std::size_t j = 0; j < n; ++j) {
    Rational cj = p.sense == Sense::Max ? Rational(-p.objective[j]) : p.objective[j];
    if (negative_part[j] != detail::Tableau::kNone) c[negative_part[j]] = -cj;
    c[j] = std::move(cj);
  }
  t.cost = c;
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    const Rational& cb = c[t.basis[i]];
    if (cb == 0) continue;
    for (std::size_t j = 0; j <= t.columns; ++j) {
      if (t.rows[i][j] != 0) t.cost[j] -= cb * t.rows[i][j];
    }
  }
  if (!t.optimize(first_artificial)) return {LpStatus::Unbounded, 0, {}};

  RationalVector column_values(t.columns, Rational(0));
  for (std::size_t i = 0; i < t.rows.size(); ++i) column_values[t.basis[i]] = t.rows[i][t.columns];
  LpSolution solution;
  solution.status = LpStatus::Optimal;
  solution.values.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    solution.values[j] = column_values[j];
    if (negative_part[j] != detail::Tableau::kNone) solution.values[j] -= column_values[negative_part[j]];
    solution.objective += p.objective[j] * solution.values[j];
  }
  return solution;
}

// Exact check that a point satisfies every constraint and bound of p.
inline bool satisfies(const LpProblem& p, const RationalVector& x) {
  if (x.size() != p.variable_count()) return false;
  for (std::size_t j = 0; j < x.size(); ++j) {
    bool free = !p.bounds.empty() && p.bounds[j] == Bound::Free;
    if (!free && x[j] < 0) return false;
  }
  for (const auto& con : p.constraints) {
    Rational lhs = dot(con.coefficients, x);
    switch (con.relation) {
      case Relation::LessEqual:
        if (lhs > con.rhs) return false;
        break;
      case Relation::Equal:
        if (lhs != con.rhs) return false;
        break;
      case Relation::GreaterEqual:
        if (lhs < con.rhs) return false;
        break;
    }
  }
  return true;
}

}  // namespace dea
