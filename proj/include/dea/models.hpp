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
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "dea/dataset.hpp"
#include "dea/error.hpp"
#include "dea/lp.hpp"
#include "dea/rational.hpp"

/**
 * CCR envelopment and multiplier models, the per-axis super-efficiency
 * models, and the classification built on them.
 *
 * The non-Archimedean weight on slacks is realized lexicographically: the
 * radial score is optimized first, then the slack sum is maximized with the
 * radial variable pinned to its optimum. All comparisons are exact.
 */
namespace dea {

enum class Orientation { Input, Output };

struct RadialScore {
  Orientation orientation = Orientation::Input;
  Rational score;        // theta* (input) or phi* (output)
  Rational total_slack;  // optimal slack sum at the pinned radial score
  RationalVector lambdas;
  RationalVector input_slacks;
  RationalVector output_slacks;
};

struct MultiplierScore {
  Rational objective;
  RationalVector u;  // output weights
  RationalVector v;  // input weights
};

namespace detail {

inline void require_optimal(const LpSolution& s, const char* model) {
  if (!s.optimal()) {
    throw std::domain_error(std::string(model) + " returned " + to_string(s.status));
  }
}

// Variables: lambda (n), radial (1), input slacks (m), output slacks (s).
// Orientation decides which block the radial variable scales.
inline RadialScore radial(std::span<const Dmu> reference, const Dmu& target, Orientation o) {
  const std::size_t n = reference.size(), m = target.inputs.size(), s = target.outputs.size();
  const std::size_t radial_col = n, in_slack = n + 1, out_slack = n + 1 + m, vars = n + 1 + m + s;

  auto build = [&](const std::optional<Rational>& pinned) {
    LpProblem lp(vars, pinned ? Sense::Max : (o == Orientation::Input ? Sense::Min : Sense::Max));
    lp.bounds[radial_col] = Bound::Free;
    if (pinned) {
      for (std::size_t i = 0; i < m + s; ++i) lp.objective[in_slack + i] = 1;
    } else {
      lp.objective[radial_col] = 1;
    }
    for (std::size_t i = 0; i < m; ++i) {
      RationalVector row(vars);
      for (std::size_t j = 0; j < n; ++j) row[j] = reference[j].inputs[i];
      row[in_slack + i] = 1;
      Rational rhs = 0;
      if (o == Orientation::Input) {
        if (pinned) rhs = *pinned * target.inputs[i];
        else row[radial_col] = -target.inputs[i];
      } else {
        rhs = target.inputs[i];
      }
      lp.add(std::move(row), Relation::Equal, std::move(rhs));
    }
    for (std::size_t r = 0; r < s; ++r) {
      RationalVector row(vars);
      for (std::size_t j = 0; j < n; ++j) row[j] = reference[j].outputs[r];
      row[out_slack + r] = -1;
      Rational rhs = 0;
      if (o == Orientation::Output) {
        if (pinned) rhs = *pinned * target.outputs[r];
        else row[radial_col] = -target.outputs[r];
      } else {
        rhs = target.outputs[r];
      }
      lp.add(std::move(row), Relation::Equal, std::move(rhs));
    }
    return lp;
  };

  LpSolution first = solve(build(std::nullopt));
  require_optimal(first, "radial model");
  const Rational score = first.values[radial_col];
  LpSolution second = solve(build(score));
  require_optimal(second, "slack model");

  RadialScore out;
  out.orientation = o;
  out.score = score;
  out.total_slack = second.objective;
  out.lambdas.assign(second.values.begin(), second.values.begin() + static_cast<std::ptrdiff_t>(n));
  out.input_slacks.assign(second.values.begin() + static_cast<std::ptrdiff_t>(in_slack),
                          second.values.begin() + static_cast<std::ptrdiff_t>(out_slack));
  out.output_slacks.assign(second.values.begin() + static_cast<std::ptrdiff_t>(out_slack),
                           second.values.end());
  return out;
}

inline std::vector<Dmu> select(const Dataset& d, std::span<const std::size_t> indices) {
  std::vector<Dmu> out;
  out.reserve(indices.size());
  for (std::size_t j : indices) {
    if (j >= d.n()) throw std::out_of_range("DMU index " + std::to_string(j) + " out of range");
    out.push_back(d[j]);
  }
  return out;
}

inline std::vector<std::size_t> all_indices(const Dataset& d) {
  std::vector<std::size_t> all(d.n());
  for (std::size_t j = 0; j < d.n(); ++j) all[j] = j;
  return all;
}

}  // namespace detail

// Input-oriented envelopment score of an arbitrary point against a reference technology.
inline RadialScore radial_input(std::span<const Dmu> reference, const Dmu& target) {
  if (reference.empty()) throw std::invalid_argument("empty reference set");
  return detail::radial(reference, target, Orientation::Input);
}

inline RadialScore radial_output(std::span<const Dmu> reference, const Dmu& target) {
  if (reference.empty()) throw std::invalid_argument("empty reference set");
  return detail::radial(reference, target, Orientation::Output);
}

inline RadialScore eval_input(const Dataset& d, std::size_t k, std::span<const std::size_t> reference) {
  if (k >= d.n()) throw std::out_of_range("DMU index out of range");
  return radial_input(detail::select(d, reference), d[k]);
}

inline RadialScore eval_input(const Dataset& d, std::size_t k) {
  return eval_input(d, k, detail::all_indices(d));
}

inline RadialScore eval_output(const Dataset& d, std::size_t k, std::span<const std::size_t> reference) {
  if (k >= d.n()) throw std::out_of_range("DMU index out of range");
  return radial_output(detail::select(d, reference), d[k]);
}

inline RadialScore eval_output(const Dataset& d, std::size_t k) {
  return eval_output(d, k, detail::all_indices(d));
}

// max u.y_k  s.t.  u.y_j - v.x_j <= 0 for all j,  v.x_k = 1,  u, v >= 0.
inline MultiplierScore eval_multiplier_input(const Dataset& d, std::size_t k) {
  if (k >= d.n()) throw std::out_of_range("DMU index out of range");
  const std::size_t m = d.m(), s = d.s();
  LpProblem lp(s + m, Sense::Max);
  for (std::size_t r = 0; r < s; ++r) lp.objective[r] = d[k].outputs[r];
  for (const Dmu& dmu : d.dmus()) {
    RationalVector row(s + m);
    for (std::size_t r = 0; r < s; ++r) row[r] = dmu.outputs[r];
    for (std::size_t i = 0; i < m; ++i) row[s + i] = -dmu.inputs[i];
    lp.add(std::move(row), Relation::LessEqual, 0);
  }
  RationalVector norm(s + m);
  for (std::size_t i = 0; i < m; ++i) norm[s + i] = d[k].inputs[i];
  lp.add(std::move(norm), Relation::Equal, 1);
  LpSolution sol = solve(lp);
  detail::require_optimal(sol, "input multiplier model");
  return {sol.objective, RationalVector(sol.values.begin(), sol.values.begin() + static_cast<std::ptrdiff_t>(s)),
          RationalVector(sol.values.begin() + static_cast<std::ptrdiff_t>(s), sol.values.end())};
}

// min v.x_k  s.t.  v.x_j - u.y_j >= 0 for all j,  u.y_k = 1,  u, v >= 0.
inline MultiplierScore eval_multiplier_output(const Dataset& d, std::size_t k) {
  if (k >= d.n()) throw std::out_of_range("DMU index out of range");
  const std::size_t m = d.m(), s = d.s();
  LpProblem lp(s + m, Sense::Min);
  for (std::size_t i = 0; i < m; ++i) lp.objective[s + i] = d[k].inputs[i];
  for (const Dmu& dmu : d.dmus()) {
    RationalVector row(s + m);
    for (std::size_t r = 0; r < s; ++r) row[r] = -dmu.outputs[r];
    for (std::size_t i = 0; i < m; ++i) row[s + i] = dmu.inputs[i];
    lp.add(std::move(row), Relation::GreaterEqual, 0);
  }
  RationalVector norm(s + m);
  for (std::size_t r = 0; r < s; ++r) norm[r] = d[k].outputs[r];
  lp.add(std::move(norm), Relation::Equal, 1);
  LpSolution sol = solve(lp);
  detail::require_optimal(sol, "output multiplier model");
  return {sol.objective, RationalVector(sol.values.begin(), sol.values.begin() + static_cast<std::ptrdiff_t>(s)),
          RationalVector(sol.values.begin() + static_cast<std::ptrdiff_t>(s), sol.values.end())};
}

// Outcome of one per-axis super-efficiency model; no value means infeasible.
struct AxisResult {
  std::optional<Rational> value;

  bool feasible() const { return value.has_value(); }
  bool operator==(const AxisResult&) const = default;
};

struct AxisFeasibility {
  std::vector<AxisResult> inputs;   // theta_l per input axis
  std::vector<AxisResult> outputs;  // phi_q per output axis
};

// min theta  s.t.  sum mu x_l <= theta x_lk,  sum mu x_i <= x_ik (i != l),
//                  sum mu y_r >= y_rk,  mu >= 0,  theta free.
// An empty reference set counts as infeasible on every axis.
inline AxisResult super_efficiency_input(std::span<const Dmu> others, const Dmu& target, std::size_t l) {
  if (others.empty()) return {};
  const std::size_t n = others.size(), m = target.inputs.size(), s = target.outputs.size();
  if (l >= m) throw std::out_of_range("input axis out of range");
  LpProblem lp(n + 1, Sense::Min);
  lp.bounds[n] = Bound::Free;
  lp.objective[n] = 1;
  for (std::size_t i = 0; i < m; ++i) {
    RationalVector row(n + 1);
    for (std::size_t j = 0; j < n; ++j) row[j] = others[j].inputs[i];
    if (i == l) {
      row[n] = -target.inputs[i];
      lp.add(std::move(row), Relation::LessEqual, 0);
    } else {
      lp.add(std::move(row), Relation::LessEqual, target.inputs[i]);
    }
  }
  for (std::size_t r = 0; r < s; ++r) {
    RationalVector row(n + 1);
    for (std::size_t j = 0; j < n; ++j) row[j] = others[j].outputs[r];
    lp.add(std::move(row), Relation::GreaterEqual, target.outputs[r]);
  }
  LpSolution sol = solve(lp);
  if (sol.status == LpStatus::Infeasible) return {};
  detail::require_optimal(sol, "input super-efficiency model");
  return {sol.objective};
}

// max phi  s.t.  sum mu x_i <= x_ik,  sum mu y_q >= phi y_qk,
//                sum mu y_r >= y_rk (r != q),  mu >= 0,  phi free.
inline AxisResult super_efficiency_output(std::span<const Dmu> others, const Dmu& target, std::size_t q) {
  if (others.empty()) return {};
  const std::size_t n = others.size(), m = target.inputs.size(), s = target.outputs.size();
  if (q >= s) throw std::out_of_range("output axis out of range");
  LpProblem lp(n + 1, Sense::Max);
  lp.bounds[n] = Bound::Free;
  lp.objective[n] = 1;
  for (std::size_t i = 0; i < m; ++i) {
    RationalVector row(n + 1);
    for (std::size_t j = 0; j < n; ++j) row[j] = others[j].inputs[i];
    lp.add(std::move(row), Relation::LessEqual, target.inputs[i]);
  }
  for (std::size_t r = 0; r < s; ++r) {
    RationalVector row(n + 1);
    for (std::size_t j = 0; j < n; ++j) row[j] = others[j].outputs[r];
    if (r == q) {
      row[n] = -target.outputs[r];
      lp.add(std::move(row), Relation::GreaterEqual, 0);
    } else {
      lp.add(std::move(row), Relation::GreaterEqual, target.outputs[r]);
    }
  }
  LpSolution sol = solve(lp);
  if (sol.status == LpStatus::Infeasible) return {};
  detail::require_optimal(sol, "output super-efficiency model");
  return {sol.objective};
}

namespace detail {

inline std::vector<Dmu> others_in(const Dataset& d, std::span<const std::size_t> efficient, std::size_t k) {
  std::vector<Dmu> out;
  for (std::size_t j : efficient) {
    if (j != k) out.push_back(d[j]);
  }
  return out;
}

}  // namespace detail

// Model over E - {k} for input axis l (0-based).
inline AxisResult super_eff_input(const Dataset& d, std::span<const std::size_t> efficient, std::size_t k,
                                  std::size_t l) {
  return super_efficiency_input(detail::others_in(d, efficient, k), d[k], l);
}

inline AxisResult super_eff_output(const Dataset& d, std::span<const std::size_t> efficient, std::size_t k,
                                   std::size_t q) {
  return super_efficiency_output(detail::others_in(d, efficient, k), d[k], q);
}

enum class Extremity { Extreme, NonExtreme };

inline Extremity extremity(const AxisFeasibility& axis) {
  for (const auto& a : axis.inputs) {
    if (!a.feasible() || *a.value > 1) return Extremity::Extreme;
  }
  for (const auto& a : axis.outputs) {
    if (!a.feasible() || *a.value < 1) return Extremity::Extreme;
  }
  return Extremity::NonExtreme;
}

enum class Status { StrongEfficient, WeakEfficient, Interior };

inline std::string to_string(Status s) {
  switch (s) {
    case Status::StrongEfficient: return "strong";
    case Status::WeakEfficient: return "weak";
    case Status::Interior: return "interior";
  }
  return "?";
}

struct DmuClassification {
  Status status = Status::Interior;
  RadialScore score;                       // input-oriented, reference = all DMUs
  std::optional<Extremity> extremity;      // strong-efficient DMUs only
  std::optional<AxisFeasibility> axis;     // strong-efficient DMUs only
};

struct Classification {
  std::vector<DmuClassification> dmus;  // dataset order
  std::vector<std::size_t> efficient;   // E, ascending

  bool is_efficient(std::size_t j) const { return dmus[j].status == Status::StrongEfficient; }
};

inline Status status_of(const RadialScore& score) {
  if (score.score < 1) return Status::Interior;
  return score.total_slack == 0 ? Status::StrongEfficient : Status::WeakEfficient;
}

inline Classification classify(const Dataset& d) {
  for (const auto& v : validate(d)) {
    if (v.kind == Violation::Kind::Positivity) throw InputError(v.message);
  }
  Classification c;
  c.dmus.resize(d.n());
  for (std::size_t k = 0; k < d.n(); ++k) {
    c.dmus[k].score = eval_input(d, k);
    c.dmus[k].status = status_of(c.dmus[k].score);
    if (c.dmus[k].status == Status::StrongEfficient) c.efficient.push_back(k);
  }
  for (std::size_t a = 0; a < c.efficient.size(); ++a) {
    for (std::size_t b = a + 1; b < c.efficient.size(); ++b) {
      const Dmu& p = d[c.efficient[a]];
      const Dmu& q = d[c.efficient[b]];
      if (detail::proportional(p.point(), q.point())) {
        throw InputError("efficient DMUs " + p.id + " and " + q.id +
                         " are proportional; remove one of them");
      }
    }
  }
  for (std::size_t k : c.efficient) {
    AxisFeasibility axis;
    for (std::size_t l = 0; l < d.m(); ++l) axis.inputs.push_back(super_eff_input(d, c.efficient, k, l));
    for (std::size_t q = 0; q < d.s(); ++q) axis.outputs.push_back(super_eff_output(d, c.efficient, k, q));
    c.dmus[k].extremity = extremity(axis);
    c.dmus[k].axis = std::move(axis);
  }
  return c;
}

}  // namespace dea
