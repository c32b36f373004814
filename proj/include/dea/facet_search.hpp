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

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "dea/dataset.hpp"
#include "dea/error.hpp"
#include "dea/models.hpp"
#include "dea/rational.hpp"

/**
 * Enumeration of the defining hyperplanes (facets) of the CCR production
 * possibility set.
 *
 * Pipeline:
 *   1. classify DMUs and keep the strong-efficient set E;
 *   2. for every infeasible per-axis super-efficiency model of an extreme DMU,
 *      add a virtual DMU displaced along that axis (it lands on a weak facet);
 *   3. two pool members are coplanar iff their midpoint has radial input
 *      score 1 against E;
 *   4. every clique of size m + s - 1 in the coplanarity graph is a candidate;
 *      its hyperplane through the origin is the cofactor vector of the
 *      (m + s - 1) x (m + s) point matrix;
 *   5. a candidate is kept iff, after orienting it so that the negative ideal
 *      point lies strictly below, inputs carry nonpositive and outputs
 *      nonnegative coefficients and no pool member lies strictly above;
 *   6. a facet is weak iff a virtual DMU lies on it, which must coincide with
 *      it having a zero coefficient.
 */
namespace dea {

struct SearchConfig {
  Rational alpha = 1;  // input displacement for virtual DMUs
  Rational gamma = 1;  // output displacement, clamped so outputs stay >= 0

  void check() const {
    if (alpha <= 0) throw InputError("alpha must be positive");
    if (gamma <= 0) throw InputError("gamma must be positive");
  }
};

// E followed by the virtual DMUs F; indices into `members` form G.
struct CandidatePool {
  std::vector<Dmu> members;
  std::size_t efficient_count = 0;
  std::vector<std::size_t> source;  // dataset index for each observed member

  std::size_t size() const { return members.size(); }
  bool is_virtual(std::size_t j) const { return j >= efficient_count; }
  std::span<const Dmu> efficient() const { return {members.data(), efficient_count}; }
};

namespace detail {

inline std::string unique_id(std::string id, std::unordered_set<std::string>& taken) {
  while (!taken.insert(id).second) id += "'";
  return id;
}

}  // namespace detail

inline CandidatePool generate_virtuals(const Dataset& d, const Classification& c, const SearchConfig& cfg) {
  cfg.check();
  CandidatePool pool;
  std::unordered_set<std::string> taken;
  for (const Dmu& dmu : d.dmus()) taken.insert(dmu.id);
  for (std::size_t k : c.efficient) {
    pool.members.push_back(d[k]);
    pool.source.push_back(k);
  }
  pool.efficient_count = pool.members.size();

  for (std::size_t k : c.efficient) {
    const AxisFeasibility& axis = *c.dmus[k].axis;
    // With a single input (output) the displaced point is interior, so only
    // multi-axis blocks contribute virtuals. This matters only when |E| = 1.
    for (std::size_t l = 0; l < d.m() && d.m() >= 2; ++l) {
      if (axis.inputs[l].feasible()) continue;
      Dmu v = d[k];
      v.inputs[l] += cfg.alpha;
      v.id = detail::unique_id(d[k].id + "+" + d.input_names()[l], taken);
      v.origin = VirtualOrigin{d[k].id, AxisKind::Input, l};
      if (radial_output(pool.efficient(), v).score != 1) {
        throw InternalConsistencyError("virtual DMU " + v.id + " is not on the frontier");
      }
      pool.members.push_back(std::move(v));
    }
    for (std::size_t q = 0; q < d.s() && d.s() >= 2; ++q) {
      if (axis.outputs[q].feasible()) continue;
      Dmu v = d[k];
      v.outputs[q] -= std::min(cfg.gamma, v.outputs[q]);
      v.id = detail::unique_id(d[k].id + "-" + d.output_names()[q], taken);
      v.origin = VirtualOrigin{d[k].id, AxisKind::Output, q};
      if (radial_input(pool.efficient(), v).score != 1) {
        throw InternalConsistencyError("virtual DMU " + v.id + " is not on the frontier");
      }
      pool.members.push_back(std::move(v));
    }
  }
  return pool;
}

inline Dmu midpoint(const Dmu& p, const Dmu& q) {
  Dmu mid;
  mid.id = p.id + "|" + q.id;
  for (std::size_t i = 0; i < p.inputs.size(); ++i) mid.inputs.push_back((p.inputs[i] + q.inputs[i]) / 2);
  for (std::size_t r = 0; r < p.outputs.size(); ++r) mid.outputs.push_back((p.outputs[r] + q.outputs[r]) / 2);
  mid.origin = VirtualOrigin{};
  return mid;
}

// True iff the midpoint of members p and q lies on the frontier of the
// technology spanned by `efficient` (radial input score exactly 1).
inline bool midpoint_coplanar(const CandidatePool& pool, std::size_t p, std::size_t q,
                              std::span<const Dmu> efficient) {
  if (p == q) return true;
  return radial_input(efficient, midpoint(pool.members[p], pool.members[q])).score == 1;
}

inline bool midpoint_coplanar(const CandidatePool& pool, std::size_t p, std::size_t q) {
  return midpoint_coplanar(pool, p, q, pool.efficient());
}

class CoplanarityGraph {
 public:
  explicit CoplanarityGraph(std::size_t size = 0) : adjacent_(size, std::vector<bool>(size, false)) {
    for (std::size_t j = 0; j < size; ++j) adjacent_[j][j] = true;
  }

  std::size_t size() const { return adjacent_.size(); }
  bool coplanar(std::size_t p, std::size_t q) const { return adjacent_[p][q]; }

  void connect(std::size_t p, std::size_t q) {
    adjacent_[p][q] = true;
    adjacent_[q][p] = true;
  }

  // G_j, ascending, including j itself.
  std::vector<std::size_t> neighborhood(std::size_t j) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < size(); ++i) {
      if (adjacent_[j][i]) out.push_back(i);
    }
    return out;
  }

 private:
  std::vector<std::vector<bool>> adjacent_;
};

inline CoplanarityGraph coplanarity_sets(const CandidatePool& pool) {
  CoplanarityGraph graph(pool.size());
  for (std::size_t p = 0; p < pool.size(); ++p) {
    for (std::size_t q = p + 1; q < pool.size(); ++q) {
      if (midpoint_coplanar(pool, p, q)) graph.connect(p, q);
    }
  }
  return graph;
}

// Visits every clique of exactly `size` vertices in lexicographic order.
inline void for_each_candidate_set(const CoplanarityGraph& graph, std::size_t size,
                                   const std::function<void(const std::vector<std::size_t>&)>& visit) {
  if (size == 0) throw std::invalid_argument("candidate set size must be positive");
  std::vector<std::size_t> chosen;
  std::function<void(const std::vector<std::size_t>&)> extend = [&](const std::vector<std::size_t>& candidates) {
    if (chosen.size() == size) {
      visit(chosen);
      return;
    }
    const std::size_t needed = size - chosen.size();
    for (std::size_t a = 0; a + needed <= candidates.size(); ++a) {
      const std::size_t v = candidates[a];
      std::vector<std::size_t> next;
      for (std::size_t b = a + 1; b < candidates.size(); ++b) {
        if (graph.coplanar(v, candidates[b])) next.push_back(candidates[b]);
      }
      if (next.size() + 1 < needed) continue;
      chosen.push_back(v);
      extend(next);
      chosen.pop_back();
    }
  };
  std::vector<std::size_t> all(graph.size());
  for (std::size_t j = 0; j < all.size(); ++j) all[j] = j;
  extend(all);
}

inline std::vector<std::vector<std::size_t>> enumerate_candidate_sets(const CoplanarityGraph& graph,
                                                                      std::size_t size) {
  std::vector<std::vector<std::size_t>> out;
  for_each_candidate_set(graph, size, [&](const std::vector<std::size_t>& d) { out.push_back(d); });
  return out;
}

// Hyperplane through the origin and the given points: component c is the
// signed cofactor of the symbolic first row in the determinant
//   | z_1 ... z_N |
//   |    rows     | = 0.
// Returns nothing when every cofactor vanishes.
inline std::optional<RationalVector> hyperplane_through(std::span<const RationalVector> points) {
  if (points.empty()) throw std::invalid_argument("hyperplane needs at least one point");
  const std::size_t dim = points.front().size();
  if (points.size() + 1 != dim) throw std::invalid_argument("hyperplane needs dimension - 1 points");
  RationalVector normal(dim);
  bool nonzero = false;
  for (std::size_t c = 0; c < dim; ++c) {
    std::vector<RationalVector> minor;
    minor.reserve(points.size());
    for (const auto& z : points) {
      RationalVector row;
      row.reserve(dim - 1);
      for (std::size_t j = 0; j < dim; ++j) {
        if (j != c) row.push_back(z[j]);
      }
      minor.push_back(std::move(row));
    }
    normal[c] = determinant(std::move(minor));
    if (c % 2 == 1) normal[c] = -normal[c];
    if (normal[c] != 0) nonzero = true;
  }
  if (!nonzero) return std::nullopt;
  return normal;
}

inline std::optional<RationalVector> hyperplane_through(const CandidatePool& pool,
                                                        std::span<const std::size_t> members) {
  std::vector<RationalVector> points;
  points.reserve(members.size());
  for (std::size_t j : members) points.push_back(pool.members[j].point());
  return hyperplane_through(points);
}

// Orients P so that P.w < 0 and returns it iff it supports the technology:
// input block <= 0, output block >= 0, and P.z <= 0 for every pool member.
inline std::optional<RationalVector> supporting_orientation(RationalVector p, const CandidatePool& pool,
                                                            const NegativeIdeal& w) {
  const int side = sign(dot(p, w.point));
  if (side == 0) return std::nullopt;
  if (side > 0) {
    for (auto& c : p) c = -c;
  }
  if (pool.members.empty()) return p;
  const std::size_t m = pool.members.front().inputs.size();
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i < m ? p[i] > 0 : p[i] < 0) return std::nullopt;
  }
  for (const Dmu& z : pool.members) {
    if (dot(p, z.point()) > 0) return std::nullopt;
  }
  return p;
}

inline bool support_test(const RationalVector& p, const CandidatePool& pool, const NegativeIdeal& w) {
  return supporting_orientation(p, pool, w).has_value();
}

enum class FacetKind { Weak, Strong };

inline std::string to_string(FacetKind k) { return k == FacetKind::Weak ? "weak" : "strong"; }

// Weak iff a virtual DMU lies on the hyperplane. A zero coefficient must
// accompany exactly that case; anything else is an internal error.
inline FacetKind label_facet(const RationalVector& p, std::span<const std::size_t> incidence,
                             const CandidatePool& pool) {
  const bool has_virtual =
      std::any_of(incidence.begin(), incidence.end(), [&](std::size_t j) { return pool.is_virtual(j); });
  const bool has_zero = std::any_of(p.begin(), p.end(), [](const Rational& c) { return c == 0; });
  if (has_virtual != has_zero) {
    std::string ids;
    for (std::size_t j : incidence) ids += (ids.empty() ? "" : ",") + pool.members[j].id;
    throw InternalConsistencyError(
        "facet through {" + ids + "}: " + (has_zero ? "has a zero coefficient but no virtual DMU"
                                                    : "contains a virtual DMU but no zero coefficient"));
  }
  return has_virtual ? FacetKind::Weak : FacetKind::Strong;
}

// Scales a nonzero rational vector to coprime integers, preserving sign.
inline IntegerVector canonicalize(const RationalVector& p) {
  Integer lcm = 1;
  bool nonzero = false;
  for (const auto& c : p) {
    if (c != 0) nonzero = true;
    lcm = boost::multiprecision::lcm(lcm, Integer(boost::multiprecision::denominator(c)));
  }
  if (!nonzero) throw std::invalid_argument("cannot canonicalize the zero vector");
  IntegerVector out;
  out.reserve(p.size());
  Integer g = 0;
  for (const auto& c : p) {
    Integer v = boost::multiprecision::numerator(c) * (lcm / boost::multiprecision::denominator(c));
    g = boost::multiprecision::gcd(g, Integer(abs(v)));
    out.push_back(std::move(v));
  }
  for (auto& v : out) v /= g;
  return out;
}

struct Hyperplane {
  IntegerVector coefficients;             // (input block, output block)
  std::vector<std::size_t> incidence;     // pool indices with P.z = 0
  FacetKind kind = FacetKind::Strong;
  std::vector<std::vector<std::size_t>> witnesses;  // candidate sets producing it
};

struct FacetReport {
  Dataset dataset;
  Classification classification;
  CandidatePool pool;
  CoplanarityGraph graph;
  NegativeIdeal ideal;
  std::vector<Hyperplane> facets;  // sorted by coefficients
  std::vector<std::size_t> weak_membership;    // per pool member
  std::vector<std::size_t> strong_membership;  // per pool member

  std::size_t count(FacetKind k) const {
    return static_cast<std::size_t>(
        std::count_if(facets.begin(), facets.end(), [&](const Hyperplane& h) { return h.kind == k; }));
  }
};

namespace detail {

using CandidateSource =
    std::function<void(const CoplanarityGraph&, std::size_t, const std::function<void(const std::vector<std::size_t>&)>&)>;

// Steps shared by the coplanarity-driven search and the exhaustive oracle;
// only the source of candidate sets differs.
inline FacetReport assemble_facets(const Dataset& d, const SearchConfig& cfg, const CandidateSource& candidates,
                                   bool build_graph) {
  cfg.check();
  FacetReport report{d, classify(d), {}, CoplanarityGraph{}, negative_ideal(d), {}, {}, {}};
  report.pool = generate_virtuals(d, report.classification, cfg);
  const CandidatePool& pool = report.pool;
  report.graph = build_graph ? coplanarity_sets(pool) : CoplanarityGraph(pool.size());

  const std::size_t dim = d.m() + d.s();
  std::vector<RationalVector> points;
  for (const Dmu& z : pool.members) points.push_back(z.point());

  std::map<IntegerVector, Hyperplane> found;
  candidates(report.graph, dim - 1, [&](const std::vector<std::size_t>& subset) {
    std::vector<RationalVector> rows;
    for (std::size_t j : subset) rows.push_back(points[j]);
    auto normal = hyperplane_through(rows);
    if (!normal) return;
    auto oriented = supporting_orientation(std::move(*normal), pool, report.ideal);
    if (!oriented) return;
    IntegerVector key = canonicalize(*oriented);
    auto it = found.find(key);
    if (it == found.end()) {
      Hyperplane h;
      h.coefficients = key;
      std::vector<RationalVector> on_plane;
      for (std::size_t j = 0; j < pool.size(); ++j) {
        if (dot(*oriented, points[j]) == 0) {
          h.incidence.push_back(j);
          on_plane.push_back(points[j]);
        }
      }
      if (rank(std::move(on_plane)) != dim - 1) return;
      h.kind = label_facet(*oriented, h.incidence, pool);
      it = found.emplace(std::move(key), std::move(h)).first;
    }
    it->second.witnesses.push_back(subset);
  });

  report.weak_membership.assign(pool.size(), 0);
  report.strong_membership.assign(pool.size(), 0);
  for (auto& [key, h] : found) {
    for (std::size_t j : h.incidence) {
      ++(h.kind == FacetKind::Weak ? report.weak_membership : report.strong_membership)[j];
    }
    report.facets.push_back(std::move(h));
  }
  return report;
}

}  // namespace detail

inline FacetReport find_facets(const Dataset& d, const SearchConfig& cfg = {}) {
  return detail::assemble_facets(d, cfg, for_each_candidate_set, true);
}

}  // namespace dea
