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
#include <cstdint>
#include <functional>
#include <limits>
#include <set>
#include <string>
#include <vector>

#include "dea/dataset.hpp"
#include "dea/error.hpp"
#include "dea/facet_search.hpp"
#include "dea/models.hpp"
#include "dea/rational.hpp"

// Independent routes to the facet set, used to cross-check find_facets.
namespace dea {

struct OracleLimits {
  std::uint64_t max_subsets = 2'000'000;  // brute force: C(|G|, m + s - 1)
  std::size_t max_dimension = 8;           // double description: m + s
};

// Saturating binomial coefficient.
inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    const std::uint64_t factor = n - k + i;
    if (r > kMax / factor) return kMax;
    r = r * factor / i;  // exact: r * factor is divisible by i here
  }
  return r;
}

// Same pipeline as find_facets, but every (m + s - 1)-subset of the pool is a
// candidate; the coplanarity graph is never consulted.
inline FacetReport brute_force_facets(const Dataset& d, const SearchConfig& cfg = {}, OracleLimits limits = {}) {
  auto all_subsets = [&](const CoplanarityGraph& graph, std::size_t size,
                         const std::function<void(const std::vector<std::size_t>&)>& visit) {
    const std::size_t total = graph.size();
    if (binomial(total, size) > limits.max_subsets) {
      throw GuardExceeded("brute-force oracle refuses C(" + std::to_string(total) + ", " + std::to_string(size) +
                          ") candidate sets (cap " + std::to_string(limits.max_subsets) + ")");
    }
    if (size > total) return;
    std::vector<std::size_t> subset(size);
    for (std::size_t i = 0; i < size; ++i) subset[i] = i;
    while (true) {
      visit(subset);
      std::size_t i = size;
      while (i > 0 && subset[i - 1] == total - size + i - 1) --i;
      if (i == 0) return;
      ++subset[i - 1];
      for (std::size_t j = i; j < size; ++j) subset[j] = subset[j - 1] + 1;
    }
  };
  return detail::assemble_facets(d, cfg, all_subsets, false);
}

namespace detail {

struct Ray {
  RationalVector direction;
  std::vector<bool> tight;  // over constraints added so far
};

inline RationalVector primitive(const RationalVector& r) {
  IntegerVector ints = canonicalize(r);
  return RationalVector(ints.begin(), ints.end());
}

}  // namespace detail

// Extreme rays of {P = (-v, u) : v >= 0, u >= 0, P.z_j <= 0 for j in E},
// computed by the double description method with constraints inserted in a
// fixed order (sign constraints, then E in classification order). Rays whose
// face touches no efficient DMU, or that fail P.w < 0, are dropped.
inline std::vector<IntegerVector> dual_cone_facets(const Dataset& d, const Classification& c,
                                                   OracleLimits limits = {}) {
  const std::size_t m = d.m(), dim = d.m() + d.s();
  if (dim > limits.max_dimension) {
    throw GuardExceeded("double description limited to m + s <= " + std::to_string(limits.max_dimension));
  }
  std::vector<RationalVector> constraints;  // a . P <= 0
  for (std::size_t i = 0; i < dim; ++i) {
    RationalVector a(dim);
    a[i] = i < m ? 1 : -1;
    constraints.push_back(std::move(a));
  }
  const std::size_t first_dmu = constraints.size();
  for (std::size_t k : c.efficient) constraints.push_back(d[k].point());

  // The sign constraints alone cut out an orthant with unit extreme rays.
  std::vector<detail::Ray> rays;
  for (std::size_t i = 0; i < dim; ++i) {
    detail::Ray ray{RationalVector(dim), std::vector<bool>(constraints.size(), false)};
    ray.direction[i] = i < m ? -1 : 1;
    for (std::size_t j = 0; j < dim; ++j) ray.tight[j] = (j != i);
    rays.push_back(std::move(ray));
  }

  for (std::size_t a = first_dmu; a < constraints.size(); ++a) {
    const RationalVector& row = constraints[a];
    std::vector<std::size_t> positive, negative;
    std::vector<Rational> value(rays.size());
    for (std::size_t r = 0; r < rays.size(); ++r) {
      value[r] = dot(row, rays[r].direction);
      if (value[r] > 0) positive.push_back(r);
      else if (value[r] < 0) negative.push_back(r);
      else rays[r].tight[a] = true;
    }
    std::vector<detail::Ray> next;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      if (value[r] <= 0) next.push_back(rays[r]);
    }
    for (std::size_t p : positive) {
      for (std::size_t n : negative) {
        std::vector<bool> common(constraints.size(), false);
        std::size_t count = 0;
        for (std::size_t j = 0; j < a; ++j) {
          if (rays[p].tight[j] && rays[n].tight[j]) {
            common[j] = true;
            ++count;
          }
        }
        if (count + 2 < dim) continue;
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
          if (r == p || r == n) continue;
          bool contains = true;
          for (std::size_t j = 0; j < a && contains; ++j) {
            if (common[j] && !rays[r].tight[j]) contains = false;
          }
          if (contains) adjacent = false;
        }
        if (!adjacent) continue;
        RationalVector dir(dim);
        for (std::size_t i = 0; i < dim; ++i) {
          dir[i] = value[p] * rays[n].direction[i] - value[n] * rays[p].direction[i];
        }
        common[a] = true;
        next.push_back({detail::primitive(dir), std::move(common)});
      }
    }
    rays = std::move(next);
  }

  const NegativeIdeal w = negative_ideal(d);
  std::set<IntegerVector> out;
  for (const auto& ray : rays) {
    bool touches_dmu = false;
    for (std::size_t a = first_dmu; a < constraints.size(); ++a) touches_dmu = touches_dmu || ray.tight[a];
    if (!touches_dmu) continue;
    if (dot(ray.direction, w.point) >= 0) continue;
    std::vector<RationalVector> tight_generators;
    for (std::size_t i = 0; i < dim; ++i) {
      if (ray.direction[i] == 0) {
        RationalVector e(dim);
        e[i] = i < m ? 1 : -1;
        tight_generators.push_back(std::move(e));
      }
    }
    for (std::size_t a = first_dmu; a < constraints.size(); ++a) {
      if (ray.tight[a]) tight_generators.push_back(constraints[a]);
    }
    if (rank(std::move(tight_generators)) != dim - 1) continue;
    out.insert(canonicalize(ray.direction));
  }
  return {out.begin(), out.end()};
}

}  // namespace dea
