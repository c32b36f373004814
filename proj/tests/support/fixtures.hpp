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
#include <fstream>
#include <random>
#include <string>
#include <vector>

#include "dea/dataset.hpp"
#include "dea/rational.hpp"

#ifndef DEA_DATA_DIR
#error "DEA_DATA_DIR must point at the fixture directory"
#endif

namespace dea::testing {

inline Dataset load_fixture(const std::string& name) {
  std::ifstream in(std::string(DEA_DATA_DIR) + "/" + name);
  if (!in) throw std::runtime_error("missing fixture " + name);
  return parse_dataset(in);
}

// Two inputs, one output, four DMUs.
inline Dataset small_example() { return load_fixture("small.csv"); }
// Two inputs, two outputs, five DMUs.
inline Dataset two_by_two_example() { return load_fixture("two_by_two.csv"); }
// Twenty bank branches, three inputs, three outputs.
inline Dataset bank() { return load_fixture("bank_branches.csv"); }

inline std::size_t index_of(const Dataset& d, const std::string& id) {
  for (std::size_t j = 0; j < d.n(); ++j) {
    if (d[j].id == id) return j;
  }
  throw std::out_of_range("no DMU " + id);
}

inline RationalVector ints(std::initializer_list<long> values) {
  RationalVector out;
  for (long v : values) out.emplace_back(v);
  return out;
}

inline IntegerVector integers(std::initializer_list<long> values) {
  IntegerVector out;
  for (long v : values) out.emplace_back(v);
  return out;
}

inline Dmu make_dmu(std::string id, RationalVector inputs, RationalVector outputs) {
  return Dmu{std::move(id), std::move(inputs), std::move(outputs), ObservedOrigin{}};
}

inline Dataset make_dataset(std::size_t m, std::size_t s, std::vector<Dmu> dmus) {
  std::vector<std::string> in, out;
  for (std::size_t i = 0; i < m; ++i) in.push_back("x" + std::to_string(i + 1));
  for (std::size_t r = 0; r < s; ++r) out.push_back("y" + std::to_string(r + 1));
  return Dataset(std::move(in), std::move(out), std::move(dmus));
}

// Small positive integer data with no two proportional DMUs.
inline Dataset random_dataset(std::mt19937& rng, std::size_t max_m = 3, std::size_t max_s = 3,
                              std::size_t max_n = 8, int max_value = 9) {
  std::uniform_int_distribution<std::size_t> pick_m(1, max_m), pick_s(1, max_s), pick_n(1, max_n);
  std::uniform_int_distribution<int> value(1, max_value);
  while (true) {
    const std::size_t m = pick_m(rng), s = pick_s(rng), n = pick_n(rng);
    std::vector<Dmu> dmus;
    for (std::size_t j = 0; j < n; ++j) {
      RationalVector x, y;
      for (std::size_t i = 0; i < m; ++i) x.emplace_back(value(rng));
      for (std::size_t r = 0; r < s; ++r) y.emplace_back(value(rng));
      dmus.push_back(make_dmu("R" + std::to_string(j + 1), std::move(x), std::move(y)));
    }
    Dataset d = make_dataset(m, s, std::move(dmus));
    if (validate(d).empty()) return d;
  }
}

}  // namespace dea::testing
