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
#include <istream>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_set>
#include <variant>
#include <vector>

#include "dea/error.hpp"
#include "dea/rational.hpp"

namespace dea {

enum class AxisKind { Input, Output };

struct ObservedOrigin {
  bool operator==(const ObservedOrigin&) const = default;
};

// A point built from an extreme DMU by raising one input or lowering one output.
struct VirtualOrigin {
  std::string parent;
  AxisKind kind = AxisKind::Input;
  std::size_t axis = 0;  // 0-based within its block
  bool operator==(const VirtualOrigin&) const = default;
};

using Origin = std::variant<ObservedOrigin, VirtualOrigin>;

struct Dmu {
  std::string id;
  RationalVector inputs;
  RationalVector outputs;
  Origin origin = ObservedOrigin{};

  bool is_virtual() const { return std::holds_alternative<VirtualOrigin>(origin); }

  // Coordinates in (input block, output block) order.
  RationalVector point() const {
    RationalVector z = inputs;
    z.insert(z.end(), outputs.begin(), outputs.end());
    return z;
  }

  bool operator==(const Dmu&) const = default;
};

class Dataset {
 public:
  Dataset() = default;
  Dataset(std::vector<std::string> input_names, std::vector<std::string> output_names,
          std::vector<Dmu> dmus)
      : input_names_(std::move(input_names)),
        output_names_(std::move(output_names)),
        dmus_(std::move(dmus)) {
    if (input_names_.empty()) throw InputError("dataset has no input column");
    if (output_names_.empty()) throw InputError("dataset has no output column");
    if (dmus_.empty()) throw InputError("empty dataset");
    std::unordered_set<std::string> ids;
    for (const Dmu& d : dmus_) {
      if (d.inputs.size() != m() || d.outputs.size() != s()) {
        throw InputError("DMU " + d.id + " has the wrong number of inputs or outputs");
      }
      if (!ids.insert(d.id).second) throw InputError("duplicate DMU id '" + d.id + "'");
    }
  }

  std::size_t n() const { return dmus_.size(); }
  std::size_t m() const { return input_names_.size(); }
  std::size_t s() const { return output_names_.size(); }

  const std::vector<Dmu>& dmus() const { return dmus_; }
  const Dmu& operator[](std::size_t j) const { return dmus_[j]; }
  const std::vector<std::string>& input_names() const { return input_names_; }
  const std::vector<std::string>& output_names() const { return output_names_; }

  bool operator==(const Dataset&) const = default;

 private:
  std::vector<std::string> input_names_;
  std::vector<std::string> output_names_;
  std::vector<Dmu> dmus_;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

inline std::vector<std::string_view> split_commas(std::string_view line) {
  std::vector<std::string_view> cells;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      cells.push_back(trim(line.substr(start)));
      break;
    }
    cells.push_back(trim(line.substr(start, comma - start)));
    start = comma + 1;
  }
  return cells;
}

}  // namespace detail

// Reads the `dmu,in_*,out_*` CSV layout. Inputs and outputs may be
// interleaved; their relative order fixes the axis numbering.
inline Dataset parse_dataset(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++line_no;
      if (!detail::trim(line).empty()) return true;
    }
    return false;
  };

  if (!next_line()) throw InputError("malformed header: input is empty");
  if (line.size() >= 3 && line.compare(0, 3, "\xEF\xBB\xBF") == 0) line.erase(0, 3);
  std::vector<std::string> header;
  for (std::string_view cell : detail::split_commas(line)) header.emplace_back(cell);
  if (header.front() != "dmu") throw InputError("malformed header: first column must be 'dmu'");

  enum class Column { Input, Output };
  std::vector<Column> layout;
  std::vector<std::string> input_names, output_names;
  for (std::size_t c = 1; c < header.size(); ++c) {
    std::string_view name = header[c];
    if (name.starts_with("in_") && name.size() > 3) {
      layout.push_back(Column::Input);
      input_names.emplace_back(name.substr(3));
    } else if (name.starts_with("out_") && name.size() > 4) {
      layout.push_back(Column::Output);
      output_names.emplace_back(name.substr(4));
    } else {
      throw InputError("malformed header: column '" + std::string(name) +
                       "' must start with 'in_' or 'out_'");
    }
  }
  if (input_names.empty()) throw InputError("no input column");
  if (output_names.empty()) throw InputError("no output column");

  std::vector<Dmu> dmus;
  std::unordered_set<std::string> ids;
  while (next_line()) {
    auto cells = detail::split_commas(line);
    if (cells.size() != header.size()) {
      throw InputError("line " + std::to_string(line_no) + ": expected " +
                       std::to_string(header.size()) + " cells, found " +
                       std::to_string(cells.size()));
    }
    Dmu dmu;
    dmu.id = std::string(cells[0]);
    if (dmu.id.empty()) throw InputError("line " + std::to_string(line_no) + ": empty DMU id");
    if (!ids.insert(dmu.id).second) throw InputError("duplicate DMU id '" + dmu.id + "'");
    for (std::size_t c = 1; c < cells.size(); ++c) {
      auto value = parse_decimal(cells[c]);
      if (!value) {
        throw InputError("line " + std::to_string(line_no) + ": DMU " + dmu.id +
                         ": non-numeric cell '" + std::string(cells[c]) + "' in column '" + header[c] + "'");
      }
      (layout[c - 1] == Column::Input ? dmu.inputs : dmu.outputs).push_back(std::move(*value));
    }
    dmus.push_back(std::move(dmu));
  }
  if (dmus.empty()) throw InputError("empty dataset");
  return Dataset(std::move(input_names), std::move(output_names), std::move(dmus));
}

inline Dataset parse_dataset(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_dataset(in);
}

// Writes inputs first, then outputs. Every stored value came from a decimal
// literal, so its reduced denominator divides a power of ten and renders exactly.
inline std::string to_csv(const Dataset& d) {
  auto decimal = [](const Rational& v) {
    Integer num = boost::multiprecision::numerator(v);
    Integer den = boost::multiprecision::denominator(v);
    std::size_t places = 0;
    Integer scale = 1;
    while (scale % den != 0) {
      scale *= 10;
      ++places;
      if (places > 4096) throw InputError("value " + to_string(v) + " has no finite decimal form");
    }
    std::string digits = Integer(num * (scale / den)).str();
    if (places == 0) return digits;
    if (digits.size() <= places) digits.insert(0, places - digits.size() + 1, '0');
    digits.insert(digits.size() - places, ".");
    return digits;
  };
  std::string out = "dmu";
  for (const auto& name : d.input_names()) out += ",in_" + name;
  for (const auto& name : d.output_names()) out += ",out_" + name;
  out += "\n";
  for (const Dmu& dmu : d.dmus()) {
    out += dmu.id;
    for (const auto& v : dmu.inputs) out += "," + decimal(v);
    for (const auto& v : dmu.outputs) out += "," + decimal(v);
    out += "\n";
  }
  return out;
}

struct Violation {
  enum class Kind { Positivity, ProportionalPair };
  Kind kind;
  std::string dmu;
  std::string other;  // second member of a proportional pair
  AxisKind axis_kind = AxisKind::Input;
  std::size_t axis = 0;
  std::string message;
};

namespace detail {

// True iff b = t * a for some t > 0 (t = 1 included).
inline bool proportional(const RationalVector& a, const RationalVector& b) {
  std::size_t pivot = 0;
  while (pivot < a.size() && a[pivot] == 0) ++pivot;
  if (pivot == a.size()) return false;
  Rational t = b[pivot] / a[pivot];
  if (t <= 0) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (b[i] != t * a[i]) return false;
  }
  return true;
}

}  // namespace detail

inline std::vector<Violation> validate(const Dataset& d) {
  std::vector<Violation> out;
  for (const Dmu& dmu : d.dmus()) {
    for (std::size_t i = 0; i < d.m(); ++i) {
      if (dmu.inputs[i] <= 0) {
        out.push_back({Violation::Kind::Positivity, dmu.id, {}, AxisKind::Input, i,
                       "DMU " + dmu.id + ": input " + d.input_names()[i] + " must be positive"});
      }
    }
    for (std::size_t r = 0; r < d.s(); ++r) {
      if (dmu.outputs[r] <= 0) {
        out.push_back({Violation::Kind::Positivity, dmu.id, {}, AxisKind::Output, r,
                       "DMU " + dmu.id + ": output " + d.output_names()[r] + " must be positive"});
      }
    }
  }
  for (std::size_t a = 0; a < d.n(); ++a) {
    const auto za = d[a].point();
    for (std::size_t b = a + 1; b < d.n(); ++b) {
      if (detail::proportional(za, d[b].point())) {
        out.push_back({Violation::Kind::ProportionalPair, d[a].id, d[b].id, AxisKind::Input, 0,
                       "DMUs " + d[a].id + " and " + d[b].id + " are proportional"});
      }
    }
  }
  return out;
}

// Componentwise worst observed point: max of each input, min of each output.
struct NegativeIdeal {
  RationalVector point;
};

inline NegativeIdeal negative_ideal(const Dataset& d) {
  if (d.n() == 0) throw InputError("empty dataset");
  RationalVector w = d[0].point();
  for (const Dmu& dmu : d.dmus()) {
    for (std::size_t i = 0; i < d.m(); ++i) w[i] = std::max(w[i], dmu.inputs[i]);
    for (std::size_t r = 0; r < d.s(); ++r) w[d.m() + r] = std::min(w[d.m() + r], dmu.outputs[r]);
  }
  return {std::move(w)};
}

}  // namespace dea
