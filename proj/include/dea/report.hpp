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
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "dea/dataset.hpp"
#include "dea/facet_search.hpp"
#include "dea/models.hpp"

// Text and JSON renderings of classifications and facet reports. Numbers are
// always exact: integers, or rationals written p/q.
namespace dea {

inline constexpr int kReportSchema = 1;

// "-23*x1 + 6*y1 + 1*y2 = 0": zero terms dropped, inputs first.
inline std::string equation(const IntegerVector& coefficients, const Dataset& d) {
  std::string out;
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    const Integer& c = coefficients[i];
    if (c == 0) continue;
    const std::string& name = i < d.m() ? d.input_names()[i] : d.output_names()[i - d.m()];
    Integer magnitude = abs(c);
    if (out.empty()) {
      out = (c < 0 ? "-" : "") + magnitude.str() + "*" + name;
    } else {
      out += (c < 0 ? " - " : " + ") + magnitude.str() + "*" + name;
    }
  }
  return out + " = 0";
}

inline std::string axis_label(const AxisResult& a) { return a.feasible() ? "FES" : "INFES"; }

inline std::string render_classification(const Dataset& d, const Classification& c) {
  std::size_t width = 3;
  for (const Dmu& dmu : d.dmus()) width = std::max(width, dmu.id.size());
  auto pad = [](std::string s, std::size_t w) {
    if (s.size() < w) s.append(w - s.size(), ' ');
    return s;
  };

  std::ostringstream out;
  out << pad("DMU", width) << "  " << pad("theta", 12) << "  " << pad("slack", 12) << "  "
      << pad("status", 8) << "  extremity\n";
  for (std::size_t k = 0; k < d.n(); ++k) {
    const auto& dc = c.dmus[k];
    out << pad(d[k].id, width) << "  " << pad(to_string(dc.score.score), 12) << "  "
        << pad(to_string(dc.score.total_slack), 12) << "  " << pad(to_string(dc.status), 8) << "  ";
    if (dc.extremity) out << (*dc.extremity == Extremity::Extreme ? "extreme" : "non-extreme");
    else out << "-";
    out << "\n";
  }

  out << "\nsuper-efficiency by axis (l: input, q: output)\n";
  out << pad("DMU", width);
  for (std::size_t l = 0; l < d.m(); ++l) out << "  " << pad("l=" + std::to_string(l + 1), 5);
  for (std::size_t q = 0; q < d.s(); ++q) out << "  " << pad("q=" + std::to_string(q + 1), 5);
  out << "\n";
  for (std::size_t k : c.efficient) {
    const AxisFeasibility& axis = *c.dmus[k].axis;
    out << pad(d[k].id, width);
    for (const auto& a : axis.inputs) out << "  " << pad(axis_label(a), 5);
    for (const auto& a : axis.outputs) out << "  " << pad(axis_label(a), 5);
    out << "\n";
  }
  out << "\n" << c.efficient.size() << " of " << d.n() << " DMUs strong efficient\n";
  // Padding leaves trailing blanks on the last column.
  std::string text = out.str(), trimmed;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    std::string row = text.substr(start, end - start);
    row.erase(row.find_last_not_of(' ') + 1);
    trimmed += row + "\n";
    start = end + 1;
  }
  return trimmed;
}

inline std::string render_facets(const FacetReport& r, bool witnesses) {
  std::ostringstream out;
  for (const Hyperplane& h : r.facets) {
    out << equation(h.coefficients, r.dataset) << " [" << to_string(h.kind) << "] on:";
    for (std::size_t j : h.incidence) out << " " << r.pool.members[j].id;
    out << "\n";
    if (witnesses) {
      for (const auto& w : h.witnesses) {
        out << "    from {";
        for (std::size_t i = 0; i < w.size(); ++i) out << (i ? ", " : "") << r.pool.members[w[i]].id;
        out << "}\n";
      }
    }
  }
  out << r.count(FacetKind::Weak) << " weak, " << r.count(FacetKind::Strong) << " strong\n";
  return out.str();
}

namespace detail {

// JSON integers are 64-bit here; anything wider is written as a digit string.
inline nlohmann::ordered_json integer_json(const Integer& v) {
  static const Integer lo = std::numeric_limits<std::int64_t>::min();
  static const Integer hi = std::numeric_limits<std::int64_t>::max();
  if (v >= lo && v <= hi) return v.convert_to<std::int64_t>();
  return v.str();
}

}  // namespace detail

inline nlohmann::ordered_json classification_json(const Dataset& d, const Classification& c) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (std::size_t k = 0; k < d.n(); ++k) {
    const auto& dc = c.dmus[k];
    nlohmann::ordered_json row;
    row["id"] = d[k].id;
    row["status"] = to_string(dc.status);
    if (dc.extremity) row["extreme"] = *dc.extremity == Extremity::Extreme;
    else row["extreme"] = nullptr;
    if (dc.axis) {
      nlohmann::ordered_json axis;
      axis["inputs"] = nlohmann::ordered_json::array();
      axis["outputs"] = nlohmann::ordered_json::array();
      for (const auto& a : dc.axis->inputs) axis["inputs"].push_back(axis_label(a));
      for (const auto& a : dc.axis->outputs) axis["outputs"].push_back(axis_label(a));
      row["axis"] = std::move(axis);
    } else {
      row["axis"] = nullptr;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

inline nlohmann::ordered_json analysis_json(const Dataset& d, const Classification& c) {
  nlohmann::ordered_json doc;
  doc["schema"] = kReportSchema;
  doc["classification"] = classification_json(d, c);
  return doc;
}

inline nlohmann::ordered_json facet_report_json(const FacetReport& r, bool witnesses) {
  nlohmann::ordered_json doc;
  doc["schema"] = kReportSchema;
  doc["classification"] = classification_json(r.dataset, r.classification);
  nlohmann::ordered_json facets = nlohmann::ordered_json::array();
  const std::size_t m = r.dataset.m();
  for (const Hyperplane& h : r.facets) {
    nlohmann::ordered_json f;
    f["coeff_in"] = nlohmann::ordered_json::array();
    f["coeff_out"] = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < h.coefficients.size(); ++i) {
      f[i < m ? "coeff_in" : "coeff_out"].push_back(detail::integer_json(h.coefficients[i]));
    }
    f["kind"] = to_string(h.kind);
    f["incident"] = nlohmann::ordered_json::array();
    for (std::size_t j : h.incidence) f["incident"].push_back(r.pool.members[j].id);
    if (witnesses) {
      f["witnesses"] = nlohmann::ordered_json::array();
      for (const auto& w : h.witnesses) {
        nlohmann::ordered_json ids = nlohmann::ordered_json::array();
        for (std::size_t j : w) ids.push_back(r.pool.members[j].id);
        f["witnesses"].push_back(std::move(ids));
      }
    }
    facets.push_back(std::move(f));
  }
  doc["facets"] = std::move(facets);
  return doc;
}

}  // namespace dea
