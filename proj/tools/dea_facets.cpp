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

// dea-facets: classify DMUs and enumerate the facets of the CCR technology.
//
//   dea-facets analyze <csv> [--json FILE]
//   dea-facets facets  <csv> [--alpha R] [--gamma R] [--json FILE] [--witnesses]
//   dea-facets verify  <csv> [--alpha R] [--gamma R]
//
// Exit codes: 0 success, 1 input error, 2 internal inconsistency,
// 3 oracle disagreement.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <set>
#include <sstream>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "dea/dataset.hpp"
#include "dea/error.hpp"
#include "dea/facet_search.hpp"
#include "dea/models.hpp"
#include "dea/oracle.hpp"
#include "dea/report.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kInputError = 1;
constexpr int kInternalError = 2;
constexpr int kDisagreement = 3;

struct Options {
  std::string path;
  std::string alpha = "1";
  std::string gamma = "1";
  std::string json_path;
  bool witnesses = false;
};

dea::Dataset load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw dea::InputError("cannot open '" + path + "'");
  try {
    return dea::parse_dataset(in);
  } catch (const dea::InputError& e) {
    throw dea::InputError(path + ": " + e.what());
  }
}

dea::SearchConfig config(const Options& o) {
  dea::SearchConfig cfg;
  auto alpha = dea::parse_rational(o.alpha);
  auto gamma = dea::parse_rational(o.gamma);
  if (!alpha) throw dea::InputError("alpha must be a rational number, got '" + o.alpha + "'");
  if (!gamma) throw dea::InputError("gamma must be a rational number, got '" + o.gamma + "'");
  cfg.alpha = *alpha;
  cfg.gamma = *gamma;
  cfg.check();
  return cfg;
}

void write_json(const std::string& path, const nlohmann::ordered_json& doc) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw dea::InputError("cannot write '" + path + "'");
  out << doc.dump(2) << "\n";
}

int analyze(const Options& o, std::ostream& out) {
  dea::Dataset d = load(o.path);
  dea::Classification c = dea::classify(d);
  out << dea::render_classification(d, c);
  if (!o.json_path.empty()) write_json(o.json_path, dea::analysis_json(d, c));
  return kOk;
}

int facets(const Options& o, std::ostream& out) {
  dea::SearchConfig cfg = config(o);
  dea::FacetReport r = dea::find_facets(load(o.path), cfg);
  out << dea::render_facets(r, o.witnesses);
  if (!o.json_path.empty()) write_json(o.json_path, dea::facet_report_json(r, o.witnesses));
  return kOk;
}

std::string vector_text(const dea::IntegerVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].str();
  return s + ")";
}

int verify(const Options& o, std::ostream& out) {
  dea::SearchConfig cfg = config(o);
  dea::Dataset d = load(o.path);
  // The exhaustive oracle goes first so that its size guard trips before any real work.
  dea::FacetReport brute = dea::brute_force_facets(d, cfg);
  dea::FacetReport search = dea::find_facets(d, cfg);

  using Labeled = std::pair<dea::IntegerVector, dea::FacetKind>;
  std::set<Labeled> from_search, from_brute;
  for (const auto& h : search.facets) from_search.emplace(h.coefficients, h.kind);
  for (const auto& h : brute.facets) from_brute.emplace(h.coefficients, h.kind);

  bool agree = true;
  auto report = [&](const std::string& label, const auto& only) {
    for (const auto& item : only) {
      agree = false;
      if constexpr (std::is_same_v<std::decay_t<decltype(item)>, Labeled>) {
        out << label << vector_text(item.first) << " [" << dea::to_string(item.second) << "]\n";
      } else {
        out << label << vector_text(item) << "\n";
      }
    }
  };
  auto difference = [](const auto& a, const auto& b) {
    std::vector<typename std::decay_t<decltype(a)>::value_type> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
  };
  report("only in coplanarity search: ", difference(from_search, from_brute));
  report("only in exhaustive search:  ", difference(from_brute, from_search));

  if (d.m() + d.s() <= 6) {
    auto dual = dea::dual_cone_facets(d, search.classification);
    std::set<dea::IntegerVector> from_dual(dual.begin(), dual.end()), coefficients;
    for (const auto& h : search.facets) coefficients.insert(h.coefficients);
    report("only in coplanarity search: ", difference(coefficients, from_dual));
    report("only in dual cone:          ", difference(from_dual, coefficients));
  } else {
    out << "dual cone check skipped (m + s > 6)\n";
  }

  if (!agree) {
    out << "oracles disagree\n";
    return kDisagreement;
  }
  out << "all oracles agree (" << search.facets.size() << " facets)\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Facets of the constant-returns-to-scale DEA technology"};
  app.require_subcommand(1);
  Options o;

  auto* analyze_cmd = app.add_subcommand("analyze", "Classify DMUs and report per-axis super-efficiency");
  auto* facets_cmd = app.add_subcommand("facets", "Enumerate weak and strong defining hyperplanes");
  auto* verify_cmd = app.add_subcommand("verify", "Cross-check the facet search against independent oracles");
  for (auto* cmd : {analyze_cmd, facets_cmd, verify_cmd}) {
    cmd->add_option("path", o.path, "DMU data in CSV form")->required();
  }
  for (auto* cmd : {facets_cmd, verify_cmd}) {
    cmd->add_option("--alpha", o.alpha, "Input displacement for virtual DMUs (positive rational)");
    cmd->add_option("--gamma", o.gamma, "Output displacement for virtual DMUs (positive rational)");
  }
  analyze_cmd->add_option("--json", o.json_path, "Write a JSON report to FILE");
  facets_cmd->add_option("--json", o.json_path, "Write a JSON report to FILE");
  facets_cmd->add_flag("--witnesses", o.witnesses, "List the candidate sets behind each facet");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  // Output is buffered and flushed once so that a failure never leaves a partial report.
  std::ostringstream out;
  int code = kOk;
  try {
    if (analyze_cmd->parsed()) code = analyze(o, out);
    else if (facets_cmd->parsed()) code = facets(o, out);
    else code = verify(o, out);
  } catch (const dea::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const dea::GuardExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const dea::InternalConsistencyError& e) {
    std::cerr << "internal inconsistency: " << e.what() << "\n";
    return kInternalError;
  }
  std::cout << out.str();
  return code;
}
