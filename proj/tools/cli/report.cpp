// Copyright 2026 The crsm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "report.hpp"

#include <algorithm>  // for max, sort, unique
#include <sstream>    // for ostringstream

namespace crsm::cli {

  NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(InputSummary, label, next)
  NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(MachineSummary, states, inputs)
  NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(
      ElementSummary, image, word, rank, idempotent, tail, period)
  NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(PeriodicitySummary,
                                     max_tail,
                                     elements_with_tail,
                                     periods)
  NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(DecompositionSummary,
                                     m,
                                     n,
                                     group_order,
                                     group_abelian,
                                     group_element_orders,
                                     reference,
                                     kind,
                                     idempotents_closed,
                                     sandwich,
                                     coords,
                                     branch,
                                     reset,
                                     permutation,
                                     components_verified,
                                     verified,
                                     verification_message)

  MachineSummary summarize(Machine const& m) {
    MachineSummary result{m.number_of_states(), {}};
    for (auto const& g : m.generators()) {
      result.inputs.push_back(
          {g.label, {g.transform.image().begin(), g.transform.image().end()}});
    }
    return result;
  }

  AnalysisReport make_report(Machine const& m, MachineReport const& r) {
    auto const&    s = r.closure;
    AnalysisReport report;
    report.machine      = summarize(m);
    report.closure_size = s.size();
    for (element_index x = 0; x < s.size(); ++x) {
      auto const& p = r.periodicity[x];
      report.elements.push_back({{s.element(x).image().begin(),
                                  s.element(x).image().end()},
                                 s.witness_string(x),
                                 s.rank(x),
                                 s.product(x, x) == x,
                                 p.tail,
                                 p.period});
      report.periodicity.max_tail = std::max(report.periodicity.max_tail, p.tail);
      report.periodicity.elements_with_tail += p.tail > 0 ? 1 : 0;
      report.periodicity.periods.push_back(p.period);
    }
    auto& periods = report.periodicity.periods;
    std::sort(periods.begin(), periods.end());
    periods.erase(std::unique(periods.begin(), periods.end()), periods.end());

    for (auto it = r.spectrum.counts.rbegin(); it != r.spectrum.counts.rend();
         ++it) {
      report.rank_spectrum.emplace_back(it->first, it->second);
    }
    report.simple           = r.simple;
    report.constant_rank    = r.constant_rank;
    report.idempotent_count = r.grid.idempotents.size();
    report.grid_rows        = r.grid.number_of_rows();
    report.grid_cols        = r.grid.number_of_cols();
    if (s.size() <= 2 || r.basic_type.label != BasicType::Label::other) {
      report.basic_type = r.basic_type.name();
    }
    report.minimal_ideal = r.minimal_ideal;

    if (r.decomposition) {
      auto const&          d       = r.decomposition->rees;
      auto const           summary = group_summary(s, d.group);
      DecompositionSummary out;
      out.m                    = d.m;
      out.n                    = d.n;
      out.group_order          = d.group.order();
      out.group_abelian        = summary.abelian;
      out.group_element_orders = summary.element_orders;
      out.reference            = d.reference;
      out.kind                 = to_string(d.kind);
      out.idempotents_closed   = d.idempotents_closed;
      out.sandwich             = d.sandwich;
      for (auto const& c : d.coords) {
        out.coords.push_back({c.row, c.col, c.group_element});
      }
      out.branch      = summarize(r.decomposition->components.branch);
      out.reset       = summarize(r.decomposition->components.reset);
      out.permutation = summarize(r.decomposition->components.permutation);
      out.components_verified  = r.decomposition->component_check.all();
      out.verified             = r.decomposition->verification.passed;
      out.verification_message = r.decomposition->verification.message;
      report.decomposition     = std::move(out);
    }
    return report;
  }

  void to_json(nlohmann::json& j, AnalysisReport const& r) {
    j = nlohmann::json{{"machine", r.machine},
                       {"closure_size", r.closure_size},
                       {"elements", r.elements},
                       {"rank_spectrum", r.rank_spectrum},
                       {"simple", r.simple},
                       {"constant_rank", r.constant_rank},
                       {"idempotent_count", r.idempotent_count},
                       {"grid_rows", r.grid_rows},
                       {"grid_cols", r.grid_cols},
                       {"periodicity", r.periodicity}};
    j["basic_type"]
        = r.basic_type ? nlohmann::json(*r.basic_type) : nlohmann::json();
    j["minimal_ideal"]
        = r.minimal_ideal ? nlohmann::json(*r.minimal_ideal) : nlohmann::json();
    j["decomposition"]
        = r.decomposition ? nlohmann::json(*r.decomposition) : nlohmann::json();
  }

  void from_json(nlohmann::json const& j, AnalysisReport& r) {
    j.at("machine").get_to(r.machine);
    j.at("closure_size").get_to(r.closure_size);
    j.at("elements").get_to(r.elements);
    j.at("rank_spectrum").get_to(r.rank_spectrum);
    j.at("simple").get_to(r.simple);
    j.at("constant_rank").get_to(r.constant_rank);
    j.at("idempotent_count").get_to(r.idempotent_count);
    j.at("grid_rows").get_to(r.grid_rows);
    j.at("grid_cols").get_to(r.grid_cols);
    j.at("periodicity").get_to(r.periodicity);
    r.basic_type.reset();
    r.minimal_ideal.reset();
    r.decomposition.reset();
    if (j.contains("basic_type") && !j["basic_type"].is_null()) {
      r.basic_type = j["basic_type"].get<std::string>();
    }
    if (j.contains("minimal_ideal") && !j["minimal_ideal"].is_null()) {
      r.minimal_ideal = j["minimal_ideal"].get<std::vector<std::size_t>>();
    }
    if (j.contains("decomposition") && !j["decomposition"].is_null()) {
      r.decomposition = j["decomposition"].get<DecompositionSummary>();
    }
  }

  namespace {
    template <typename Container>
    std::string joined(Container const& c, char const* sep = " ") {
      std::ostringstream os;
      bool               first = true;
      for (auto const& x : c) {
        os << (first ? "" : sep) << x;
        first = false;
      }
      return os.str();
    }

    void write_machine(std::ostream&         os,
                       std::string const&    name,
                       MachineSummary const& m) {
      os << "  " << name << ": " << m.states << " state"
         << (m.states == 1 ? "" : "s") << ", " << m.inputs.size() << " input"
         << (m.inputs.size() == 1 ? "" : "s") << '\n';
      for (auto const& in : m.inputs) {
        os << "    " << in.label << ": [" << joined(in.next) << "]\n";
      }
    }
  }  // namespace

  std::string to_text(AnalysisReport const& r) {
    std::ostringstream os;
    os << "machine: " << r.machine.states << " states, "
       << r.machine.inputs.size() << " inputs";
    std::vector<std::string> labels;
    for (auto const& in : r.machine.inputs) {
      labels.push_back(in.label);
    }
    os << " (" << joined(labels, ", ") << ")\n";

    os << "closure size: " << r.closure_size << '\n';
    for (std::size_t x = 0; x < r.elements.size(); ++x) {
      auto const& e = r.elements[x];
      os << "  " << x << ": [" << joined(e.image) << "]  word " << e.word
         << "  rank " << e.rank;
      if (e.idempotent) {
        os << "  idempotent";
      } else {
        os << "  tail " << e.tail << " period " << e.period;
      }
      os << '\n';
    }

    os << "rank spectrum: {";
    for (std::size_t k = 0; k < r.rank_spectrum.size(); ++k) {
      os << (k == 0 ? "" : ", ") << r.rank_spectrum[k].first << ':'
         << r.rank_spectrum[k].second;
    }
    os << "}\n";
    os << "simple: " << (r.simple ? "true" : "false") << '\n';
    os << "constant rank: " << (r.constant_rank ? "true" : "false") << '\n';
    os << "idempotents: " << r.idempotent_count << " (grid " << r.grid_rows
       << " x " << r.grid_cols << ")\n";
    os << "periodicity: max tail " << r.periodicity.max_tail << ", "
       << r.periodicity.elements_with_tail << " with tail, periods {"
       << joined(r.periodicity.periods, ", ") << "}\n";
    if (r.basic_type) {
      os << "basic type: " << *r.basic_type << '\n';
    }
    if (r.minimal_ideal) {
      os << "minimal ideal: {" << joined(*r.minimal_ideal, ", ") << "}\n";
    }
    if (r.decomposition) {
      auto const& d = *r.decomposition;
      os << "decomposition: " << d.kind << ", m = " << d.m << ", n = " << d.n
         << ", |G| = " << d.group_order
         << (d.group_abelian ? " (abelian" : " (non-abelian")
         << ", element orders " << joined(d.group_element_orders, ",")
         << ")\n";
      os << "  reference idempotent: " << d.reference << '\n';
      os << "  idempotent products: "
         << (d.idempotents_closed ? "all idempotent" : "not all idempotent");
      if (d.idempotents_closed != (d.kind == "direct")) {
        os << " (disagrees with the sandwich matrix)";
      }
      os << '\n';
      os << "  sandwich:\n";
      for (auto const& row : d.sandwich) {
        os << "    " << joined(row) << '\n';
      }
      write_machine(os, "branch", d.branch);
      write_machine(os, "reset", d.reset);
      write_machine(os, "permutation", d.permutation);
      os << "  components: " << (d.components_verified ? "verified" : "FAILED")
         << '\n';
      os << "  verification: " << (d.verified ? "pass" : "FAIL") << " ("
         << d.verification_message << ")\n";
    }
    return os.str();
  }

}  // namespace crsm::cli
