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

#ifndef CRSM_TOOLS_CLI_REPORT_HPP_
#define CRSM_TOOLS_CLI_REPORT_HPP_

#include <array>     // for array
#include <cstddef>   // for size_t
#include <optional>  // for optional
#include <string>    // for string
#include <utility>   // for pair
#include <vector>    // for vector

#include "crsm/decompose.hpp"
#include "crsm/machine.hpp"
#include "json.hpp"

namespace crsm::cli {

  struct InputSummary {
    std::string             label;
    std::vector<state_type> next;

    bool operator==(InputSummary const&) const = default;
  };

  struct MachineSummary {
    std::size_t               states = 0;
    std::vector<InputSummary> inputs;

    bool operator==(MachineSummary const&) const = default;
  };

  struct ElementSummary {
    std::vector<state_type> image;
    std::string             word;
    std::size_t             rank       = 0;
    bool                    idempotent = false;
    std::size_t             tail       = 0;
    std::size_t             period     = 0;

    bool operator==(ElementSummary const&) const = default;
  };

  struct PeriodicitySummary {
    std::size_t              max_tail        = 0;
    std::size_t              elements_with_tail = 0;
    std::vector<std::size_t> periods;  // distinct, ascending

    bool operator==(PeriodicitySummary const&) const = default;
  };

  struct DecompositionSummary {
    std::size_t                             m           = 0;
    std::size_t                             n           = 0;
    std::size_t                             group_order = 0;
    bool                                    group_abelian = true;
    std::vector<std::size_t>                group_element_orders;
    std::size_t                             reference = 0;
    std::string                             kind;
    bool                                    idempotents_closed = true;
    std::vector<std::vector<std::size_t>>   sandwich;  // n x m element indices
    std::vector<std::array<std::size_t, 3>> coords;    // (row, col, group element)
    MachineSummary                          branch;
    MachineSummary                          reset;
    MachineSummary                          permutation;
    bool                                    components_verified = false;
    bool                                    verified            = false;
    std::string                             verification_message;

    bool operator==(DecompositionSummary const&) const = default;
  };

  //! Everything `analyze`, `decompose` and `verify` print, as plain data that
  //! round-trips through JSON.
  struct AnalysisReport {
    MachineSummary                                   machine;
    std::size_t                                      closure_size = 0;
    std::vector<ElementSummary>                      elements;
    std::vector<std::pair<std::size_t, std::size_t>> rank_spectrum;  // rank, count; highest first
    bool                                             simple        = false;
    bool                                             constant_rank = false;
    std::size_t                                      idempotent_count = 0;
    std::size_t                                      grid_rows        = 0;
    std::size_t                                      grid_cols        = 0;
    PeriodicitySummary                               periodicity;
    std::optional<std::string>                       basic_type;
    std::optional<std::vector<std::size_t>>          minimal_ideal;
    std::optional<DecompositionSummary>              decomposition;

    bool operator==(AnalysisReport const&) const = default;
  };

  MachineSummary summarize(Machine const& m);
  AnalysisReport make_report(Machine const& m, MachineReport const& r);

  void to_json(nlohmann::json& j, AnalysisReport const& r);
  void from_json(nlohmann::json const& j, AnalysisReport& r);

  //! Human readable rendering; byte-identical across runs.
  std::string to_text(AnalysisReport const& r);

}  // namespace crsm::cli

#endif  // CRSM_TOOLS_CLI_REPORT_HPP_
