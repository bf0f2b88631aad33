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

#include "crsm/machine.hpp"

#include <unordered_set>  // for unordered_set
#include <utility>        // for move

#include "crsm/errors.hpp"

namespace crsm {

  namespace {
    std::vector<std::string> default_state_names(
        std::vector<Generator> const& generators) {
      if (generators.empty()) {
        throw DomainError("a machine needs at least one input");
      }
      std::vector<std::string> names;
      for (std::size_t q = 0; q < generators.front().transform.size(); ++q) {
        names.push_back(std::to_string(q));
      }
      return names;
    }
  }  // namespace

  Machine::Machine(std::vector<Generator> generators)
      : _state_names(default_state_names(generators)),
        _generators(std::move(generators)) {
    validate();
  }

  Machine::Machine(std::vector<std::string> state_names,
                   std::vector<Generator>   generators)
      : _state_names(std::move(state_names)),
        _generators(std::move(generators)) {
    validate();
  }

  void Machine::validate() const {
    if (_generators.empty()) {
      throw DomainError("a machine needs at least one input");
    }
    std::unordered_set<std::string> labels;
    for (auto const& g : _generators) {
      if (g.transform.size() != _state_names.size()) {
        throw SizeError("input '" + g.label + "' acts on "
                        + std::to_string(g.transform.size())
                        + " states, the machine has "
                        + std::to_string(_state_names.size()));
      }
      if (!labels.insert(g.label).second) {
        throw DomainError("duplicate input label '" + g.label + "'");
      }
    }
  }

  Machine make_machine(std::vector<StateTransform> transforms) {
    std::vector<Generator> generators;
    for (std::size_t i = 0; i < transforms.size(); ++i) {
      generators.push_back({std::to_string(i), std::move(transforms[i])});
    }
    return Machine(std::move(generators));
  }

}  // namespace crsm
