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

#ifndef CRSM_MACHINE_HPP_
#define CRSM_MACHINE_HPP_

#include <cstddef>  // for size_t
#include <string>   // for string
#include <vector>   // for vector

#include "crsm/transform.hpp"

namespace crsm {

  struct Generator {
    std::string    label;
    StateTransform transform;

    bool operator==(Generator const&) const = default;
  };

  //! A state transition table: one transform per input symbol, all on the
  //! same state set. Input labels are unique and there is at least one input.
  class Machine {
   public:
    //! State names default to "0", "1", ...
    explicit Machine(std::vector<Generator> generators);
    Machine(std::vector<std::string> state_names,
            std::vector<Generator>   generators);

    std::size_t number_of_states() const noexcept {
      return _state_names.size();
    }

    std::size_t number_of_generators() const noexcept {
      return _generators.size();
    }

    std::vector<std::string> const& state_names() const noexcept {
      return _state_names;
    }

    std::vector<Generator> const& generators() const noexcept {
      return _generators;
    }

    Generator const& generator(std::size_t i) const {
      return _generators.at(i);
    }

    bool operator==(Machine const&) const = default;

   private:
    void validate() const;

    std::vector<std::string> _state_names;
    std::vector<Generator>   _generators;
  };

  //! A machine with generators labelled "0", "1", ... in the given order.
  Machine make_machine(std::vector<StateTransform> transforms);

}  // namespace crsm

#endif  // CRSM_MACHINE_HPP_
