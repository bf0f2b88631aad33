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

#include "crsm/transform.hpp"

#include <algorithm>      // for sort, unique, all_of
#include <numeric>        // for iota
#include <ostream>        // for ostream
#include <string>         // for to_string
#include <unordered_map>  // for unordered_map

#include "crsm/errors.hpp"

namespace crsm {

  StateTransform::StateTransform(std::vector<state_type> image)
      : _image(std::move(image)) {
    if (_image.empty()) {
      throw DomainError("a state transform needs at least one state");
    }
    auto const n = _image.size();
    for (std::size_t q = 0; q < n; ++q) {
      if (_image[q] >= n) {
        throw DomainError("entry " + std::to_string(q) + " of the image is "
                          + std::to_string(_image[q])
                          + ", expected a value in [0, "
                          + std::to_string(n) + ")");
      }
    }
  }

  StateTransform::StateTransform(std::initializer_list<state_type> image)
      : StateTransform(std::vector<state_type>(image)) {}

  StateTransform StateTransform::identity(std::size_t n) {
    std::vector<state_type> image(n);
    std::iota(image.begin(), image.end(), state_type(0));
    return StateTransform(std::move(image));
  }

  StateTransform StateTransform::constant(std::size_t n, state_type q) {
    return StateTransform(std::vector<state_type>(n, q));
  }

  std::ostream& operator<<(std::ostream& os, StateTransform const& x) {
    os << '[';
    for (std::size_t q = 0; q < x.size(); ++q) {
      os << (q == 0 ? "" : " ") << x[q];
    }
    return os << ']';
  }

  StateTransform compose(StateTransform const& a, StateTransform const& b) {
    if (a.size() != b.size()) {
      throw SizeError("cannot compose transforms on "
                      + std::to_string(a.size()) + " and "
                      + std::to_string(b.size()) + " states");
    }
    std::vector<state_type> image(a.size());
    for (std::size_t q = 0; q < a.size(); ++q) {
      image[q] = b._image[a._image[q]];
    }
    return StateTransform(std::move(image), StateTransform::unchecked_tag{});
  }

  std::size_t rank(StateTransform const& a) {
    return range(a).size();
  }

  std::vector<state_type> range(StateTransform const& a) {
    std::vector<state_type> result(a.image().begin(), a.image().end());
    std::sort(result.begin(), result.end());
    result.erase(std::unique(result.begin(), result.end()), result.end());
    return result;
  }

  Partition kernel_partition(StateTransform const& a) {
    Partition                                   blocks;
    std::unordered_map<state_type, std::size_t> block_of_image;
    for (std::size_t q = 0; q < a.size(); ++q) {
      auto [it, inserted] = block_of_image.try_emplace(a[q], blocks.size());
      if (inserted) {
        blocks.emplace_back();
      }
      blocks[it->second].push_back(static_cast<state_type>(q));
    }
    return blocks;
  }

  bool is_coarser_or_equal(Partition const& coarse, Partition const& fine) {
    std::unordered_map<state_type, std::size_t> block_of_state;
    for (std::size_t i = 0; i < coarse.size(); ++i) {
      for (auto q : coarse[i]) {
        block_of_state[q] = i;
      }
    }
    return std::all_of(fine.begin(), fine.end(), [&](auto const& block) {
      return std::all_of(block.begin(), block.end(), [&](state_type q) {
        return block_of_state.at(q) == block_of_state.at(block.front());
      });
    });
  }

  bool is_idempotent(StateTransform const& a) {
    for (std::size_t q = 0; q < a.size(); ++q) {
      if (a[a[q]] != a[q]) {
        return false;
      }
    }
    return true;
  }

  std::size_t IterationProfile::invariant_exponent() const {
    // the unique multiple of the period inside the cycle [tail + 1, tail + period]
    return (tail / period + 1) * period;
  }

  IterationProfile iterate_profile(StateTransform const& a) {
    std::vector<StateTransform>                         powers{a};
    std::unordered_map<StateTransform, std::size_t> seen{{a, 0}};
    while (true) {
      auto next = compose(powers.back(), a);
      auto it   = seen.find(next);
      if (it != seen.end()) {
        std::size_t const tail   = it->second;
        std::size_t const period = powers.size() - tail;
        IterationProfile  result{tail, period, a, std::move(powers)};
        result.invariant_power = result.powers[result.invariant_exponent() - 1];
        return result;
      }
      seen.emplace(next, powers.size());
      powers.push_back(std::move(next));
    }
  }

}  // namespace crsm
