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

// The five order-2 basic machines and the 2 x 2 rectangular band, transcribed
// from their closure tables. State k of a table is state k here; the extra
// initial state (when a table needs one) is state 2, or state 4 for the band.

#ifndef CRSM_TESTS_SUPPORT_FIXTURES_HPP_
#define CRSM_TESTS_SUPPORT_FIXTURES_HPP_

#include "crsm/machine.hpp"

namespace crsm::fixtures {

  // periodic 2-counter, single generator "1"
  inline Machine c2() {
    return Machine({{"1", StateTransform{1, 0}}});
  }

  // monotone 2-counter, single generator "1"
  inline Machine u2() {
    return Machine({{"1", StateTransform{0, 0, 1}}});
  }

  // two ordered idempotents
  inline Machine h2() {
    return Machine({{"1", StateTransform{0, 1}}, {"0", StateTransform{0, 0}}});
  }

  // 2-branch
  inline Machine l2() {
    return Machine(
        {{"1", StateTransform{0, 1, 1}}, {"0", StateTransform{0, 1, 0}}});
  }

  // set/reset
  inline Machine r2() {
    return Machine({{"1", StateTransform{1, 1}}, {"0", StateTransform{0, 0}}});
  }

  // L2 x R2 on states a, b, c, d, e = 0..4 with c = ab and d = ba
  inline Machine l2_x_r2() {
    return Machine({{"a", StateTransform{0, 3, 0, 3, 0}},
                    {"b", StateTransform{2, 1, 2, 1, 1}},
                    {"c", StateTransform{2, 1, 2, 1, 2}},
                    {"d", StateTransform{0, 3, 0, 3, 3}}});
  }

  // generates all 27 transforms of 3 states
  inline Machine full_3() {
    return Machine({{"s", StateTransform{1, 0, 2}},
                    {"c", StateTransform{1, 2, 0}},
                    {"r", StateTransform{0, 0, 2}}});
  }

}  // namespace crsm::fixtures

#endif  // CRSM_TESTS_SUPPORT_FIXTURES_HPP_
