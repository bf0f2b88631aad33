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

#include <algorithm>  // for includes, min
#include <random>     // for mt19937_64

#include "crsm/errors.hpp"
#include "crsm/machine.hpp"
#include "crsm/transform.hpp"
#include "doctest.h"
#include "oracles.hpp"

namespace crsm {

  using oracle::image_of;

  TEST_CASE("StateTransform rejects out of range entries") {
    CHECK_THROWS_AS(StateTransform({0, 2}), DomainError);
    CHECK_THROWS_AS(StateTransform(std::vector<state_type>{}), DomainError);
    CHECK_NOTHROW(StateTransform({1, 1}));
  }

  TEST_CASE("StateTransform equality is image equality") {
    CHECK(StateTransform({0, 1, 1}) == StateTransform({0, 1, 1}));
    CHECK(StateTransform({0, 1, 1}) != StateTransform({0, 1, 0}));
    CHECK(StateTransform::identity(3) == StateTransform({0, 1, 2}));
    CHECK(StateTransform::constant(3, 2) == StateTransform({2, 2, 2}));
  }

  TEST_CASE("compose") {
    SUBCASE("branch generators copy from the left") {
      StateTransform const a{0, 1, 1}, b{0, 1, 0};
      CHECK(compose(a, b) == a);
      CHECK(compose(b, a) == b);
    }
    SUBCASE("identity is neutral") {
      StateTransform const x{2, 0, 0, 1};
      auto const           id = StateTransform::identity(4);
      CHECK(compose(id, x) == x);
      CHECK(compose(x, id) == x);
    }
    SUBCASE("swap squares to the identity") {
      StateTransform const s{1, 0};
      CHECK(compose(s, s) == StateTransform::identity(2));
    }
    SUBCASE("left to right order") {
      // q -> a[q] -> b[a[q]]
      StateTransform const a{1, 2, 0}, b{0, 0, 2};
      CHECK(compose(a, b) == StateTransform({0, 2, 0}));
      CHECK(compose(b, a) == StateTransform({1, 1, 0}));
    }
    SUBCASE("dimension mismatch") {
      CHECK_THROWS_AS(compose(StateTransform{0, 1}, StateTransform{0, 1, 2}),
                      SizeError);
    }
  }

  TEST_CASE("rank, range and kernel partition") {
    StateTransform const constant{2, 2, 2}, branch{0, 1, 1};
    auto const           id = StateTransform::identity(3);

    CHECK(rank(constant) == 1);
    CHECK(rank(id) == 3);
    CHECK(rank(branch) == 2);

    CHECK(range(constant) == std::vector<state_type>{2});
    CHECK(range(branch) == std::vector<state_type>{0, 1});
    CHECK(range(id) == std::vector<state_type>{0, 1, 2});

    CHECK(kernel_partition(branch) == Partition{{0}, {1, 2}});
    CHECK(kernel_partition(id) == Partition{{0}, {1}, {2}});
    CHECK(kernel_partition(constant) == Partition{{0, 1, 2}});

    CHECK(is_coarser_or_equal(Partition{{0, 1, 2}}, Partition{{0}, {1, 2}}));
    CHECK_FALSE(
        is_coarser_or_equal(Partition{{0}, {1, 2}}, Partition{{0, 1}, {2}}));
  }

  TEST_CASE("is_idempotent") {
    CHECK(is_idempotent(StateTransform{0, 1, 1}));
    CHECK_FALSE(is_idempotent(StateTransform{1, 0}));
    CHECK(is_idempotent(StateTransform::identity(4)));
    CHECK_FALSE(is_idempotent(StateTransform{1, 2, 2}));
  }

  TEST_CASE("iterate_profile matches the repeated-composition oracle") {
    SUBCASE("tail then fixed point") {
      StateTransform const y{1, 2, 2};
      auto const           p = iterate_profile(y);
      auto const           o = oracle::iterate(image_of(y));
      CHECK(o.tail == 1);
      CHECK(o.period == 1);
      CHECK(p.tail == o.tail);
      CHECK(p.period == o.period);
      CHECK(p.invariant_power == StateTransform({2, 2, 2}));
      CHECK(rank(p.powers[0]) == 2);
      CHECK(rank(p.powers[1]) == 1);
    }
    SUBCASE("pure cycle of length 2") {
      StateTransform const x{1, 2, 1};
      auto const           p = iterate_profile(x);
      auto const           o = oracle::iterate(image_of(x));
      CHECK(o.tail == 0);
      CHECK(o.period == 2);
      CHECK(p.tail == 0);
      CHECK(p.period == 2);
      CHECK(p.invariant_power == StateTransform({2, 1, 2}));
      CHECK(compose(p.invariant_power, p.invariant_power) == p.invariant_power);
      CHECK(p.invariant_exponent() == 2);
    }
    SUBCASE("idempotent") {
      StateTransform const e{0, 0, 2};
      auto const           p = iterate_profile(e);
      CHECK(p.tail == 0);
      CHECK(p.period == 1);
      CHECK(p.invariant_power == e);
    }
    SUBCASE("tail 2 into a 3-cycle") {
      // 0 -> 1 -> 2 -> 3 -> 4 -> 5 -> 3, state 0 is three steps from the cycle
      StateTransform const a{1, 2, 3, 4, 5, 3};
      auto const           p = iterate_profile(a);
      auto const           o = oracle::iterate(image_of(a));
      CHECK(p.tail == o.tail);
      CHECK(p.period == o.period);
      CHECK(p.tail == 2);
      CHECK(p.period == 3);
      CHECK(p.invariant_exponent() == 3);
      CHECK(is_idempotent(p.invariant_power));
    }
  }

  TEST_CASE("properties on random transforms") {
    std::mt19937_64 rng(0x5eed);
    for (int trial = 0; trial < 2000; ++trial) {
      auto const     n = oracle::draw(rng, 1, 6);
      StateTransform a(oracle::random_image(rng, n));
      StateTransform b(oracle::random_image(rng, n));
      StateTransform c(oracle::random_image(rng, n));
      auto const     ab = compose(a, b);

      CHECK(compose(ab, c) == compose(a, compose(b, c)));
      CHECK(image_of(ab) == oracle::then(image_of(a), image_of(b)));
      CHECK(rank(a) == kernel_partition(a).size());
      CHECK(rank(a) == oracle::distinct_values(image_of(a)));
      CHECK(rank(ab) <= std::min(rank(a), rank(b)));
      auto const rab = range(ab), rb = range(b);
      CHECK(std::includes(rb.begin(), rb.end(), rab.begin(), rab.end()));
      CHECK(is_coarser_or_equal(kernel_partition(ab), kernel_partition(a)));
      CHECK(is_idempotent(a) == (compose(a, a) == a));

      auto const p = iterate_profile(a);
      auto const o = oracle::iterate(image_of(a));
      REQUIRE(p.tail == o.tail);
      REQUIRE(p.period == o.period);
      REQUIRE(p.powers.size() == p.tail + p.period);
      std::size_t idempotent_powers = 0;
      for (std::size_t k = 0; k < p.powers.size(); ++k) {
        CHECK(image_of(p.powers[k]) == o.powers[k]);
        if (k + 1 <= p.tail) {
          CHECK(rank(p.powers[k + 1]) < rank(p.powers[k]));
        } else {
          CHECK(rank(p.powers[k]) == rank(p.powers[p.tail]));
        }
        idempotent_powers += is_idempotent(p.powers[k]) ? 1 : 0;
      }
      CHECK(idempotent_powers == 1);
      CHECK(is_idempotent(p.invariant_power));
    }
  }

  TEST_CASE("Machine validation") {
    CHECK_THROWS_AS(Machine(std::vector<Generator>{}), DomainError);
    CHECK_THROWS_AS(Machine({{"a", StateTransform{0, 1}},
                             {"a", StateTransform{1, 0}}}),
                    DomainError);
    CHECK_THROWS_AS(Machine({{"a", StateTransform{0, 1}},
                             {"b", StateTransform{1, 0, 2}}}),
                    SizeError);
    Machine const m({{"a", StateTransform{0, 1, 1}}});
    CHECK(m.number_of_states() == 3);
    CHECK(m.state_names() == std::vector<std::string>{"0", "1", "2"});
    CHECK(m.generator(0).label == "a");
  }

}  // namespace crsm
