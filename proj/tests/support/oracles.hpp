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

// Test-only reference implementations. Nothing here calls into the library's
// composition or enumeration code; they work on raw std::vector images so the
// checks stay independent of the code under test.

#ifndef CRSM_TESTS_SUPPORT_ORACLES_HPP_
#define CRSM_TESTS_SUPPORT_ORACLES_HPP_

#include <cstddef>  // for size_t
#include <cstdint>  // for uint32_t
#include <random>   // for mt19937_64
#include <set>      // for set
#include <utility>  // for swap
#include <vector>   // for vector

#include "crsm/machine.hpp"
#include "crsm/transform.hpp"

namespace crsm::oracle {

  using Image = std::vector<std::uint32_t>;

  inline Image image_of(StateTransform const& x) {
    return Image(x.image().begin(), x.image().end());
  }

  // left to right: first a, then b
  inline Image then(Image const& a, Image const& b) {
    Image r(a.size());
    for (std::size_t q = 0; q < a.size(); ++q) {
      r[q] = b[a[q]];
    }
    return r;
  }

  inline std::size_t distinct_values(Image const& a) {
    return std::set<std::uint32_t>(a.begin(), a.end()).size();
  }

  // Every transform produced by a non-empty word, found level by level: words
  // of length k + 1 are g.w for words w of length k (extension on the left).
  // Stops after the first level that adds nothing, or at length n^n.
  inline std::set<Image> word_closure(std::vector<Image> const& gens) {
    std::set<Image> all(gens.begin(), gens.end());
    std::set<Image> level = all;
    std::size_t     n     = gens.front().size();
    std::size_t     bound = 1;
    for (std::size_t i = 0; i < n; ++i) {
      bound *= n;
    }
    for (std::size_t length = 1; length < bound && !level.empty(); ++length) {
      std::set<Image> next;
      for (auto const& w : level) {
        for (auto const& g : gens) {
          auto gw = then(g, w);
          if (all.insert(gw).second) {
            next.insert(gw);
          }
        }
      }
      level = std::move(next);
    }
    return all;
  }

  // Tail and period by repeated composition and a linear scan for the first
  // repeated power.
  struct Iteration {
    std::size_t        tail;
    std::size_t        period;
    std::vector<Image> powers;  // a^1 .. a^(tail + period)
  };

  inline Iteration iterate(Image const& a) {
    std::vector<Image> powers{a};
    while (true) {
      auto next = then(powers.back(), a);
      for (std::size_t i = 0; i < powers.size(); ++i) {
        if (powers[i] == next) {
          return {i, powers.size() - i, powers};
        }
      }
      powers.push_back(next);
    }
  }

  // All n^n maps on n states.
  inline std::vector<Image> all_transforms(std::size_t n) {
    std::vector<Image> result;
    Image              x(n, 0);
    while (true) {
      result.push_back(x);
      std::size_t q = 0;
      while (q < n && ++x[q] == n) {
        x[q++] = 0;
      }
      if (q == n) {
        return result;
      }
    }
  }

  // A finite group given by its multiplication table over 0..k-1, 0 the
  // identity.
  struct Group {
    std::size_t                           order;
    std::vector<std::vector<std::size_t>> table;

    std::size_t mul(std::size_t a, std::size_t b) const {
      return table[a][b];
    }
  };

  inline Group cyclic_group(std::size_t k) {
    Group g{k, std::vector<std::vector<std::size_t>>(k, std::vector<std::size_t>(k))};
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = 0; b < k; ++b) {
        g.table[a][b] = (a + b) % k;
      }
    }
    return g;
  }

  // S3 as permutations of {0,1,2}, composed left to right, identity first.
  inline Group symmetric_group_3() {
    std::vector<Image> perms = {
        {0, 1, 2}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}, {1, 2, 0}, {2, 0, 1}};
    Group g{6, std::vector<std::vector<std::size_t>>(6, std::vector<std::size_t>(6))};
    for (std::size_t a = 0; a < 6; ++a) {
      for (std::size_t b = 0; b < 6; ++b) {
        auto ab = then(perms[a], perms[b]);
        for (std::size_t c = 0; c < 6; ++c) {
          if (perms[c] == ab) {
            g.table[a][b] = c;
          }
        }
      }
    }
    return g;
  }

  // Abstract Rees matrix semigroup on triples (i, j, g) with
  // (i1, j1, g1)(i2, j2, g2) = (i1, j2, g1 P[j1][i2] g2).
  struct ReesProduct {
    std::size_t                           m;
    std::size_t                           n;
    Group                                 group;
    std::vector<std::vector<std::size_t>> sandwich;  // n x m

    std::size_t size() const {
      return m * n * group.order;
    }

    std::size_t encode(std::size_t i, std::size_t j, std::size_t g) const {
      return (i * n + j) * group.order + g;
    }

    std::size_t mul(std::size_t x, std::size_t y) const {
      auto const k  = group.order;
      auto const i1 = x / (n * k), j1 = (x / k) % n, g1 = x % k;
      auto const i2 = y / (n * k), j2 = (y / k) % n, g2 = y % k;
      return encode(i1, j2, group.mul(group.mul(g1, sandwich[j1][i2]), g2));
    }

    // Right-regular action on S with an adjoined identity state (the last
    // state), which makes the representation faithful for every semigroup.
    std::vector<Image> regular_transforms() const {
      std::vector<Image> result;
      for (std::size_t s = 0; s < size(); ++s) {
        Image t(size() + 1);
        for (std::size_t x = 0; x < size(); ++x) {
          t[x] = static_cast<std::uint32_t>(mul(x, s));
        }
        t[size()] = static_cast<std::uint32_t>(s);
        result.push_back(t);
      }
      return result;
    }

    Machine machine() const {
      std::vector<StateTransform> gens;
      for (auto const& t : regular_transforms()) {
        gens.emplace_back(t);
      }
      return make_machine(std::move(gens));
    }
  };

  // 2 x 2 x C2 with P = [[e, e], [e, g]]
  inline ReesProduct semidirect_2x2_c2() {
    return {2, 2, cyclic_group(2), {{0, 0}, {0, 1}}};
  }

  // Draws with rng() % bound rather than a distribution object, so samples
  // are identical on every standard library.
  inline std::size_t draw(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
    return lo + static_cast<std::size_t>(rng() % (hi - lo + 1));
  }

  inline Image random_image(std::mt19937_64& rng, std::size_t n) {
    Image x(n);
    for (auto& q : x) {
      q = static_cast<std::uint32_t>(draw(rng, 0, n - 1));
    }
    return x;
  }

  // 2-4 states, 1-3 generators, uniform entries.
  inline Machine random_machine(std::mt19937_64& rng,
                                std::size_t      min_states = 2,
                                std::size_t      max_states = 4,
                                std::size_t      max_gens   = 3) {
    auto const                  n = draw(rng, min_states, max_states);
    auto const                  k = draw(rng, 1, max_gens);
    std::vector<StateTransform> gens;
    for (std::size_t i = 0; i < k; ++i) {
      gens.emplace_back(random_image(rng, n));
    }
    return make_machine(std::move(gens));
  }

  // Random idempotent: a random non-empty set of fixed points, everything
  // else sent somewhere into it.
  inline Image random_idempotent(std::mt19937_64& rng, std::size_t n) {
    Image fixed;
    for (std::uint32_t q = 0; q < n; ++q) {
      if (draw(rng, 0, 1) == 1) {
        fixed.push_back(q);
      }
    }
    if (fixed.empty()) {
      fixed.push_back(static_cast<std::uint32_t>(draw(rng, 0, n - 1)));
    }
    Image x(n);
    for (std::uint32_t q = 0; q < n; ++q) {
      x[q] = fixed[draw(rng, 0, fixed.size() - 1)];
    }
    for (auto q : fixed) {
      x[q] = q;
    }
    return x;
  }

  inline Machine random_idempotent_machine(std::mt19937_64& rng,
                                           std::size_t      max_states = 4,
                                           std::size_t      max_gens   = 3) {
    auto const                  n = draw(rng, 2, max_states);
    auto const                  k = draw(rng, 1, max_gens);
    std::vector<StateTransform> gens;
    for (std::size_t i = 0; i < k; ++i) {
      gens.emplace_back(random_idempotent(rng, n));
    }
    return make_machine(std::move(gens));
  }

  // Generators are random permutations, so the closure is a group.
  inline Machine random_permutation_machine(std::mt19937_64& rng,
                                            std::size_t      n,
                                            std::size_t      gens) {
    std::vector<StateTransform> result;
    for (std::size_t i = 0; i < gens; ++i) {
      Image p(n);
      for (std::size_t q = 0; q < n; ++q) {
        p[q] = static_cast<std::uint32_t>(q);
      }
      for (std::size_t q = n - 1; q > 0; --q) {
        std::swap(p[q], p[draw(rng, 0, q)]);
      }
      result.emplace_back(p);
    }
    return make_machine(std::move(result));
  }

}  // namespace crsm::oracle

#endif  // CRSM_TESTS_SUPPORT_ORACLES_HPP_
