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

// State transforms: total functions Q -> Q on a finite state set, composed
// left to right, i.e. q(ab) = (qa)b.

#ifndef CRSM_TRANSFORM_HPP_
#define CRSM_TRANSFORM_HPP_

#include <compare>           // for strong_ordering
#include <cstddef>           // for size_t
#include <cstdint>           // for uint32_t
#include <functional>        // for hash
#include <initializer_list>  // for initializer_list
#include <iosfwd>            // for ostream
#include <span>              // for span
#include <utility>           // for move
#include <vector>            // for vector

namespace crsm {

  using state_type = std::uint32_t;

  //! A total function on the states {0, ..., n - 1}. Entry q of the image is
  //! the next state of state q. Two transforms are equal iff their images are.
  class StateTransform {
   public:
    //! Throws DomainError if an entry is not in [0, image.size()) or the
    //! image is empty.
    explicit StateTransform(std::vector<state_type> image);
    StateTransform(std::initializer_list<state_type> image);

    static StateTransform identity(std::size_t n);
    static StateTransform constant(std::size_t n, state_type q);

    std::size_t size() const noexcept {
      return _image.size();
    }

    state_type operator[](std::size_t q) const {
      return _image[q];
    }

    std::span<state_type const> image() const noexcept {
      return _image;
    }

    bool operator==(StateTransform const&) const = default;
    std::strong_ordering operator<=>(StateTransform const&) const = default;

   private:
    struct unchecked_tag {};
    StateTransform(std::vector<state_type> image, unchecked_tag)
        : _image(std::move(image)) {}

    friend StateTransform compose(StateTransform const&,
                                  StateTransform const&);

    std::vector<state_type> _image;
  };

  std::ostream& operator<<(std::ostream&, StateTransform const&);

  //! The transform "a then b": result[q] = b[a[q]]. Throws SizeError when the
  //! state counts differ.
  StateTransform compose(StateTransform const& a, StateTransform const& b);

  //! Number of distinct next states.
  std::size_t rank(StateTransform const& a);

  //! Sorted set of distinct next states.
  std::vector<state_type> range(StateTransform const& a);

  using Partition = std::vector<std::vector<state_type>>;

  //! States grouped by common image. Blocks are sorted internally and
  //! ordered by their smallest member.
  Partition kernel_partition(StateTransform const& a);

  //! True iff every block of `fine` lies inside a block of `coarse`. Both
  //! must partition the same state set.
  bool is_coarser_or_equal(Partition const& coarse, Partition const& fine);

  bool is_idempotent(StateTransform const& a);

  //! The power sequence a, a^2, ..., a^(tail + period) of a single element
  //! together with its unique idempotent power.
  struct IterationProfile {
    std::size_t                 tail;
    std::size_t                 period;
    StateTransform              invariant_power;
    std::vector<StateTransform> powers;

    //! Position (1-based exponent) of the idempotent power.
    std::size_t invariant_exponent() const;
  };

  //! Enumerates powers until the first repeat a^(t + p + 1) = a^(t + 1).
  IterationProfile iterate_profile(StateTransform const& a);

}  // namespace crsm

template <>
struct std::hash<crsm::StateTransform> {
  std::size_t operator()(crsm::StateTransform const& x) const noexcept {
    std::size_t seed = x.size();
    for (auto q : x.image()) {
      seed ^= q + 0x9e3779b9 + (seed << 6) + (seed >> 2);
    }
    return seed;
  }
};

#endif  // CRSM_TRANSFORM_HPP_
